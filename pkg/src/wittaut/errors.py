"""Exception hierarchy.

Every error carries a stable ``code`` string and the CLI exit code it maps to.
Exit codes: 1 property violated, 2 input parse error, 3 mathematical
precondition violated, 4 search cap exceeded.
"""


class WittError(Exception):
    code = "WittError"
    exit_code = 3

    def __init__(self, message=""):
        super().__init__(message)
        self.message = message


class ParseError(WittError):
    code = "ParseError"
    exit_code = 2


# preconditions (exit 3)

class ZeroDenominator(WittError, ZeroDivisionError):
    code = "ZeroDenominator"


class NotSquare(WittError):
    code = "NotSquare"


class NotUnimodular(WittError):
    code = "NotUnimodular"


class RankMismatch(WittError):
    code = "RankMismatch"


class AlgebraMismatch(WittError):
    code = "AlgebraMismatch"


class ShapeMismatch(WittError):
    code = "ShapeMismatch"


class NotKroneckerPairing(WittError):
    code = "NotKroneckerPairing"


class InvalidTriple(WittError):
    code = "InvalidTriple"


class NotCoprime(WittError):
    code = "NotCoprime"


class TooSmallConstant(WittError):
    code = "TooSmallConstant"


class HypothesisViolated(WittError):
    code = "HypothesisViolated"


class NotSimpleAmbient(WittError):
    code = "NotSimpleAmbient"


class UnboundedSupport(WittError):
    code = "UnboundedSupport"


class OracleInvalidTriple(WittError):
    code = "OracleInvalidTriple"


# property violations (exit 1)

class PropertyViolation(WittError):
    code = "PropertyViolation"
    exit_code = 1


class RecoveryMismatch(PropertyViolation):
    code = "RecoveryMismatch"


class WitnessDoesNotFixW(PropertyViolation):
    code = "WitnessDoesNotFixW"


class NotLinearOnProbes(PropertyViolation):
    code = "NotLinearOnProbes"


# search limits (exit 4)

class SearchSpaceTooLarge(WittError):
    code = "SearchSpaceTooLarge"
    exit_code = 4
