"""Generalized Witt algebras W(A, T, phi) with A = Z^n (or Z^(inf)).

Exponents and tangent vectors share one sparse representation: a sorted
tuple of ``(index, value)`` pairs with 1-based indices and no zero values.
Finite algebras additionally bound the indices by n and m.

The bracket is

    [t^a D, t^b E] = t^(a+b) (phi(D, b) E - phi(E, a) D).
"""

from dataclasses import dataclass

from . import linalg
from .errors import AlgebraMismatch, NotKroneckerPairing, ShapeMismatch
from .scalars import QQ, expand_rows

INF = None


# ---------------------------------------------------------------------------
# sparse vectors

def sparse(pairs):
    """Canonical sparse vector from (index, value) pairs; duplicates are summed."""
    acc = {}
    for i, v in pairs:
        acc[i] = acc.get(i, 0) + v
    return tuple((i, v) for i, v in sorted(acc.items()) if v != 0)


def from_dense(vec):
    return tuple((i + 1, v) for i, v in enumerate(vec) if v != 0)


def to_dense(sv, n):
    out = [0] * n
    for i, v in sv:
        if i > n:
            raise ShapeMismatch(f"index {i} exceeds dimension {n}")
        out[i - 1] = v
    return out


def sv_add(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for i, v in b:
        d[i] = d.get(i, 0) + v
    return tuple((i, v) for i, v in sorted(d.items()) if v != 0)


def sv_scale(a, c):
    if c == 0:
        return ()
    return tuple((i, v * c) for i, v in a)


def sv_neg(a):
    return tuple((i, -v) for i, v in a)


def sv_support_max(a):
    return a[-1][0] if a else 0


def as_vector(v):
    """Sparse vector from a dense sequence or an {index: value} mapping."""
    if isinstance(v, dict):
        return sparse((int(i), x) for i, x in v.items())
    return from_dense(v)


def coerce_vector(v):
    """Accept an already-sparse tuple of pairs, a dense sequence, or a dict."""
    if isinstance(v, tuple) and all(isinstance(p, tuple) for p in v):
        return v
    return as_vector(v)


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Algebra:
    """Descriptor of W(Z^n, V_m, phi).

    ``phi`` is the m x n pairing matrix with ``phi[i][j] = phi(d_i, e_j)``,
    or None for the Kronecker pairing.  ``rank = dim = None`` is W_inf.
    """

    rank: object
    dim: object
    field: object = QQ
    phi: object = None

    @classmethod
    def witt(cls, n, field=QQ):
        return cls(n, n, field, None)

    @classmethod
    def general(cls, phi, field=QQ):
        phi = tuple(tuple(field.coerce(v) for v in row) for row in phi)
        m = len(phi)
        n = len(phi[0]) if m else 0
        if any(len(r) != n for r in phi):
            raise ShapeMismatch("ragged pairing matrix")
        return cls(n, m, field, phi)

    @classmethod
    def infinite(cls, field=QQ):
        return cls(INF, INF, field, None)

    @property
    def is_infinite(self):
        return self.rank is INF

    @property
    def is_kronecker(self):
        return self.phi is None

    def pairing_matrix(self):
        if self.is_infinite:
            raise ShapeMismatch("W_inf has no finite pairing matrix")
        if self.phi is None:
            return tuple(tuple(1 if i == j else 0 for j in range(self.rank))
                         for i in range(self.dim))
        return self.phi

    def pairing_row(self, tan):
        """The functional phi(tan, .) as an {exponent index: scalar} dict."""
        if self.phi is None:
            return dict(tan)
        row = {}
        for i, d in tan:
            for j, p in enumerate(self.phi[i - 1]):
                if p != 0:
                    row[j + 1] = row.get(j + 1, 0) + d * p
        return {j: v for j, v in row.items() if v != 0}

    def check_exp(self, e):
        if not self.is_infinite and e and e[-1][0] > self.rank:
            raise ShapeMismatch(f"exponent index {e[-1][0]} > rank {self.rank}")
        if e and e[0][0] < 1:
            raise ShapeMismatch("exponent indices start at 1")

    def check_tan(self, d):
        if not self.is_infinite and d and d[-1][0] > self.dim:
            raise ShapeMismatch(f"tangent index {d[-1][0]} > dim {self.dim}")
        if d and d[0][0] < 1:
            raise ShapeMismatch("tangent indices start at 1")

    def __repr__(self):
        if self.is_infinite:
            return "W_inf"
        p = "kronecker" if self.phi is None else self.phi
        return f"W(Z^{self.rank}, V_{self.dim}, {p}, {self.field!r})"


def _pair(row, exp_dict):
    s = 0
    for j, v in row.items():
        a = exp_dict.get(j)
        if a:
            s = s + v * a
    return s


def phi_pair(alg, d, a):
    """phi(d, a); d and a may be sparse, dense or {index: value}."""
    d, a = coerce_vector(d), coerce_vector(a)
    alg.check_tan(d)
    alg.check_exp(a)
    return _pair(alg.pairing_row(d), dict(a))


# ---------------------------------------------------------------------------

class WittElement:
    """A finite sum of terms t^a D, stored as {exponent: tangent}."""

    __slots__ = ("algebra", "terms", "_key")

    def __init__(self, algebra, terms=None, _trusted=False):
        self.algebra = algebra
        self._key = None
        if _trusted:
            self.terms = terms
            return
        acc = {}
        for e, d in (terms.items() if isinstance(terms, dict) else (terms or ())):
            e = tuple(e)
            d = tuple(d)
            algebra.check_exp(e)
            algebra.check_tan(d)
            acc[e] = sv_add(acc.get(e, ()), d)
        self.terms = {e: d for e, d in acc.items() if d}

    @classmethod
    def zero(cls, alg):
        return cls(alg, {}, _trusted=True)

    @classmethod
    def monomial(cls, alg, exp, tan):
        """t^exp tan, with exp/tan given dense or as {index: value} dicts."""
        return cls(alg, [(as_vector(exp), as_vector(tan))])

    @classmethod
    def from_dense_terms(cls, alg, pairs):
        return cls(alg, [(as_vector(e), as_vector(d)) for e, d in pairs])

    def is_zero(self):
        return not self.terms

    def _binop_check(self, other):
        if not isinstance(other, WittElement):
            raise TypeError(f"expected WittElement, got {type(other).__name__}")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch(f"{self.algebra!r} vs {other.algebra!r}")

    def __add__(self, other):
        self._binop_check(other)
        acc = dict(self.terms)
        for e, d in other.terms.items():
            v = sv_add(acc.get(e, ()), d)
            if v:
                acc[e] = v
            else:
                acc.pop(e, None)
        return WittElement(self.algebra, acc, _trusted=True)

    def __neg__(self):
        return WittElement(self.algebra, {e: sv_neg(d) for e, d in self.terms.items()},
                           _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return WittElement.zero(self.algebra)
        return WittElement(self.algebra, {e: sv_scale(d, c) for e, d in self.terms.items()},
                           _trusted=True)

    def __rmul__(self, c):
        return self.scale(c)

    def sort_key(self, e):
        if self.algebra.is_infinite:
            return e
        return tuple(to_dense(e, self.algebra.rank))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def key(self):
        if self._key is None:
            self._key = tuple(self.sorted_terms())
        return self._key

    def support(self):
        return set(self.terms)

    def __eq__(self, other):
        if not isinstance(other, WittElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, d in self.sorted_terms():
            ex = ",".join(f"{i}:{v}" for i, v in e) or "0"
            tn = " + ".join(f"{v}*d{i}" for i, v in d)
            parts.append(f"t^({ex})({tn})")
        return " + ".join(parts)


def bracket(x, y):
    """Bilinear extension of [t^a D, t^b E] = t^(a+b)(phi(D,b)E - phi(E,a)D)."""
    x._binop_check(y)
    alg = x.algebra
    if not x.terms or not y.terms:
        return WittElement.zero(alg)
    yterms = [(b, e, dict(b), alg.pairing_row(e)) for b, e in y.terms.items()]
    acc = {}
    for a, d in x.terms.items():
        adict = dict(a)
        drow = alg.pairing_row(d)
        for b, e, bdict, erow in yterms:
            p = _pair(drow, bdict)
            q = _pair(erow, adict)
            if p == 0 and q == 0:
                continue
            g = sv_add(a, b)
            slot = acc.get(g)
            if slot is None:
                slot = acc[g] = {}
            if p != 0:
                for i, v in e:
                    slot[i] = slot.get(i, 0) + p * v
            if q != 0:
                for i, v in d:
                    slot[i] = slot.get(i, 0) - q * v
    terms = {}
    for g, slot in acc.items():
        tan = tuple((i, v) for i, v in sorted(slot.items()) if v != 0)
        if tan:
            terms[g] = tan
    return WittElement(alg, terms, _trusted=True)


def graded_components(x):
    """Homogeneous parts (exponent, x_exponent) in canonical order."""
    return [(e, WittElement(x.algebra, {e: d}, _trusted=True)) for e, d in x.sorted_terms()]


def act_on(x, poly):
    """Apply x, read as a derivation of the Laurent polynomials, to ``poly``.

    ``poly`` maps sparse exponents to scalars; d_i acts as t_i d/dt_i, so
    t^a d_i sends t^b to b_i t^(a+b).
    """
    if not x.algebra.is_kronecker:
        raise NotKroneckerPairing("derivation action needs the Kronecker pairing")
    out = {}
    for a, d in x.terms.items():
        for b, c in poly.items():
            bd = dict(b)
            s = 0
            for i, v in d:
                if i in bd:
                    s = s + v * bd[i]
            if s != 0:
                g = sv_add(a, b)
                out[g] = out.get(g, 0) + s * c
    return {g: c for g, c in out.items() if c != 0}


def act(x, beta):
    """x applied to the monomial t^beta, as a sorted list of (exponent, scalar)."""
    res = act_on(x, {coerce_vector(beta): 1})
    return sorted(res.items(), key=lambda kv: x.sort_key(kv[0]))


def is_simple(alg):
    """Simplicity test: n >= 1 and phi nondegenerate in both arguments.

    The exponent side asks for a trivial integer kernel of phi; over Q(x) the
    rows are expanded coefficient-wise so the test is a rational rank check.
    """
    if alg.is_infinite:
        return True
    n, m = alg.rank, alg.dim
    if n < 1 or m < 1:
        return False
    phi = [list(r) for r in alg.pairing_matrix()]
    if linalg.rank(expand_rows(alg.field, phi), QQ) != n:
        return False
    return linalg.rank(phi, alg.field) == m
