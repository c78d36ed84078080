"""Automorphisms theta(chi, sigma, tau) of simple generalized Witt algebras.

A triple acts by ``t^a D -> chi(a) t^(sigma a) (tau D)`` where chi is a
character (stored by its values on the basis vectors), sigma is a unimodular
integer matrix and tau an invertible scalar matrix.  Validity is the
compatibility ``tau^T Phi sigma == Phi``.

For W_inf a triple of size N acts by its matrices on the first N coordinates
and as the identity on all later ones.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd

from . import linalg
from .errors import (HypothesisViolated, InvalidTriple, NotCoprime,
                     SearchSpaceTooLarge, ShapeMismatch, TooSmallConstant)
from .intlat import (hnf, int_identity, int_matmul, int_matvec, is_unimodular,
                     unimodular_inverse)
from . import kernels
from .scalars import torsion_solutions
from .witt import WittElement, from_dense, to_dense


def spow(field, c, k):
    """c**k inside the field, negative k included."""
    if k >= 0:
        return c ** k
    return field.div(1, c ** (-k))


@dataclass(frozen=True)
class AutTriple:
    chi: tuple
    sigma: tuple
    tau: tuple

    @property
    def exp_size(self):
        return len(self.sigma)

    @property
    def tan_size(self):
        return len(self.tau)

    def padded(self, ne, nt=None):
        """Same automorphism written with identity blocks up to size ne (W_inf)."""
        nt = ne if nt is None else nt
        if ne < self.exp_size or nt < self.tan_size:
            raise ShapeMismatch("cannot shrink a triple")
        chi = tuple(self.chi) + (1,) * (ne - self.exp_size)
        sigma = _pad(self.sigma, ne)
        tau = _pad(self.tau, nt)
        return AutTriple(chi, sigma, tau)


def _pad(m, n):
    k = len(m)
    return tuple(tuple(m[i][j] if i < k and j < k else (1 if i == j else 0)
                       for j in range(n)) for i in range(n))


def identity_triple(alg, size=0):
    if alg.is_infinite:
        n = m = size
    else:
        n, m = alg.rank, alg.dim
    return AutTriple((1,) * n, int_identity(n),
                     tuple(tuple(1 if i == j else 0 for j in range(m)) for i in range(m)))


def make_triple(alg, chi, sigma, tau):
    f = alg.field
    return AutTriple(tuple(f.coerce(c) for c in chi),
                     tuple(tuple(int(v) for v in r) for r in sigma),
                     tuple(tuple(f.coerce(v) for v in r) for r in tau))


class CheckResult:
    __slots__ = ("ok", "reason")

    def __init__(self, ok, reason=""):
        self.ok = ok
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return f"CheckResult({self.ok}, {self.reason!r})"


def _shape_ok(alg, theta):
    ne, nt = theta.exp_size, theta.tan_size
    if any(len(r) != ne for r in theta.sigma) or any(len(r) != nt for r in theta.tau):
        return False
    if len(theta.chi) != ne:
        return False
    if alg.is_infinite:
        return ne == nt
    return ne == alg.rank and nt == alg.dim


def check_triple(alg, theta):
    """Validity with a diagnostic naming the first failed condition."""
    if not _shape_ok(alg, theta):
        raise ShapeMismatch(f"triple of sizes {theta.exp_size}/{theta.tan_size} for {alg!r}")
    return _check_cached(alg, theta)


@lru_cache(maxsize=4096)
def _check_cached(alg, theta):
    f = alg.field
    if theta.exp_size and not is_unimodular(theta.sigma):
        return CheckResult(False, "sigma is not unimodular")
    if theta.tan_size and linalg.inverse([list(r) for r in theta.tau], f) is None:
        return CheckResult(False, "tau is not invertible")
    for i, c in enumerate(theta.chi):
        if c == 0:
            return CheckResult(False, f"chi(e_{i + 1}) is zero")
    if alg.is_infinite:
        phi = [list(r) for r in int_identity(theta.exp_size)]
    else:
        phi = [list(r) for r in alg.pairing_matrix()]
    lhs = linalg.matmul(linalg.matmul(linalg.transpose(theta.tau), phi),
                        [list(r) for r in theta.sigma]) if phi else []
    if any(a != b for ra, rb in zip(lhs, phi) for a, b in zip(ra, rb)):
        return CheckResult(False, "compatibility tau^T Phi sigma = Phi fails")
    return CheckResult(True, "")


def ensure_valid(alg, theta):
    res = check_triple(alg, theta)
    if not res:
        raise InvalidTriple(res.reason)


def chi_value(field, theta, exp):
    v = 1
    for i, a in exp:
        if i <= theta.exp_size:
            c = theta.chi[i - 1]
            if c != 1:
                v = v * spow(field, c, a)
    return v


def _transform(mat, vec, size):
    """Apply a size x size block to a sparse vector; later coordinates fixed."""
    head = [0] * size
    tail = []
    for i, v in vec:
        if i <= size:
            head[i - 1] = v
        else:
            tail.append((i, v))
    out = []
    for r in range(size):
        s = 0
        for a, b in zip(mat[r], head):
            if a != 0 and b != 0:
                s = s + a * b
        if s != 0:
            out.append((r + 1, s))
    return tuple(out) + tuple(tail)


def apply_aut(theta, x, check=True):
    """theta(t^a D) = chi(a) t^(sigma a) tau(D), extended linearly."""
    alg = x.algebra
    if check:
        ensure_valid(alg, theta)
    f = alg.field
    ne, nt = theta.exp_size, theta.tan_size
    out = {}
    for a, d in x.terms.items():
        c = chi_value(f, theta, a)
        na = _transform(theta.sigma, a, ne)
        nd = _transform(theta.tau, d, nt)
        if c != 1:
            nd = tuple((i, v * c) for i, v in nd)
        out[na] = nd
    return WittElement(alg, out, _trusted=True)


def _align(a, b, alg):
    if alg.is_infinite:
        n = max(a.exp_size, b.exp_size)
        return a.padded(n), b.padded(n)
    return a, b


def compose(alg, a, b):
    """The triple of ``a o b`` (apply b first)."""
    ensure_valid(alg, a)
    ensure_valid(alg, b)
    a, b = _align(a, b, alg)
    f = alg.field
    n = a.exp_size
    sigma = int_matmul(a.sigma, b.sigma) if n else ()
    tau = tuple(tuple(r) for r in linalg.matmul([list(r) for r in a.tau],
                                                [list(r) for r in b.tau])) if a.tan_size else ()
    chi = []
    for i in range(n):
        col = tuple(b.sigma[r][i] for r in range(n))
        chi.append(chi_value(f, a, from_dense(col)) * b.chi[i])
    return AutTriple(tuple(chi), sigma, tau)


def invert(alg, a):
    ensure_valid(alg, a)
    f = alg.field
    n = a.exp_size
    sinv = unimodular_inverse(a.sigma) if n else ()
    tinv = linalg.inverse([list(r) for r in a.tau], f) if a.tan_size else []
    chi = []
    for i in range(n):
        col = tuple(sinv[r][i] for r in range(n))
        chi.append(f.div(1, chi_value(f, a, from_dense(col))))
    return AutTriple(tuple(chi), sinv, tuple(tuple(r) for r in tinv))


def triples_equal(alg, a, b):
    if alg.is_infinite:
        a, b = _align(a, b, alg)
    return a == b


# ---------------------------------------------------------------------------
# distinguished elements

def first_primes(k):
    out = []
    c = 2
    while len(out) < k:
        if all(c % p for p in out if p * p <= c):
            out.append(c)
        c += 1
    return out


@dataclass(frozen=True)
class DistinguishedElement:
    element: WittElement
    constants: tuple
    sign: int

    def exceptional_exponents(self):
        """The support exponents {s k_i e_i, s k'_i e_i}."""
        return set(self.element.terms)


def check_constants(constants):
    for c in constants:
        if c < 2:
            raise TooSmallConstant(f"constant {c} is smaller than 2")
    for i, a in enumerate(constants):
        for b in constants[i + 1:]:
            if gcd(a, b) != 1:
                raise NotCoprime(f"constants {a} and {b} share the factor {gcd(a, b)}")


def build_distinguished(alg, sign=1, constants=None):
    """w = sum_i (t^(s k_i e_i) + t^(s k'_i e_i)) d_min(i, m), s = sign.

    Default constants are the first 2n primes, assigned k_1, k'_1, k_2, ...
    """
    if alg.is_infinite:
        raise ShapeMismatch("distinguished elements need a finite algebra")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n, m = alg.rank, alg.dim
    constants = tuple(first_primes(2 * n)) if constants is None else tuple(int(c) for c in constants)
    if len(constants) != 2 * n:
        raise ShapeMismatch(f"need {2 * n} constants, got {len(constants)}")
    check_constants(constants)
    terms = []
    for i in range(1, n + 1):
        d = ((min(i, m), 1),)
        for k in constants[2 * i - 2:2 * i]:
            terms.append((((i, sign * k),), d))
    return DistinguishedElement(WittElement(alg, terms), constants, sign)


# ---------------------------------------------------------------------------
# sigma(S) inside S'

@dataclass(frozen=True)
class Lemma23Result:
    sigmas: tuple
    hypotheses_hold: bool
    violations: tuple

    def is_identity_only(self, n):
        return self.sigmas == (int_identity(n),)


def _axis_vector(n, coef, axis):
    v = [0] * n
    v[axis - 1] = coef
    return tuple(v)


def lemma23_hypotheses(n, S, S_prime):
    msgs = []
    S, Sp = set(S), set(S_prime)
    if not S <= Sp:
        msgs.append("S is not a subset of S'")
    coefs = [c for c, _ in Sp]
    if any(c < 2 for c in coefs):
        msgs.append("a coefficient of S' is smaller than 2")
    if any(gcd(a, b) != 1 for i, a in enumerate(coefs) for b in coefs[i + 1:]):
        msgs.append("coefficients of S' are not pairwise coprime")
    per_axis = {}
    for c, a in Sp:
        per_axis.setdefault(a, []).append(c)
    if sorted(per_axis) != list(range(1, n + 1)) or any(len(v) != 2 for v in per_axis.values()):
        msgs.append("S' is not of the form {k_i e_i, k'_i e_i}")
    if {a for _, a in S} != set(range(1, n + 1)):
        msgs.append("S does not involve every axis")
    return tuple(msgs)


def lemma23_decide(n, S, S_prime):
    """All unimodular sigma with sigma(S) contained in S'.

    S and S' hold pairs (coefficient, axis) standing for coefficient*e_axis.
    Each c*e_i in S must go to some c'*e_j in S', which forces column i of
    sigma to be (c'/c) e_j; the assignments are enumerated axis by axis,
    kept when integral and consistent, and the assembled matrices are
    filtered by unimodularity and the containment.
    """
    S = sorted(set((int(c), int(a)) for c, a in S))
    Sp = sorted(set((int(c), int(a)) for c, a in S_prime))
    violations = lemma23_hypotheses(n, S, Sp)
    covered = {a for _, a in S}
    if covered != set(range(1, n + 1)):
        raise HypothesisViolated(
            f"S leaves axes {sorted(set(range(1, n + 1)) - covered)} undetermined; "
            "the solution set is infinite")
    targets = {_axis_vector(n, c, a) for c, a in Sp}
    col_choices = []
    for i in range(1, n + 1):
        here = [c for c, a in S if a == i]
        first = here[0]
        cands = []
        for c2, j in Sp:
            if c2 % first:
                continue
            col = _axis_vector(n, c2 // first, j)
            if all(tuple(c * v for v in col) in targets for c in here[1:]):
                cands.append(col)
        col_choices.append(cands)
    found = set()
    for cols in product(*col_choices):
        sigma = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        if not is_unimodular(sigma):
            continue
        if all(int_matvec(sigma, _axis_vector(n, c, a)) in targets for c, a in S):
            found.add(sigma)
    return Lemma23Result(tuple(sorted(found)), not violations, violations)


def split_range(total, chunks):
    """Partition [0, total) into contiguous, independently scannable pieces."""
    chunks = max(1, min(chunks, total or 1))
    step = -(-total // chunks)
    return [(s, min(s + step, total)) for s in range(0, total, step)]


def lemma23_bruteforce(n, S, S_prime, bound, cap=10 ** 8, progress=None, chunks=16,
                       backend=None):
    """Exhaustive oracle: every integer matrix with entries in [-bound, bound].

    The range is scanned in independent chunks whose results are merged by
    union.  ``progress(done, total)`` is called after each chunk; returning
    False cancels the scan (partial results are discarded and None returned).
    """
    total = (2 * bound + 1) ** (n * n)
    if total > cap:
        raise SearchSpaceTooLarge(f"{total} matrices exceed the cap {cap}")
    S = sorted(set((int(c), int(a)) for c, a in S))
    Sp = sorted(set((int(c), int(a)) for c, a in S_prime))
    s_coef = [c for c, _ in S]
    s_axis = [a - 1 for _, a in S]
    targets = [_axis_vector(n, c, a) for c, a in Sp]
    mod = kernels.backend(backend)
    biggest = max([bound] + [abs(c) for c in s_coef] + [abs(c) for c, _ in Sp])
    if mod is not kernels.backend("python") and biggest * max(bound, 1) >= kernels.C_SAFE_ENTRY:
        mod = kernels.backend("python")
    found = set()
    done = 0
    for start, stop in split_range(total, chunks):
        for flat in mod.scan_unimodular(n, bound, s_coef, s_axis, targets, start, stop):
            found.add(tuple(tuple(flat[r * n:(r + 1) * n]) for r in range(n)))
        done += stop - start
        if progress is not None and progress(done, total) is False:
            return None
    return tuple(sorted(found))


# ---------------------------------------------------------------------------
# stabilizers

def solve_tau(alg, sigma):
    """The unique tau with tau^T Phi sigma = Phi, or None if none exists."""
    f = alg.field
    phi = [list(r) for r in alg.pairing_matrix()]
    ps = linalg.matmul(phi, [list(r) for r in sigma])
    x, nullity = linalg.solve(linalg.transpose(ps), linalg.transpose(phi), f)
    if x is None:
        return None
    if nullity:
        raise HypothesisViolated("tau not determined by compatibility (degenerate pairing)")
    return tuple(tuple(r) for r in x)


def proportionality(field, v, w):
    """The scalar mu with v == mu * w (sparse vectors), or None."""
    if not w:
        return None
    dv = dict(v)
    i0, w0 = w[0]
    mu = field.div(dv.get(i0, 0), w0)
    if mu == 0:
        return None
    if len(v) != len(w):
        return None
    for i, wi in w:
        if dv.get(i, 0) != mu * wi:
            return None
    return mu


def solve_character(field, exps, targets):
    """All characters chi with chi(a_j) == targets[j].

    Returns ``(solutions, free)`` where ``free`` counts basis directions the
    equations leave unconstrained (set to 1 in every returned solution).
    Uses the HNF of the transposed exponent matrix to triangularise the
    multiplicative system, then extracts roots (both signs when they exist).
    """
    n = len(exps[0]) if exps else 0
    if not exps:
        return [tuple([1] * n)], n
    et = tuple(tuple(e) for e in exps)  # s x n
    h, u = hnf(et)
    s = len(exps)
    pivots = {}
    for k in range(n):
        col = [h[j][k] for j in range(s)]
        p = next((j for j, v in enumerate(col) if v != 0), None)
        if p is not None:
            pivots[p] = k
    branches = [dict()]
    for j in range(s):
        new = []
        for xi in branches:
            known = 1
            for k, val in xi.items():
                if h[j][k]:
                    known = known * spow(field, val, h[j][k])
            rhs = field.div(targets[j], known)
            if j in pivots:
                k = pivots[j]
                for r in field.roots(rhs, h[j][k]):
                    if r != 0:
                        new.append({**xi, k: r})
            elif rhs == 1:
                new.append(xi)
        branches = new
    free = n - len(pivots)
    sols = []
    for xi in branches:
        chi = []
        for i in range(n):
            v = 1
            for k in range(n):
                e = u[i][k]
                if e:
                    v = v * spow(field, xi.get(k, 1), e)
            chi.append(v)
        sols.append(tuple(chi))
    return sols, free


def _axis_form(exp):
    if len(exp) != 1:
        return None
    (i, c), = exp
    return c, i


def stabilizer_of(w):
    """All triples fixing w, for a distinguished element or a raw element
    whose support consists of nonzero multiples of basis vectors.

    sigma candidates come from :func:`lemma23_decide` on the support, tau
    from the compatibility equation, and chi from the torsion conditions
    the fixed terms impose.
    """
    x = w.element if isinstance(w, DistinguishedElement) else w
    alg = x.algebra
    if alg.is_infinite:
        raise ShapeMismatch("stabilizer_of needs a finite algebra")
    n = alg.rank
    f = alg.field
    S = []
    for e in x.terms:
        af = _axis_form(e)
        if af is None:
            raise HypothesisViolated(f"support exponent {to_dense(e, n)} is not an axis multiple")
        S.append(af)
    decided = lemma23_decide(n, S, S)
    out = []
    for sigma in decided.sigmas:
        tau = solve_tau(alg, sigma)
        if tau is None:
            continue
        per_axis = {}
        ok = True
        for e, d in x.terms.items():
            img = _transform(sigma, e, n)
            target = x.terms.get(img)
            if target is None:
                ok = False
                break
            mu = proportionality(f, _transform(tau, d, alg.dim), target)
            if mu is None:
                ok = False
                break
            c, i = _axis_form(e)
            per_axis.setdefault(i, []).append((c, f.div(1, mu)))
        if not ok:
            continue
        choices = []
        for i in range(1, n + 1):
            eqs = per_axis[i]
            if all(t == 1 for _, t in eqs):
                cands = sorted(torsion_solutions([c for c, _ in eqs], f), reverse=True)
            else:
                c0, t0 = eqs[0]
                if c0 < 0:
                    c0, t0 = -c0, f.div(1, t0)
                cands = [u for u in f.roots(t0, c0)
                         if all(spow(f, u, c) == t for c, t in eqs)]
            choices.append(cands)
        for chi in product(*choices):
            theta = AutTriple(tuple(chi), sigma, tau)
            if check_triple(alg, theta) and apply_aut(theta, x) == x:
                out.append(theta)
    return sorted(out, key=triple_sort_key)


def triple_sort_key(theta):
    return (theta.sigma, tuple(repr(c) for c in theta.chi), tuple(repr(r) for r in theta.tau))


def is_identity(alg, theta):
    return triples_equal(alg, theta, identity_triple(alg, theta.exp_size if alg.is_infinite else 0))
