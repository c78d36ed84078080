"""The index shift on W_inf: injective, bracket preserving, not surjective.

``t^a d_i -> t^(0, a) d_(i+1)``.  Every finite piece of it agrees with a
cyclic permutation automorphism, which is what makes it both local and
2-local without being an automorphism.
"""

from .autos import AutTriple, identity_triple
from .errors import AlgebraMismatch, UnboundedSupport
from .witt import Algebra, WittElement, sparse


def _require_inf(x):
    if not x.algebra.is_infinite or not x.algebra.is_kronecker:
        raise AlgebraMismatch(f"shift needs W_inf, got {x.algebra!r}")


def _shift_vec(v, by=1):
    return tuple((i + by, c) for i, c in v)


def shift_map(x):
    _require_inf(x)
    return WittElement(x.algebra, {_shift_vec(e): _shift_vec(d) for e, d in x.terms.items()},
                       _trusted=True)


def support_bound(*elements):
    """Largest coordinate index used by any exponent or tangent."""
    n = 0
    for x in elements:
        for e, d in x.terms.items():
            if e:
                n = max(n, e[-1][0])
            n = max(n, d[-1][0])
    return n


def cycle_matrix(size):
    """Permutation matrix of (1 2 ... size): e_i -> e_(i+1), e_size -> e_1."""
    m = [[0] * size for _ in range(size)]
    for i in range(size):
        m[(i + 1) % size][i] = 1
    return tuple(map(tuple, m))


def shift_witness(x, y=None, bound=None):
    """A finitely supported automorphism agreeing with the shift on x and y.

    With N the support bound (or ``bound`` if given), the witness permutes the
    first N + 1 coordinates cyclically and has trivial character.
    """
    _require_inf(x)
    if y is None:
        y = WittElement.zero(x.algebra)
    _require_inf(y)
    n = support_bound(x, y)
    if bound is not None:
        if n > bound:
            raise UnboundedSupport(f"support reaches index {n} > {bound}")
        n = bound
    if n == 0:
        return identity_triple(x.algebra, 0)
    p = cycle_matrix(n + 1)
    return AutTriple((1,) * (n + 1), p, p)


def _unshift(x):
    return WittElement(x.algebra, {_shift_vec(e, -1): _shift_vec(d, -1) for e, d in x.terms.items()})


def shift_is_not_surjective(x=None, generic_checks=8):
    """Certificate that ``x`` (default d_1) is outside the image of the shift.

    The image of any term has exponent coordinate 1 equal to zero and tangent
    support in indices >= 2; the certificate records which of the two
    conditions x violates, after confirming both on a batch of generic terms.
    If x satisfies both, it is rejected and its preimage is returned.
    """
    alg = x.algebra if x is not None else Algebra.infinite()
    if x is None:
        x = WittElement(alg, [((), ((1, 1),))])
    _require_inf(x)
    for k in range(generic_checks):
        probe = WittElement(alg, [(sparse([(1, k - 3), (k + 2, 2)]), sparse([(1, 1), (k + 2, -1)]))])
        img = shift_map(probe)
        for e, d in img.terms.items():
            assert dict(e).get(1, 0) == 0 and d[0][0] >= 2
    reasons = []
    for e, d in x.sorted_terms():
        if dict(e).get(1, 0) != 0:
            reasons.append({"exp": dict(e), "why": "exponent coordinate 1 is nonzero"})
        if dict(d).get(1, 0) != 0:
            reasons.append({"exp": dict(e), "why": "tangent component d_1 is nonzero"})
    if reasons:
        return {"accepted": True, "element": x, "reasons": reasons, "preimage": None}
    pre = _unshift(x)
    assert shift_map(pre) == x
    return {"accepted": False, "element": x, "reasons": [], "preimage": pre}
