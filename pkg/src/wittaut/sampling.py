"""Seeded random generators for elements, triples, lattices and subspaces."""

from fractions import Fraction

from .autos import AutTriple
from .intlat import Sublattice, random_unimodular, unimodular_inverse
from .scalars import QQX, RatFun
from .witt import WittElement, from_dense


def random_scalar(field, rng, lo=-3, hi=3, nonzero=False):
    while True:
        if field is QQX:
            num = tuple(rng.randint(lo, hi) for _ in range(rng.randint(1, 2)))
            den = (rng.randint(1, 2),) + ((rng.randint(0, 1),) if rng.random() < 0.3 else ())
            v = RatFun(num, den)
        else:
            v = rng.randint(lo, hi)
            if rng.random() < 0.2 and v:
                v = Fraction(v, rng.randint(1, 3))
        if not nonzero or v != 0:
            return v


def random_element(alg, rng, max_terms=5, lo=-4, hi=4, coeff=3, dims=None):
    """Sparse random element: at most ``max_terms`` terms, exponent entries
    in [lo, hi] and tangent coefficients in [-coeff, coeff]."""
    n = alg.rank if not alg.is_infinite else (dims or 4)
    m = alg.dim if not alg.is_infinite else (dims or 4)
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        e = from_dense([rng.randint(lo, hi) for _ in range(n)])
        d = from_dense([random_scalar(alg.field, rng, -coeff, coeff) for _ in range(m)])
        terms.append((e, d))
    return WittElement(alg, terms)


def random_homogeneous(alg, rng, lo=-4, hi=4, coeff=3):
    while True:
        x = random_element(alg, rng, 1, lo, hi, coeff)
        if x.terms:
            return x


def random_triple(alg, rng, steps=None):
    """A random valid triple.

    Kronecker pairing: sigma random unimodular, tau = sigma^-T.  For
    other pairings sigma = tau = +-1 (which always satisfies compatibility);
    chi has random nonzero values.
    """
    n, m = alg.rank, alg.dim
    chi = tuple(random_scalar(alg.field, rng, -3, 3, nonzero=True) for _ in range(n))
    if alg.is_kronecker:
        sigma = random_unimodular(n, rng, steps)
        inv = unimodular_inverse(sigma)
        tau = tuple(tuple(inv[j][i] for j in range(n)) for i in range(n))
    else:
        s = rng.choice((1, -1))
        sigma = tuple(tuple(s if i == j else 0 for j in range(n)) for i in range(n))
        tau = tuple(tuple(s if i == j else 0 for j in range(m)) for i in range(m))
    return AutTriple(chi, sigma, tau)


def random_lattice(n, rng, max_gens=3, lo=-3, hi=3):
    gens = [tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(rng.randint(0, max_gens))]
    return Sublattice(n, tuple(g for g in gens if any(g)))


def random_subspace(field, m, rng, max_gens=3, lo=-2, hi=2):
    return [tuple(random_scalar(field, rng, lo, hi) for _ in range(m))
            for _ in range(rng.randint(0, max_gens))]
