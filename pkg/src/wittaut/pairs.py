"""Non-degenerate pairs (A', T') and the sub-Witt-algebra envelope of elements.

A pair of a sublattice A' of Z^n and a subspace T' of the tangent space is
non-degenerate when no nonzero exponent in A' is killed by all of T' and no
nonzero tangent in T' is killed by all of A'.  The restricted algebra
W(A', T', phi) is then simple, and isomorphic to W(Z^r, V_q, phi') with phi'
the pairing in the chosen bases.
"""

from dataclasses import dataclass

from . import linalg
from .autos import AutTriple, chi_value
from .errors import NotSimpleAmbient, ShapeMismatch
from .intlat import Sublattice, int_matvec, lattice_constraint_kernel, lattice_coords
from .witt import Algebra, WittElement, from_dense, is_simple, to_dense


def reduce_subspace(vectors, field):
    """Canonical (reduced row echelon) basis of the span of dense vectors."""
    rows = [list(v) for v in vectors if any(c != 0 for c in v)]
    if not rows:
        return ()
    r, piv = linalg.rref(rows, field)
    return tuple(tuple(row) for row in r[:len(piv)])


def _require_simple(alg):
    if alg.is_infinite or not is_simple(alg):
        raise NotSimpleAmbient(f"{alg!r} is not a finite simple algebra")


def _pair_dense(alg, d, a):
    phi = alg.pairing_matrix()
    s = 0
    for i, di in enumerate(d):
        if di == 0:
            continue
        for j, aj in enumerate(a):
            if aj != 0 and phi[i][j] != 0:
                s = s + di * phi[i][j] * aj
    return s


def _row_functional(alg, d):
    """d^T Phi as a dense row of length n."""
    phi = alg.pairing_matrix()
    return [sum((d[i] * phi[i][j] for i in range(alg.dim) if d[i] != 0), 0)
            for j in range(alg.rank)]


@dataclass(frozen=True)
class Defect:
    lattice: Sublattice
    subspace: tuple
    r: int


def nondeg_defect(alg, lat, subspace):
    """(A_0, T_0, rank A_0 + dim T_0) for the pair (lat, subspace)."""
    _require_simple(alg)
    f = alg.field
    tb = reduce_subspace(subspace, f)
    a0 = lattice_constraint_kernel(lat, [_row_functional(alg, d) for d in tb], f) if tb else lat
    if lat.rank == 0:
        t0 = tb
    elif tb:
        m = [[_pair_dense(alg, d, b) for d in tb] for b in lat.basis]
        combos = linalg.nullspace(m, len(tb), f)
        t0 = reduce_subspace(
            [[sum((c[k] * tb[k][i] for k in range(len(tb)) if c[k] != 0), 0)
              for i in range(alg.dim)] for c in combos], f)
    else:
        t0 = ()
    return Defect(a0, t0, a0.rank + len(t0))


def subspace_contains(field, basis, v):
    if not any(c != 0 for c in v):
        return True
    if not basis:
        return False
    return linalg.rank([list(b) for b in basis] + [list(v)], field) == len(basis)


@dataclass(frozen=True)
class NondegPair:
    lattice: Sublattice
    subspace: tuple
    certificate: Defect


@dataclass(frozen=True)
class Step:
    kind: str          # "exp" or "tan"
    vector: tuple
    r: int             # defect after the step


def _unit(n, i):
    return tuple(1 if k == i else 0 for k in range(n))


def complete_pair(alg, lat, subspace):
    """Grow (lat, subspace) into a non-degenerate pair.

    Each step scans e_1, ..., e_n and then d_1, ..., d_m and adjoins the first
    candidate whose addition strictly lowers the defect r.  A zero input is
    first seeded with the first (e_j, d_i) having phi(d_i, e_j) != 0.
    Returns ``(pair, initial_r, steps)``.
    """
    _require_simple(alg)
    f = alg.field
    n, m = alg.rank, alg.dim
    tb = reduce_subspace(subspace, f)
    steps = []
    if lat.rank == 0 and not tb:
        phi = alg.pairing_matrix()
        j, i = next((j, i) for j in range(n) for i in range(m) if phi[i][j] != 0)
        lat = lat.extended(_unit(n, j))
        tb = reduce_subspace([_unit(m, i)], f)
        steps.append(Step("seed", (_unit(n, j), _unit(m, i)), nondeg_defect(alg, lat, tb).r))
    d = nondeg_defect(alg, lat, tb)
    initial = d.r if not steps else steps[0].r
    while d.r > 0:
        chosen = None
        for j in range(n):
            e = _unit(n, j)
            cand = lat.extended(e)
            dc = nondeg_defect(alg, cand, tb)
            if dc.r < d.r:
                chosen = ("exp", e, cand, tb, dc)
                break
        if chosen is None:
            for i in range(m):
                t = _unit(m, i)
                ctb = reduce_subspace(list(tb) + [t], f)
                dc = nondeg_defect(alg, lat, ctb)
                if dc.r < d.r:
                    chosen = ("tan", t, lat, ctb, dc)
                    break
        if chosen is None:
            raise NotSimpleAmbient("no basis vector lowers the defect")
        kind, vec, lat, tb, d = chosen
        steps.append(Step(kind, vec, d.r))
    return NondegPair(lat, tb, d), initial, steps


class Embedding:
    """Identification of W(A', T', phi) with W(Z^r, V_q, phi').

    Coordinates are taken in the HNF basis of A' and the reduced basis of T'.
    """

    def __init__(self, ambient, pair):
        self.ambient = ambient
        self.pair = pair
        self.lat_basis = pair.lattice.basis
        self.tan_basis = pair.subspace
        f = ambient.field
        phi = [[_pair_dense(ambient, t, b) for b in self.lat_basis] for t in self.tan_basis]
        self.sub = Algebra.general(phi, f)
        self._tmat = [list(c) for c in zip(*self.tan_basis)]

    @property
    def rank(self):
        return len(self.lat_basis)

    @property
    def dim(self):
        return len(self.tan_basis)

    def exp_to_ambient(self, c):
        n = self.ambient.rank
        v = [0] * n
        for ck, b in zip(c, self.lat_basis):
            if ck:
                for i in range(n):
                    v[i] += ck * b[i]
        return v

    def tan_to_ambient(self, c):
        m = self.ambient.dim
        v = [0] * m
        for ck, t in zip(c, self.tan_basis):
            if ck != 0:
                for i in range(m):
                    if t[i] != 0:
                        v[i] = v[i] + ck * t[i]
        return v

    def to_ambient(self, x):
        terms = []
        for e, d in x.terms.items():
            a = self.exp_to_ambient(to_dense(e, self.rank))
            t = self.tan_to_ambient(to_dense(d, self.dim))
            terms.append((from_dense(a), from_dense(t)))
        return WittElement(self.ambient, terms)

    def tan_coords(self, v):
        sol, _ = linalg.solve(self._tmat, list(v), self.ambient.field)
        return sol

    def to_sub(self, x):
        """Sub-algebra coordinates of x, or None if x is not in W(A', T')."""
        terms = []
        for e, d in x.terms.items():
            c = lattice_coords(self.pair.lattice, to_dense(e, self.ambient.rank))
            if c is None:
                return None
            t = self.tan_coords(to_dense(d, self.ambient.dim))
            if t is None:
                return None
            terms.append((from_dense(c), from_dense(t)))
        return WittElement(self.sub, terms)

    def contains(self, x):
        return self.to_sub(x) is not None

    def restrict(self, theta):
        """theta written on the sub-algebra, or None if it does not preserve it."""
        cols, chi = [], []
        for b in self.lat_basis:
            c = lattice_coords(self.pair.lattice, int_matvec(theta.sigma, b))
            if c is None:
                return None
            cols.append(c)
            chi.append(chi_value(self.ambient.field, theta, from_dense(b)))
        r = self.rank
        sigma = tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))
        tcols = []
        for t in self.tan_basis:
            img = linalg.matvec([list(row) for row in theta.tau], list(t))
            c = self.tan_coords(img)
            if c is None:
                return None
            tcols.append(c)
        q = self.dim
        tau = tuple(tuple(tcols[j][i] for j in range(q)) for i in range(q))
        return AutTriple(tuple(chi), sigma, tau)


@dataclass
class Envelope:
    pair: NondegPair
    initial_r: int
    steps: list
    embedding: Embedding

    @property
    def sub(self):
        return self.embedding.sub


def envelope_of(alg, elements):
    """A non-degenerate pair whose sub-Witt-algebra contains every element.

    The lattice starts as the subgroup generated by all exponents and the
    subspace as the span of all tangent vectors; :func:`complete_pair` does
    the rest.
    """
    _require_simple(alg)
    gens, tans = [], []
    for x in elements:
        if x.algebra != alg:
            raise ShapeMismatch("elements from different algebras")
        for e, d in x.terms.items():
            gens.append(tuple(to_dense(e, alg.rank)))
            tans.append(tuple(to_dense(d, alg.dim)))
    lat = Sublattice(alg.rank, tuple(g for g in gens if any(g)))
    pair, initial, steps = complete_pair(alg, lat, tans)
    return Envelope(pair, initial, steps, Embedding(alg, pair))


def envelope(x, y):
    x._binop_check(y)
    return envelope_of(x.algebra, [x, y])
