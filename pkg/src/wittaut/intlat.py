"""Integer matrices and sublattices of Z^n.

An integer matrix is a tuple of row tuples of Python ints.  Column Hermite
normal form is the workhorse: lattice bases, membership and integer kernels
are all read off from it.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm

from .errors import NotSquare, NotUnimodular, RankMismatch
from .scalars import QQ, expand_rows


def as_matrix(rows):
    return tuple(tuple(int(v) for v in r) for r in rows)


def int_identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def int_matmul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def int_matvec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def columns(m):
    return [tuple(c) for c in zip(*m)] if m else []


def from_columns(cols, nrows):
    if not cols:
        return tuple(() for _ in range(nrows))
    return tuple(tuple(c[i] for c in cols) for i in range(nrows))


def det(m):
    """Fraction-free (Bareiss) determinant."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise NotSquare(f"{n}x{len(m[0]) if m else 0} matrix is not square")
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            p = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if p is None:
                return 0
            a[k], a[p] = a[p], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(m):
    return det(m) in (1, -1)


def unimodular_inverse(m):
    """Exact integer inverse via the adjugate."""
    d = det(m)
    if d not in (1, -1):
        raise NotUnimodular(f"determinant {d} is not a unit")
    n = len(m)
    if n == 1:
        return ((d,),)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(m) if k != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return tuple(tuple(v * d for v in r) for r in adj)


def _colop_sub(mat, dst, src, q):
    for row in mat:
        row[dst] -= q * row[src]


def _colop_swap(mat, a, b):
    for row in mat:
        row[a], row[b] = row[b], row[a]


def _colop_neg(mat, a):
    for row in mat:
        row[a] = -row[a]


def hnf(m, ncols=None):
    """Column Hermite normal form.

    Returns ``(H, U)`` with ``H == M U`` and U unimodular.  H is lower
    echelon: each nonzero column has a positive pivot strictly below the
    previous column's pivot, entries left of a pivot lie in [0, pivot), and
    zero columns come last.
    """
    rows = len(m)
    c = len(m[0]) if rows else (ncols or 0)
    h = [list(r) for r in m]
    u = [[1 if i == j else 0 for j in range(c)] for i in range(c)]
    k = 0
    for i in range(rows):
        if k == c:
            break
        while True:
            nz = [j for j in range(k, c) if h[i][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: (abs(h[i][j]), j))
            if jmin != k:
                _colop_swap(h, k, jmin)
                _colop_swap(u, k, jmin)
            clean = True
            for j in range(k + 1, c):
                if h[i][j] != 0:
                    q = h[i][j] // h[i][k]
                    _colop_sub(h, j, k, q)
                    _colop_sub(u, j, k, q)
                    if h[i][j] != 0:
                        clean = False
            if clean:
                break
        if h[i][k] == 0:
            continue
        if h[i][k] < 0:
            _colop_neg(h, k)
            _colop_neg(u, k)
        for j in range(k):
            q = h[i][j] // h[i][k]
            if q:
                _colop_sub(h, j, k, q)
                _colop_sub(u, j, k, q)
        k += 1
    return tuple(map(tuple, h)), tuple(map(tuple, u))


def is_hnf(h):
    """Shape predicate for column HNF."""
    cols = columns(h)
    last = -1
    seen_zero = False
    for j, col in enumerate(cols):
        p = next((i for i, v in enumerate(col) if v != 0), None)
        if p is None:
            seen_zero = True
            continue
        if seen_zero or p <= last or col[p] <= 0:
            return False
        if any(v != 0 for v in col[:p]):
            return False
        for l in range(j):
            if not 0 <= h[p][l] < col[p]:
                return False
        last = p
    return True


@dataclass(frozen=True)
class Sublattice:
    """A finitely generated subgroup of Z^n with its HNF basis (as columns)."""

    ambient_rank: int
    generators: tuple = ()
    basis: tuple = dc_field(default=(), compare=False)

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        for g in gens:
            if len(g) != self.ambient_rank:
                raise RankMismatch(f"generator {g} not in Z^{self.ambient_rank}")
        object.__setattr__(self, "generators", gens)
        if gens:
            h, _ = hnf(from_columns(list(gens), self.ambient_rank))
            basis = tuple(c for c in columns(h) if any(c))
        else:
            basis = ()
        object.__setattr__(self, "basis", basis)

    @classmethod
    def full(cls, n):
        return cls(n, tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n)))

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @property
    def rank(self):
        return len(self.basis)

    def basis_matrix(self):
        return from_columns(list(self.basis), self.ambient_rank)

    def extended(self, *vectors):
        return Sublattice(self.ambient_rank, self.generators + tuple(vectors))

    def __eq__(self, other):
        return (isinstance(other, Sublattice) and other.ambient_rank == self.ambient_rank
                and other.basis == self.basis)

    def __hash__(self):
        return hash((self.ambient_rank, self.basis))


def lattice_coords(lat, v):
    """Integer coordinates of v in the HNF basis, or None if v is not a member."""
    v = tuple(int(x) for x in v)
    if len(v) != lat.ambient_rank:
        raise RankMismatch(f"vector of length {len(v)} in Z^{lat.ambient_rank}")
    coeffs = []
    for col in lat.basis:
        p = next(i for i, x in enumerate(col) if x != 0)
        rest = v[p] - sum(c * b[p] for c, b in zip(coeffs, lat.basis))
        if rest % col[p]:
            return None
        coeffs.append(rest // col[p])
    recon = [sum(c * b[i] for c, b in zip(coeffs, lat.basis)) for i in range(lat.ambient_rank)]
    if tuple(recon) != v:
        return None
    return tuple(coeffs)


def lattice_member(lat, v):
    return lattice_coords(lat, v) is not None


def contains_lattice(big, small):
    return all(lattice_member(big, b) for b in small.basis)


def integer_kernel(qrows, ncols):
    """Basis of the integer kernel of a rational matrix."""
    if not qrows:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    irows = []
    for r in qrows:
        den = lcm(*(Fraction(v).denominator for v in r))
        irows.append(tuple(int(Fraction(v) * den) for v in r))
    h, u = hnf(irows, ncols)
    cols_h = columns(h)
    cols_u = columns(u)
    return [cols_u[j] for j in range(ncols) if not any(cols_h[j])] if cols_h else cols_u


def lattice_constraint_kernel(lat, rows, field=QQ):
    """Sublattice of ``lat`` annihilated by every constraint row.

    Field-valued rows are expanded coefficient-wise into rational rows, so the
    result is the honest integer kernel even over Q(x).
    """
    for r in rows:
        if len(r) != lat.ambient_rank:
            raise RankMismatch(f"constraint of length {len(r)} in Z^{lat.ambient_rank}")
    if not rows or lat.rank == 0:
        return lat
    qrows = expand_rows(field, rows)
    if not qrows:
        return lat
    b = lat.basis
    reduced = [[sum(Fraction(q[i]) * col[i] for i in range(lat.ambient_rank)) for col in b]
               for q in qrows]
    ker = integer_kernel(reduced, len(b))
    gens = tuple(tuple(sum(c * col[i] for c, col in zip(k, b)) for i in range(lat.ambient_rank))
                 for k in ker)
    return Sublattice(lat.ambient_rank, gens)


def random_unimodular(n, rng, steps=None, max_mult=2):
    """Random element of GL(n, Z) as a bounded product of elementary matrices."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n == 0:
        return ()
    steps = steps if steps is not None else 2 * n
    for _ in range(steps):
        kind = rng.randrange(3) if n > 1 else 2
        if kind == 0:
            i, j = rng.sample(range(n), 2)
            q = rng.choice([x for x in range(-max_mult, max_mult + 1) if x])
            m[i] = [a + q * b for a, b in zip(m[i], m[j])]
        elif kind == 1:
            i, j = rng.sample(range(n), 2)
            m[i], m[j] = m[j], m[i]
        else:
            i = rng.randrange(n)
            m[i] = [-a for a in m[i]]
    return tuple(map(tuple, m))
