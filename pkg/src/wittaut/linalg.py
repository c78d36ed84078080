"""Dense linear algebra over an exact field (Q or Q(x)).

Matrices are lists of row lists.  All routines take the field object so that
division goes through the field's exact ``div``.
"""

from .scalars import QQ


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(r) for r in zip(*m)]


def matmul(a, b):
    if not a:
        return []
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([_dot(row, col) for col in bt])
    return out


def matvec(a, v):
    return [_dot(row, v) for row in a]


def _dot(u, v):
    s = 0
    for x, y in zip(u, v):
        if x != 0 and y != 0:
            s = s + x * y
    return s


def rref(rows, field=QQ):
    """Reduced row echelon form. Returns (matrix, pivot column list)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [field.div(v, pv) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, field=QQ):
    return len(rref(rows, field)[1])


def nullspace(rows, ncols, field=QQ):
    """Basis of {v : rows . v = 0}, one vector per free column."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    r, piv = rref(rows, field)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(piv):
            v[pc] = -r[i][f]
        basis.append(v)
    return basis


def solve(a, b, field=QQ):
    """Solve a X = b for a matrix (or vector) b.

    Returns ``(X, nullity)`` with X one particular solution (free variables
    set to zero), or ``(None, nullity)`` when the system is inconsistent.
    """
    vec = b and not isinstance(b[0], list)
    bm = [[v] for v in b] if vec else b
    ncols = len(a[0]) if a else 0
    k = len(bm[0]) if bm else 0
    aug = [list(ra) + list(rb) for ra, rb in zip(a, bm)]
    r, piv = rref(aug, field)
    if any(p >= ncols for p in piv):
        return None, ncols - sum(1 for p in piv if p < ncols)
    x = [[0] * k for _ in range(ncols)]
    for i, pc in enumerate(piv):
        for j in range(k):
            x[pc][j] = r[i][ncols + j]
    nullity = ncols - len(piv)
    if vec:
        return [row[0] for row in x], nullity
    return x, nullity


def inverse(m, field=QQ):
    n = len(m)
    aug = [list(r) + e for r, e in zip(m, identity(n))]
    r, piv = rref(aug, field)
    if piv[:n] != list(range(n)) or len(piv) > n:
        return None
    return [row[n:] for row in r]


def is_zero_matrix(m):
    return all(v == 0 for row in m for v in row)
