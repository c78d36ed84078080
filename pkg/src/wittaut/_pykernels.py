"""Pure-Python kernels; the reference behaviour for ``_ckernels``."""

from itertools import islice, product

from .intlat import det


def det_small(entries, n):
    """Determinant of a row-major flat n*n integer matrix."""
    return det([entries[i * n:(i + 1) * n] for i in range(n)])


def scan_unimodular(n, bound, s_coef, s_axis, targets, start, stop):
    """Scan matrices with entries in [-bound, bound], indices [start, stop).

    Matrices are enumerated as base-(2*bound+1) numbers over the n*n
    row-major entries, last entry fastest.  A matrix is kept when it sends
    every c*e_axis in S into ``targets`` and has determinant +-1.  Returns
    the kept matrices as flat row-major tuples.
    """
    tset = set(map(tuple, targets))
    out = []
    grid = product(range(-bound, bound + 1), repeat=n * n)
    pairs = list(zip(s_coef, s_axis))
    for m in islice(grid, start, stop):
        ok = True
        for c, a in pairs:
            if tuple(c * m[r * n + a] for r in range(n)) not in tset:
                ok = False
                break
        if ok and det_small(m, n) in (1, -1):
            out.append(m)
    return out
