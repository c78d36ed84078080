# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; same contracts."""

from libc.stdlib cimport malloc, free


cdef long long _det(long long* a, int n) nogil:
    # Bareiss elimination in place; exact for entries well inside int64.
    cdef int i, j, k, p
    cdef long long prev = 1, pivot, tmp
    cdef int sign = 1
    for k in range(n - 1):
        if a[k * n + k] == 0:
            p = -1
            for i in range(k + 1, n):
                if a[i * n + k] != 0:
                    p = i
                    break
            if p < 0:
                return 0
            for j in range(n):
                tmp = a[k * n + j]
                a[k * n + j] = a[p * n + j]
                a[p * n + j] = tmp
            sign = -sign
        pivot = a[k * n + k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i * n + j] = (a[i * n + j] * pivot - a[i * n + k] * a[k * n + j]) // prev
        prev = pivot
    return sign * a[n * n - 1]


def det_small(entries, int n):
    cdef int nn = n * n, k
    cdef long long* a = <long long*> malloc(nn * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    try:
        for k in range(nn):
            a[k] = entries[k]
        return _det(a, n)
    finally:
        free(a)


def scan_unimodular(int n, long long bound, s_coef, s_axis, targets,
                    long long start, long long stop):
    cdef int nn = n * n
    cdef int ns = len(s_coef), nt = len(targets)
    cdef long long base = 2 * bound + 1
    cdef long long idx, rem
    cdef int k, s, t, r, hit, ok
    cdef long long* m = <long long*> malloc(nn * sizeof(long long))
    cdef long long* scratch = <long long*> malloc(nn * sizeof(long long))
    cdef long long* coef = <long long*> malloc((ns + 1) * sizeof(long long))
    cdef int* axis = <int*> malloc((ns + 1) * sizeof(int))
    cdef long long* tgt = <long long*> malloc((nt * n + 1) * sizeof(long long))
    cdef long long d
    out = []
    if m == NULL or scratch == NULL or coef == NULL or axis == NULL or tgt == NULL:
        free(m); free(scratch); free(coef); free(axis); free(tgt)
        raise MemoryError()
    try:
        for s in range(ns):
            coef[s] = s_coef[s]
            axis[s] = s_axis[s]
        for t in range(nt):
            for r in range(n):
                tgt[t * n + r] = targets[t][r]
        rem = start
        for k in range(nn - 1, -1, -1):
            m[k] = rem % base - bound
            rem //= base
        idx = start
        while idx < stop:
            ok = 1
            for s in range(ns):
                hit = 0
                for t in range(nt):
                    hit = 1
                    for r in range(n):
                        if coef[s] * m[r * n + axis[s]] != tgt[t * n + r]:
                            hit = 0
                            break
                    if hit:
                        break
                if not hit:
                    ok = 0
                    break
            if ok:
                for k in range(nn):
                    scratch[k] = m[k]
                d = _det(scratch, n)
                if d == 1 or d == -1:
                    out.append(tuple([m[k] for k in range(nn)]))
            idx += 1
            # odometer increment, last entry fastest
            k = nn - 1
            while k >= 0:
                m[k] += 1
                if m[k] <= bound:
                    break
                m[k] = -bound
                k -= 1
    finally:
        free(m); free(scratch); free(coef); free(axis); free(tgt)
    return out
