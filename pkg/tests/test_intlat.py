import random

import pytest
from hypothesis import given, strategies as st

from helpers import X
from wittaut.errors import NotSquare, NotUnimodular
from wittaut.intlat import (Sublattice, contains_lattice, det, hnf, int_identity, int_matmul,
                            is_hnf, is_unimodular, lattice_constraint_kernel, lattice_coords,
                            lattice_member, random_unimodular, unimodular_inverse)
from wittaut.scalars import QQX

int_matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_hnf_examples():
    eye = int_identity(2)
    assert hnf(eye) == (eye, eye)
    z = ((0, 0), (0, 0))
    assert hnf(z) == (z, eye)
    m = ((2, 1), (0, 3))
    h, u = hnf(m)
    assert int_matmul(m, u) == h and is_unimodular(u) and is_hnf(h)
    a = Sublattice(2, ((2, 0), (1, 3)))
    b = Sublattice(2, tuple(zip(*h)))
    assert contains_lattice(a, b) and contains_lattice(b, a)


@given(int_matrices)
def test_hnf_properties(m):
    h, u = hnf(m)
    assert int_matmul(m, u) == h
    assert is_unimodular(u)
    assert is_hnf(h)
    assert hnf(h)[0] == h


def test_unimodular_examples():
    assert is_unimodular(int_identity(3))
    assert is_unimodular(((1, 1), (0, 1)))
    assert not is_unimodular(((2, 0), (0, 1)))
    assert unimodular_inverse(int_identity(2)) == int_identity(2)
    assert unimodular_inverse(((1, 1), (0, 1))) == ((1, -1), (0, 1))
    with pytest.raises(NotUnimodular):
        unimodular_inverse(((2, 0), (0, 1)))
    with pytest.raises(NotSquare):
        det(((1, 2),))


def test_random_inverse_roundtrip():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        m = random_unimodular(n, rng)
        inv = unimodular_inverse(m)
        assert int_matmul(m, inv) == int_identity(n)
        assert int_matmul(inv, m) == int_identity(n)


def test_membership_examples():
    L = Sublattice(2, ((2, 0),))
    assert lattice_member(L, (4, 0))
    assert not lattice_member(L, (1, 0))
    M = Sublattice(2, ((1, 1), (0, 2)))
    assert lattice_member(M, (3, 1))
    assert lattice_coords(M, (3, 1)) is not None


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)),
                max_size=3),
       st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_member_of_span(gens, coefs):
    L = Sublattice(3, tuple(gens))
    v = tuple(sum(c * g[i] for c, g in zip(coefs, gens)) for i in range(3))
    assert lattice_member(L, v)
    for g in gens:
        assert lattice_member(L, g)


def test_constraint_kernel_examples():
    full = Sublattice.full(2)
    assert lattice_constraint_kernel(full, [(0, 1)]) == Sublattice(2, ((1, 0),))
    assert lattice_constraint_kernel(full, [(1, X)], QQX) == Sublattice.zero(2)
    diag = Sublattice(2, ((1, 1),))
    assert lattice_constraint_kernel(diag, [(1, -1)]) == diag


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)),
                min_size=1, max_size=2))
def test_constraint_kernel_annihilated(rows):
    K = lattice_constraint_kernel(Sublattice.full(3), rows)
    for b in K.basis:
        assert all(sum(r[i] * b[i] for i in range(3)) == 0 for r in rows)
    # saturation: rank is 3 minus the rank of the constraints
    from wittaut.linalg import rank
    assert K.rank == 3 - rank([list(r) for r in rows])
