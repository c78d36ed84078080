import random

import pytest

from helpers import INF, W2, W3, WQX, mono
from wittaut.autos import apply_aut, identity_triple
from wittaut.errors import NotSimpleAmbient
from wittaut.intlat import Sublattice, contains_lattice, lattice_member
from wittaut.pairs import complete_pair, envelope, envelope_of, nondeg_defect, subspace_contains
from wittaut.sampling import random_element, random_lattice, random_subspace, random_triple
from wittaut.scalars import QQ
from wittaut.witt import Algebra, WittElement, bracket


def lat(*gens, n=2):
    return Sublattice(n, tuple(gens))


def test_defect_examples():
    d = nondeg_defect(W2, lat((1, 0)), [(0, 1)])
    assert d.r == 2 and d.lattice == lat((1, 0)) and len(d.subspace) == 1
    assert nondeg_defect(W2, Sublattice.full(2), [(1, 0), (0, 1)]).r == 0
    assert nondeg_defect(W2, Sublattice.zero(2), []).r == 0


def test_defect_needs_simple_ambient():
    with pytest.raises(NotSimpleAmbient):
        nondeg_defect(Algebra.general([[1, 1]], QQ), Sublattice.zero(2), [])
    with pytest.raises(NotSimpleAmbient):
        nondeg_defect(INF, Sublattice.zero(2), [])


def test_complete_examples():
    pair, r0, steps = complete_pair(W2, lat((1, 0)), [(0, 1)])
    assert r0 == 2
    assert [(s.kind, s.r) for s in steps] == [("exp", 1), ("tan", 0)]
    assert pair.lattice == Sublattice.full(2) and len(pair.subspace) == 2
    pair, r0, steps = complete_pair(W2, Sublattice.full(2), [(1, 0), (0, 1)])
    assert r0 == 0 and steps == []
    pair, _, steps = complete_pair(W3, lat((0, 0, 1), n=3), [(1, 0, 0)])
    assert pair.lattice.rank == 2 and len(pair.subspace) == 2
    assert len(steps) == 2
    assert lattice_member(pair.lattice, (1, 0, 0))
    assert subspace_contains(QQ, pair.subspace, (0, 0, 1))


def test_completion_is_monotone_and_contains_input():
    rng = random.Random(5)
    for alg in (W3, WQX):
        for _ in range(40):
            L = random_lattice(alg.rank, rng)
            T = random_subspace(alg.field, alg.dim, rng)
            pair, r0, steps = complete_pair(alg, L, T)
            rs = [r0] + [s.r for s in steps if s.kind != "seed"]
            assert all(a > b for a, b in zip(rs, rs[1:]))
            assert nondeg_defect(alg, pair.lattice, pair.subspace).r == 0
            assert contains_lattice(pair.lattice, L)
            assert all(subspace_contains(alg.field, pair.subspace, v) for v in T)


def test_envelope_examples():
    x, y = mono(W3, [1, 0, 0], [1, 0, 0]), mono(W3, [0, 1, 0], [0, 1, 0])
    env = envelope(x, y)
    assert env.steps == [] and env.pair.lattice == lat((1, 0, 0), (0, 1, 0), n=3)
    assert len(env.pair.subspace) == 2
    z = WittElement.zero(W3)
    env = envelope(z, z)
    assert env.pair.lattice == lat((1, 0, 0), n=3)
    assert [s.kind for s in env.steps] == ["seed"]
    env = envelope(mono(W3, [0, 0, 1], [1, 0, 0]), z)
    assert env.pair.lattice.rank == 2 and len(env.pair.subspace) == 2


def test_envelope_is_subalgebra():
    rng = random.Random(11)
    for alg in (W3, WQX):
        for _ in range(20):
            x, y = random_element(alg, rng, 3), random_element(alg, rng, 3)
            env = envelope(x, y)
            emb = env.embedding
            assert emb.contains(x) and emb.contains(y)
            assert emb.contains(bracket(x, y))
            sx, sy = emb.to_sub(x), emb.to_sub(y)
            assert emb.to_ambient(sx) == x
            assert emb.to_ambient(bracket(sx, sy)) == bracket(x, y)


def test_restrict_identity():
    env = envelope_of(W3, [mono(W3, [1, 0, 0], [1, 0, 0])])
    r = env.embedding.restrict(identity_triple(W3))
    assert r is not None
    sub = env.sub
    assert r == identity_triple(sub)


def test_restrict_preserving_triple():
    rng = random.Random(2)
    x = random_element(W2, rng, 2)
    env = envelope(x, x)
    for _ in range(10):
        t = random_triple(W2, rng)
        r = env.embedding.restrict(t)
        if r is not None:
            s = env.embedding.to_sub(x)
            assert env.embedding.to_ambient(apply_aut(r, s)) == apply_aut(t, x)
