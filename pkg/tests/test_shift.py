import random

import pytest

from helpers import INF, W2
from wittaut.autos import apply_aut, check_triple, identity_triple, is_identity
from wittaut.errors import AlgebraMismatch, UnboundedSupport
from wittaut.locality import shift_demo
from wittaut.sampling import random_element
from wittaut.shift import cycle_matrix, shift_is_not_surjective, shift_map, shift_witness
from wittaut.witt import WittElement, bracket


def el(*terms):
    return WittElement(INF, [(tuple(sorted(e.items())), tuple(sorted(d.items()))) for e, d in terms])


def test_shift_examples():
    assert shift_map(el(({1: 2}, {1: 1}))) == el(({2: 2}, {2: 1}))
    assert shift_map(WittElement.zero(INF)).is_zero()
    with pytest.raises(AlgebraMismatch):
        shift_map(WittElement.monomial(W2, [1, 0], [1, 0]))


def test_witness_examples():
    x = el(({1: 2}, {1: 1}))
    t = shift_witness(x)
    assert t.sigma == cycle_matrix(2) == ((0, 1), (1, 0))
    assert apply_aut(t, x) == shift_map(x)
    y = el(({1: 1, 2: 1}, {2: 1}))
    t = shift_witness(y, y)
    assert t.exp_size == 3 and apply_aut(t, y) == shift_map(y)
    z = WittElement.zero(INF)
    assert is_identity(INF, shift_witness(z, z))
    assert identity_triple(INF, 0) == shift_witness(z, z)
    with pytest.raises(UnboundedSupport):
        shift_witness(y, bound=1)


def test_random_pairs_witnessed():
    rng = random.Random(9)
    for _ in range(100):
        x, y = random_element(INF, rng, 3, dims=5), random_element(INF, rng, 3, dims=5)
        t = shift_witness(x, y)
        assert check_triple(INF, t)
        assert apply_aut(t, x) == shift_map(x) and apply_aut(t, y) == shift_map(y)
        assert shift_map(bracket(x, y)) == bracket(shift_map(x), shift_map(y))


def test_not_surjective_certificates():
    c = shift_is_not_surjective()
    assert c["accepted"] and any("d_1" in r["why"] for r in c["reasons"])
    c = shift_is_not_surjective(el(({1: 1}, {2: 1})))
    assert c["accepted"] and any("coordinate 1" in r["why"] for r in c["reasons"])
    c = shift_is_not_surjective(el(({2: 1}, {2: 1})))
    assert not c["accepted"] and c["preimage"] == el(({1: 1}, {1: 1}))


def test_demo():
    out = shift_demo(seed=3, samples=30, probes=10)
    assert all(out["checks"].values())
    assert out["certificate"]["accepted"]
