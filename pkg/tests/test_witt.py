from hypothesis import given

from helpers import W1, W2, W3, WQX, X, elements, mono
from wittaut.scalars import QQ
from wittaut.witt import (Algebra, WittElement, act, act_on, bracket, graded_components,
                          is_simple, phi_pair)


def test_bracket_examples():
    d1 = mono(W2, [0, 0], [1, 0])
    y = mono(W2, [2, 3], [0, 1])
    assert bracket(d1, y) == mono(W2, [2, 3], [0, 2])
    a = mono(W2, [1, 0], [0, 1])
    b = mono(W2, [0, 1], [1, 0])
    assert bracket(a, b) == mono(W2, [1, 1], [1, -1])


def test_phi_pair_examples():
    assert phi_pair(W2, [1, 0], [0, 1]) == 0
    assert phi_pair(W2, [0, 1], [5, 7]) == 7
    assert phi_pair(WQX, [1], [1, 1]) == 1 + X


def test_graded_components():
    assert graded_components(WittElement.zero(W2)) == []
    x = mono(W2, [1, 0], [1, 0]) + mono(W2, [1, 0], [0, 1])
    comps = graded_components(x)
    assert len(comps) == 1 and comps[0][1] == x
    y = mono(W2, [0, 0], [1, 0]) + mono(W2, [2, 0], [3, 0])
    assert [e for e, _ in graded_components(y)] == [(), ((1, 2),)]


def test_act_examples():
    assert act(mono(W2, [0, 0], [1, 0]), [0, 0]) == []
    assert act(mono(W1, [2], [1]), [3]) == [(((1, 5),), 3)]
    assert act(mono(W2, [1, 0], [1, 0]), [1, 1]) == [(((1, 2), (2, 1)), 1)]


def test_is_simple_examples():
    assert is_simple(W1)
    assert not is_simple(Algebra.general([[1, 1]], QQ))
    assert is_simple(WQX)
    assert is_simple(Algebra.infinite())
    assert not is_simple(Algebra.witt(0))


@given(elements(W3))
def test_alternating(x):
    assert bracket(x, x).is_zero()


@given(elements(W2), elements(W2), elements(W2))
def test_jacobi_and_antisymmetry(x, y, z):
    assert bracket(x, y) == -bracket(y, x)
    j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert j.is_zero()


@given(elements(WQX), elements(WQX), elements(WQX))
def test_jacobi_qx(x, y, z):
    j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert j.is_zero()


@given(elements(W2), elements(W2))
def test_gradation(x, y):
    # [W_a, W_b] lies in W_(a+b)
    for a, xa in graded_components(x):
        for b, yb in graded_components(y):
            br = bracket(xa, yb)
            if not br.is_zero():
                (g,) = br.terms
                assert dict(g) == {i: dict(a).get(i, 0) + dict(b).get(i, 0)
                                   for i in set(dict(a)) | set(dict(b))
                                   if dict(a).get(i, 0) + dict(b).get(i, 0)}


@given(elements(W2), elements(W2), elements(W2, max_terms=2))
def test_bracket_is_commutator_of_derivations(x, y, p):
    poly = {e: 1 for e in p.terms}
    lhs = act_on(bracket(x, y), poly)
    xy = act_on(x, act_on(y, poly))
    yx = act_on(y, act_on(x, poly))
    rhs = {k: xy.get(k, 0) - yx.get(k, 0) for k in set(xy) | set(yx)}
    assert lhs == {k: v for k, v in rhs.items() if v != 0}


@given(elements(W2), elements(W2))
def test_bilinear(x, y):
    assert bracket(x + y, y) == bracket(x, y)
    assert bracket(x.scale(3), y) == bracket(x, y).scale(3)
