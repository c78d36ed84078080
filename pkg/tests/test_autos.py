import random

import pytest
from hypothesis import given, strategies as st

from helpers import W1, W2, W3, WQX, X, elements, mono
from wittaut.autos import (AutTriple, apply_aut, build_distinguished, check_triple, compose,
                           identity_triple, invert, is_identity, lemma23_bruteforce,
                           lemma23_decide, stabilizer_of, triples_equal)
from wittaut.errors import (HypothesisViolated, InvalidTriple, NotCoprime, SearchSpaceTooLarge,
                            TooSmallConstant)
from wittaut.intlat import int_identity
from wittaut.sampling import random_triple
from wittaut.witt import WittElement, bracket

SWAP = AutTriple((1, 1), ((0, 1), (1, 0)), ((0, 1), (1, 0)))
S2357 = [(2, 1), (3, 1), (5, 2), (7, 2)]


def test_check_triple_examples():
    for alg in (W1, W2, W3, WQX):
        assert check_triple(alg, identity_triple(alg))
    assert check_triple(W2, SWAP)
    bad = AutTriple((1, 1), int_identity(2), ((2, 0), (0, 2)))
    res = check_triple(W2, bad)
    assert not res and "compatibility" in res.reason
    with pytest.raises(InvalidTriple):
        apply_aut(bad, mono(W2, [1, 0], [1, 0]))


def test_apply_examples():
    x = mono(W2, [1, 2], [1, 0])
    assert apply_aut(identity_triple(W2), x) == x
    chi2 = AutTriple((2,), ((1,),), ((1,),))
    assert apply_aut(chi2, mono(W1, [3], [1])) == mono(W1, [3], [8])
    assert apply_aut(SWAP, x) == mono(W2, [2, 1], [0, 1])


def test_compose_examples():
    chi2 = AutTriple((2,), ((1,),), ((1,),))
    chi3 = AutTriple((3,), ((1,),), ((1,),))
    assert triples_equal(W1, compose(W1, chi2, chi3), AutTriple((6,), ((1,),), ((1,),)))
    assert is_identity(W2, compose(W2, SWAP, SWAP))


@pytest.mark.parametrize("alg", [W2, W3, WQX])
def test_compose_with_inverse(alg):
    rng = random.Random(3)
    for _ in range(25):
        t = random_triple(alg, rng)
        assert check_triple(alg, t)
        assert is_identity(alg, compose(alg, t, invert(alg, t)))
        assert is_identity(alg, compose(alg, invert(alg, t), t))


@st.composite
def triples(draw, alg):
    return random_triple(alg, random.Random(draw(st.integers(0, 10 ** 6))))


@given(triples(W2), elements(W2), elements(W2))
def test_homomorphism_w2(t, x, y):
    assert apply_aut(t, bracket(x, y)) == bracket(apply_aut(t, x), apply_aut(t, y))


@given(triples(WQX), elements(WQX), elements(WQX))
def test_homomorphism_qx(t, x, y):
    assert apply_aut(t, bracket(x, y)) == bracket(apply_aut(t, x), apply_aut(t, y))


@given(triples(W2), triples(W2), elements(W2))
def test_compose_is_function_composition(a, b, x):
    assert apply_aut(compose(W2, a, b), x) == apply_aut(a, apply_aut(b, x))


def test_distinguished_examples():
    w = build_distinguished(WQX, 1, (2, 3, 5, 7)).element
    expect = WittElement(WQX, [(((1, 2),), ((1, 1),)), (((1, 3),), ((1, 1),)),
                               (((2, 5),), ((1, 1),)), (((2, 7),), ((1, 1),))])
    assert w == expect
    with pytest.raises(NotCoprime):
        build_distinguished(W2, 1, (2, 4, 3, 5))
    with pytest.raises(TooSmallConstant):
        build_distinguished(W1, 1, (1, 3))
    neg = build_distinguished(W1, -1).element
    assert set(neg.terms) == {((1, -2),), ((1, -3),)}


def test_lemma23_examples():
    r = lemma23_decide(1, [(2, 1)], [(2, 1), (3, 1)])
    assert r.sigmas == (((1,),),)
    r = lemma23_decide(2, S2357, S2357)
    assert r.is_identity_only(2) and r.hypotheses_hold
    r = lemma23_decide(1, [(2, 1)], [(2, 1), (-2, 1)])
    assert set(r.sigmas) == {((1,),), ((-1,),)} and not r.hypotheses_hold
    with pytest.raises(HypothesisViolated):
        lemma23_decide(2, [(2, 1)], S2357)


def test_lemma23_bruteforce_examples():
    assert lemma23_bruteforce(1, [(2, 1)], [(2, 1), (3, 1)], 3) == (((1,),),)
    assert lemma23_bruteforce(2, S2357, S2357, 1) == (int_identity(2),)
    assert lemma23_bruteforce(2, S2357, S2357, 0) == ()
    with pytest.raises(SearchSpaceTooLarge):
        lemma23_bruteforce(3, S2357, S2357, 8, cap=1000)


def test_bruteforce_progress_cancel():
    seen = []
    assert lemma23_bruteforce(2, S2357, S2357, 1, progress=lambda d, t: seen.append(d) or False) is None
    assert len(seen) == 1


def test_stabilizer_examples():
    w = build_distinguished(W1, 1, (2, 3))
    assert [is_identity(W1, t) for t in stabilizer_of(w)] == [True]
    raw = mono(W1, [2], [1]) + mono(W1, [4], [1])
    stab = stabilizer_of(raw)
    assert len(stab) == 2
    assert {t.chi for t in stab} == {(1,), (-1,)}
    assert all(t.sigma == ((1,),) and t.tau == ((1,),) for t in stab)
    wq = build_distinguished(WQX, 1, (2, 3, 5, 7))
    assert [is_identity(WQX, t) for t in stabilizer_of(wq)] == [True]


def test_stabilizer_fixes_w():
    for alg in (W2, W3, WQX):
        for sign in (1, -1):
            w = build_distinguished(alg, sign)
            for t in stabilizer_of(w):
                assert apply_aut(t, w.element) == w.element


def test_chi_over_qx():
    t = AutTriple((X + 1, 2), ((-1, 0), (0, -1)), ((-1,),))
    assert check_triple(WQX, t)
    y = apply_aut(t, mono(WQX, [1, 0], [1]))
    assert y == mono(WQX, [-1, 0], [-(X + 1)])
