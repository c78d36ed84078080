from fractions import Fraction

import pytest
from hypothesis import given

from helpers import X, ratfuns, rationals
from wittaut.errors import ZeroDenominator
from wittaut.scalars import (QQ, QQX, RatFun, field_from_tag, q_roots, scalar_normalize,
                             torsion_solutions, unit_torsion_solutions)


def test_normalize_rational():
    assert scalar_normalize(2, 4) == Fraction(1, 2)
    z = scalar_normalize(0, 7)
    assert z == 0 and Fraction(z).denominator == 1


def test_normalize_polynomial_quotient():
    r = scalar_normalize((-1, 0, 1), (-1, 1), QQX)
    assert r == RatFun((1, 1))
    assert r.den == (1,)


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        scalar_normalize(1, 0)
    with pytest.raises(ZeroDenominator):
        RatFun((1,), ())


@pytest.mark.parametrize("k,kp,expected", [(2, 3, {1}), (2, 4, {1, -1}), (1, 5, {1})])
def test_unit_torsion(k, kp, expected):
    assert unit_torsion_solutions(k, kp) == expected
    assert unit_torsion_solutions(k, kp, QQX) == expected


def test_torsion_rejects_nonpositive():
    with pytest.raises(ValueError):
        unit_torsion_solutions(0, 3)
    assert torsion_solutions(()) == {1, -1}


def test_field_tags():
    assert field_from_tag("Q") is QQ
    assert field_from_tag("Q(x)") is QQX


def test_roots():
    assert sorted(q_roots(Fraction(4, 9), 2)) == [Fraction(-2, 3), Fraction(2, 3)]
    assert q_roots(-8, 3) == [-2]
    assert q_roots(2, 2) == []
    assert q_roots(-1, 2) == []
    sq = QQX.roots((X + 1) * (X + 1), 2)
    assert {r for r in sq} == {X + 1, -(X + 1)}
    assert QQX.roots(X, 2) == []


@given(ratfuns(), ratfuns(), ratfuns())
def test_ratfun_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a + 0 == a and a * 1 == a


@given(ratfuns(nonzero=True), ratfuns())
def test_ratfun_division(a, b):
    q = b / a
    assert q * a == b
    assert q.den[-1] == 1


@given(ratfuns())
def test_ratfun_canonical(a):
    # equal values share one representation
    b = RatFun(tuple(2 * c for c in a.num), tuple(2 * c for c in a.den))
    assert a == b and hash(a) == hash(b)
    assert a.num == b.num and a.den == b.den


@given(rationals, rationals)
def test_rational_field_consistency(a, b):
    assert QQ.coerce(a) + QQ.coerce(b) == a + b
    assert RatFun.const(a) + RatFun.const(b) == RatFun.const(a + b)
    if b:
        assert QQ.div(a, b) == Fraction(a) / b
