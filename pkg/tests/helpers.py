from fractions import Fraction

from hypothesis import settings, strategies as st

from wittaut.scalars import QQX, RatFun
from wittaut.witt import Algebra, WittElement, from_dense

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

X = RatFun.x()
W1 = Algebra.witt(1)
W2 = Algebra.witt(2)
W3 = Algebra.witt(3)
WQX = Algebra.general([[1, X]], QQX)
INF = Algebra.infinite()

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
small_ints = st.integers(-4, 4)


@st.composite
def polys(draw, max_deg=2):
    cs = draw(st.lists(st.integers(-3, 3), min_size=0, max_size=max_deg + 1))
    return tuple(cs)


@st.composite
def ratfuns(draw, nonzero=False):
    num = draw(polys())
    den = draw(polys().filter(lambda p: any(p)))
    r = RatFun(num, den)
    if nonzero and r == 0:
        r = RatFun.const(1)
    return r


@st.composite
def elements(draw, alg, max_terms=3):
    n, m = alg.rank, alg.dim
    terms = []
    for _ in range(draw(st.integers(0, max_terms))):
        e = from_dense(draw(st.lists(small_ints, min_size=n, max_size=n)))
        d = from_dense(draw(st.lists(st.integers(-3, 3), min_size=m, max_size=m)))
        terms.append((e, d))
    return WittElement(alg, terms)


def mono(alg, exp, tan):
    return WittElement.monomial(alg, exp, tan)



__all__ = ["Fraction", "X", "W1", "W2", "W3", "WQX", "INF", "elements", "mono", "ratfuns",
           "rationals"]
