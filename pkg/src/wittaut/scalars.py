"""Exact ground fields: the rationals and univariate rational functions Q(x).

Rationals are plain Python ``int`` (when integral) or ``fractions.Fraction``;
``qnorm`` keeps that canonical so equal values have identical representations.
Elements of Q(x) are :class:`RatFun` instances with coprime numerator and
monic denominator.  Python integers and fractions mix freely with them.
"""

from fractions import Fraction
from math import gcd

from .errors import ParseError, ZeroDenominator


def qnorm(x):
    """Canonical rational: an int when integral, else a reduced Fraction."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"not a rational: {x!r}")


def qdiv(a, b):
    if b == 0:
        raise ZeroDenominator("division by zero")
    if isinstance(a, int) and isinstance(b, int):
        if a % b == 0:
            return a // b
        return Fraction(a, b)
    return qnorm(Fraction(a) / Fraction(b))


# ---------------------------------------------------------------------------
# dense polynomials over Q, coefficient tuples in ascending degree; () is zero

def ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(qnorm(c) for c in p)


def padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return ptrim(out)


def pneg(p):
    return tuple(-c for c in p)


def psub(p, q):
    return padd(p, pneg(q))


def pscale(p, c):
    if c == 0:
        return ()
    return tuple(qnorm(a * c) for a in p)


def pmul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return ptrim(out)


def pdivmod(p, q):
    if not q:
        raise ZeroDenominator("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lc = q[-1]
    if len(r) <= dq:
        return (), ptrim(r)
    quo = [0] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = qdiv(r[k + dq], lc)
        quo[k] = c
        if c != 0:
            for j, b in enumerate(q):
                r[k + j] -= c * b
    return ptrim(quo), ptrim(r[:dq])


def pmonic(p):
    if not p:
        return p
    lc = p[-1]
    if lc == 1:
        return p
    return tuple(qdiv(c, lc) for c in p)


def pgcd(p, q):
    """Monic gcd by Euclid's algorithm."""
    while q:
        p, q = q, pdivmod(p, q)[1]
    return pmonic(p)


def ppow(p, k):
    out = (1,)
    base = p
    while k:
        if k & 1:
            out = pmul(out, base)
        k >>= 1
        if k:
            base = pmul(base, base)
    return out


def _int_root(n, k):
    """Exact k-th root of a nonnegative integer, or None."""
    if n < 2:
        return n
    x = 1 << (-(-n.bit_length() // k))  # upper bound on the root
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x if x ** k == n else None


def q_roots(c, k):
    """All rationals u with u**k == c (k >= 1)."""
    c = Fraction(c)
    if c == 0:
        return [0]
    sign = 1 if c > 0 else -1
    if sign < 0 and k % 2 == 0:
        return []
    a = _int_root(abs(c.numerator), k)
    b = _int_root(c.denominator, k)
    if a is None or b is None:
        return []
    r = qnorm(Fraction(a, b))
    if k % 2 == 0:
        return [r, -r]
    return [r * sign]


def _monic_poly_root(p, k):
    """Monic k-th root of a monic polynomial, or None."""
    d = len(p) - 1
    if d % k:
        return None
    e = d // k
    g = [0] * e + [1]
    for j in range(1, e + 1):
        g[e - j] = 0
        cur = ppow(tuple(g), k)
        coef = cur[d - j] if d - j < len(cur) else 0
        g[e - j] = qdiv(p[d - j] - coef, k)
    g = ptrim(g)
    return g if ppow(g, k) == p else None


def poly_roots(p, k):
    """All polynomials g over Q with g**k == p."""
    if not p:
        return [()]
    lc_roots = q_roots(p[-1], k)
    if not lc_roots:
        return []
    g = _monic_poly_root(pmonic(p), k)
    if g is None:
        return []
    return [pscale(g, r) for r in lc_roots]


# ---------------------------------------------------------------------------

class RatFun:
    """An element of Q(x) in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,), _reduced=False):
        if _reduced:
            self.num, self.den = num, den
            return
        num, den = ptrim(num), ptrim(den)
        if not den:
            raise ZeroDenominator("rational function with zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            return
        if len(den) > 1:
            g = pgcd(num, den)
            if len(g) > 1:
                num = pdivmod(num, g)[0]
                den = pdivmod(den, g)[0]
        lc = den[-1]
        if lc != 1:
            num = tuple(qdiv(c, lc) for c in num)
            den = tuple(qdiv(c, lc) for c in den)
        self.num, self.den = num, den

    @classmethod
    def const(cls, c):
        c = qnorm(c)
        return cls((c,) if c != 0 else (), (1,), _reduced=True)

    @classmethod
    def x(cls):
        return cls((0, 1), (1,), _reduced=True)

    @staticmethod
    def lift(v):
        if isinstance(v, RatFun):
            return v
        if isinstance(v, (int, Fraction)):
            return RatFun.const(v)
        return NotImplemented

    def is_constant(self):
        return len(self.num) <= 1 and self.den == (1,)

    def constant_value(self):
        return self.num[0] if self.num else 0

    def __add__(self, other):
        o = RatFun.lift(other)
        if o is NotImplemented:
            return o
        if self.den == (1,) and o.den == (1,):
            return RatFun(padd(self.num, o.num), (1,), _reduced=True)
        if self.den == o.den:
            return RatFun(padd(self.num, o.num), self.den)
        return RatFun(padd(pmul(self.num, o.den), pmul(o.num, self.den)),
                      pmul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFun(pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        o = RatFun.lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = RatFun.lift(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = RatFun.lift(other)
        if o is NotImplemented:
            return o
        if self.den == (1,) and o.den == (1,):
            return RatFun(pmul(self.num, o.num), (1,), _reduced=True)
        return RatFun(pmul(self.num, o.num), pmul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDenominator("inverse of zero")
        return RatFun(self.den, self.num)

    def __truediv__(self, other):
        o = RatFun.lift(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = RatFun.lift(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFun(ppow(self.num, k), ppow(self.den, k), _reduced=True)

    def __eq__(self, other):
        o = RatFun.lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def __repr__(self):
        return f"RatFun({format_poly(self.num)!r}, {format_poly(self.den)!r})"


def format_poly(p):
    if not p:
        return "0"
    parts = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
            continue
        mono = "x" if i == 1 else f"x^{i}"
        parts.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# fields

def parse_rational(s):
    if isinstance(s, bool):
        raise ParseError(f"bad rational literal: {s!r}")
    if isinstance(s, int):
        return s
    if not isinstance(s, str):
        raise ParseError(f"bad rational literal: {s!r}")
    text = s.strip()
    try:
        if "/" in text:
            p, q = text.split("/")
            p, q = int(p), int(q)
            if q == 0:
                raise ZeroDenominator(f"zero denominator in {s!r}")
            return qnorm(Fraction(p, q))
        return int(text)
    except ValueError:
        raise ParseError(f"bad rational literal: {s!r}") from None


def format_rational(q):
    q = qnorm(q)
    if isinstance(q, int):
        return str(q)
    return f"{q.numerator}/{q.denominator}"


class RationalField:
    tag = "Q"
    zero = 0
    one = 1

    def coerce(self, v):
        if isinstance(v, RatFun):
            if not v.is_constant():
                raise ParseError("rational function in a Q algebra")
            return v.constant_value()
        return qnorm(v)

    def parse(self, obj):
        return parse_rational(obj)

    def format(self, v):
        return format_rational(self.coerce(v))

    def div(self, a, b):
        return qdiv(a, b)

    def expand(self, v):
        """Coefficient expansion of a row entry after denominators are cleared."""
        return (v,)

    def clear_row(self, row):
        return [(v,) if v != 0 else () for v in row]

    def roots(self, c, k):
        return q_roots(c, k)

    def __repr__(self):
        return "Q"


class RationalFunctionField:
    tag = "Q(x)"
    zero = 0
    one = 1

    def coerce(self, v):
        r = RatFun.lift(v)
        if r is NotImplemented:
            raise TypeError(f"not a Q(x) scalar: {v!r}")
        return r

    def parse(self, obj):
        if isinstance(obj, dict):
            try:
                num = tuple(parse_rational(c) for c in obj["num"])
                den = tuple(parse_rational(c) for c in obj.get("den", ["1"]))
            except (KeyError, TypeError):
                raise ParseError(f"bad Q(x) scalar: {obj!r}") from None
            return RatFun(num, den)
        if obj == "x":
            return RatFun.x()
        return RatFun.const(parse_rational(obj))

    def format(self, v):
        r = self.coerce(v)
        return {"num": [format_rational(c) for c in (r.num or (0,))],
                "den": [format_rational(c) for c in r.den]}

    def div(self, a, b):
        if isinstance(a, RatFun) or isinstance(b, RatFun):
            return RatFun.lift(a) / RatFun.lift(b)
        return qdiv(a, b)

    def clear_row(self, row):
        """Multiply a row by the lcm of its denominators; return numerator polys."""
        rs = [RatFun.lift(v) for v in row]
        lcm = (1,)
        for r in rs:
            g = pgcd(lcm, r.den)
            lcm = pdivmod(pmul(lcm, r.den), g)[0]
        return [pmul(r.num, pdivmod(lcm, r.den)[0]) for r in rs]

    def roots(self, c, k):
        r = RatFun.lift(c)
        if not r.num:
            return [RatFun()]
        dens = _monic_poly_root(r.den, k) if len(r.den) > 1 else (1,)
        if dens is None:
            return []
        out = []
        for g in poly_roots(r.num, k):
            out.append(RatFun(g, dens))
        return out

    def __repr__(self):
        return "Q(x)"


QQ = RationalField()
QQX = RationalFunctionField()


def field_from_tag(tag):
    if tag == "Q":
        return QQ
    if tag == "Q(x)":
        return QQX
    raise ParseError(f"unknown field tag {tag!r}")


def expand_rows(field, rows):
    """Expand field-valued rows into rational rows with the same integer kernel.

    Each row is cleared of denominators; then comparing coefficients of every
    power of x gives one rational row per degree.
    """
    out = []
    for row in rows:
        polys = field.clear_row(row)
        deg = max((len(p) for p in polys), default=0)
        for k in range(deg):
            qrow = [p[k] if k < len(p) else 0 for p in polys]
            if any(c != 0 for c in qrow):
                out.append(qrow)
    return out


# ---------------------------------------------------------------------------

def scalar_normalize(num, den=1, field=QQ):
    """Canonical scalar from an unreduced fraction (of polynomials for Q(x)).

    >>> scalar_normalize(2, 4)
    Fraction(1, 2)
    >>> scalar_normalize(0, 7)
    0
    """
    if field is QQ:
        if den == 0:
            raise ZeroDenominator("zero denominator")
        return qnorm(Fraction(num, den))
    if isinstance(num, (int, Fraction)):
        num = (num,)
    if isinstance(den, (int, Fraction)):
        den = (den,)
    return RatFun(tuple(num), tuple(den))


def torsion_solutions(exponents, field=QQ):
    """Units u of the field with u**k == 1 for every k in ``exponents``.

    The only roots of unity in Q and Q(x) are 1 and -1, so the answer is {1}
    or {1, -1} depending on the parity of the gcd.
    """
    g = 0
    for k in exponents:
        g = gcd(g, k)
    cands = [1, -1]
    return {u for u in cands if all(u ** abs(k) == 1 for k in exponents)} if g else set(cands)


def unit_torsion_solutions(k, k_prime, field=QQ):
    if k < 1 or k_prime < 1:
        raise ValueError("exponents must be positive")
    return torsion_solutions((k, k_prime), field)
