"""Exact arithmetic in Q(phi), phi = (1 + sqrt 5)/2."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


class GoldenNumber:
    """a + b*phi with rational a, b and phi^2 = phi + 1."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _q(a)
        self.b = _q(b)

    @classmethod
    def coerce(cls, x) -> GoldenNumber:
        if isinstance(x, GoldenNumber):
            return x
        return cls(x, 0)

    def __add__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenNumber(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GoldenNumber(-self.a, -self.b)

    def __pos__(self):
        return self

    def __mul__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.a, self.b, o.a, o.b
        bd = b * d
        return GoldenNumber(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def conj(self) -> GoldenNumber:
        # phi -> 1 - phi
        return GoldenNumber(self.a + self.b, -self.b)

    def norm(self) -> Fraction:
        a, b = self.a, self.b
        return a * a + a * b - b * b

    def inverse(self) -> GoldenNumber:
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("inverse of zero in Q(phi)")
        c = self.conj()
        return GoldenNumber(c.a / nm, c.b / nm)

    def __truediv__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = GoldenNumber(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = GoldenNumber.coerce(other)
        except TypeError:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def __float__(self):
        return float(self.a) + float(self.b) * 1.6180339887498949

    def __abs__(self):
        return -self if golden_sign(self) < 0 else self

    def __lt__(self, other):
        return golden_sign(self - other) < 0

    def __le__(self, other):
        return golden_sign(self - other) <= 0

    def __gt__(self, other):
        return golden_sign(self - other) > 0

    def __ge__(self, other):
        return golden_sign(self - other) >= 0

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}*phi"

    def __repr__(self):
        return f"GoldenNumber({self.a}, {self.b})"


PHI = GoldenNumber(0, 1)
PHIBAR = GoldenNumber(1, -1)


def golden_sign(x: GoldenNumber) -> int:
    """Exact sign of a + b*phi as a real number."""
    x = GoldenNumber.coerce(x)
    # 2(a + b*phi) = u + v*sqrt5 with u = 2a + b, v = b
    u = 2 * x.a + x.b
    v = x.b
    su = (u > 0) - (u < 0)
    sv = (v > 0) - (v < 0)
    if su == sv or sv == 0:
        return su
    if su == 0:
        return sv
    u2, v2 = u * u, 5 * v * v
    if u2 == v2:
        return 0
    return su if u2 > v2 else sv


def cmp_abs(x: GoldenNumber, y: GoldenNumber) -> int:
    """Sign of |x| - |y|."""
    return golden_sign(abs(x) - abs(y))


def parse_golden(text: str) -> GoldenNumber:
    """Inverse of str(): accepts 'a', 'a+b*phi', 'a-b*phi' and 'b*phi'."""
    s = text.strip().replace(" ", "")
    if not s.endswith("*phi"):
        return GoldenNumber(Fraction(s))
    body = s[: -len("*phi")]
    # split at the last sign that is not the leading one or part of an exponent
    for k in range(len(body) - 1, 0, -1):
        if body[k] in "+-":
            return GoldenNumber(Fraction(body[:k]), Fraction(body[k:]))
    return GoldenNumber(0, Fraction(body))
