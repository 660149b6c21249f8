"""Prime fields GF(p) and their quadratic extensions GF(p^2) = GF(p)[t]/(m(t))."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .numbers import DomainError, legendre, require_prime, sqrt_mod


class ModScalar:
    """Residue class value mod p, value kept in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.p = p
        self.value = value % p

    def _other(self, other) -> int:
        if isinstance(other, ModScalar):
            if other.p != self.p:
                raise TypeError(f"mixed moduli {self.p} and {other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        raise TypeError(f"cannot combine GF({self.p}) with {type(other).__name__}")

    def __add__(self, other):
        try:
            return ModScalar(self.value + self._other(other), self.p)
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return ModScalar(self.value - self._other(other), self.p)
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        try:
            return ModScalar(self._other(other) - self.value, self.p)
        except TypeError:
            return NotImplemented

    def __mul__(self, other):
        try:
            return ModScalar(self.value * self._other(other), self.p)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return ModScalar(-self.value, self.p)

    def inverse(self) -> ModScalar:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return ModScalar(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        try:
            o = ModScalar(self._other(other), self.p)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = ModScalar(self._other(other), self.p)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModScalar(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"ModScalar({self.value}, {self.p})"


class ModQuadScalar:
    """c0 + c1*t in GF(p)[t]/(t^2 + m1*t + m0)."""

    __slots__ = ("c0", "c1", "field")

    def __init__(self, c0: int, c1: int, field: QuadField):
        p = field.p
        self.c0 = c0 % p
        self.c1 = c1 % p
        self.field = field

    def _other(self, other) -> ModQuadScalar:
        if isinstance(other, ModQuadScalar):
            if other.field != self.field:
                raise TypeError("mixed quadratic extensions")
            return other
        return self.field(other)

    def __add__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return ModQuadScalar(self.c0 + o.c0, self.c1 + o.c1, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return ModQuadScalar(self.c0 - o.c0, self.c1 - o.c1, self.field)

    def __rsub__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __neg__(self):
        return ModQuadScalar(-self.c0, -self.c1, self.field)

    def __mul__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        f = self.field
        hi = self.c1 * o.c1
        return ModQuadScalar(
            self.c0 * o.c0 - hi * f.m0,
            self.c0 * o.c1 + self.c1 * o.c0 - hi * f.m1,
            f,
        )

    __rmul__ = __mul__

    def conj(self) -> ModQuadScalar:
        # Frobenius-free conjugate: t -> -m1 - t
        return ModQuadScalar(self.c0 - self.c1 * self.field.m1, -self.c1, self.field)

    def norm(self) -> ModScalar:
        n = self * self.conj()
        assert n.c1 == 0
        return ModScalar(n.c0, self.field.p)

    def inverse(self) -> ModQuadScalar:
        nm = self.norm()
        if not nm:
            raise ZeroDivisionError("inverse of zero in GF(p^2)")
        return self.conj() * nm.inverse().value

    def __truediv__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            o = self._other(other)
        except TypeError:
            return NotImplemented
        return self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self):
        return hash((self.c0, self.c1, self.field.p, self.field.m0, self.field.m1))

    def __bool__(self):
        return bool(self.c0 or self.c1)

    def in_base_field(self) -> bool:
        return self.c1 == 0

    def __str__(self):
        return f"{self.c0}+{self.c1}*t"

    def __repr__(self):
        return f"ModQuadScalar({self.c0}, {self.c1}, p={self.field.p})"


class PrimeField:
    is_ordered = False

    def __init__(self, p: int):
        self.p = require_prime(p)
        self.tag = f"GF({p})"
        self.zero = ModScalar(0, p)
        self.one = ModScalar(1, p)

    def __call__(self, x) -> ModScalar:
        if isinstance(x, ModScalar):
            if x.p != self.p:
                raise TypeError(f"element of GF({x.p}) is not in {self.tag}")
            return x
        if isinstance(x, int):
            return ModScalar(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise DomainError(f"{x} has no image in {self.tag}")
            return ModScalar(x.numerator * pow(x.denominator, -1, self.p), self.p)
        raise TypeError(f"cannot map {x!r} into {self.tag}")

    def parse(self, text: str) -> ModScalar:
        return self(int(text))

    def __repr__(self):
        return self.tag


class QuadField:
    """GF(p^2) presented as GF(p)[t]/(t^2 + m1*t + m0)."""

    is_ordered = False

    def __init__(self, p: int, m0: int, m1: int):
        self.p = require_prime(p)
        self.m0 = m0 % p
        self.m1 = m1 % p
        if _has_root(p, self.m0, self.m1):
            raise DomainError(f"t^2 + {self.m1}t + {self.m0} is reducible mod {p}")
        self.tag = f"GF({p}^2)"
        self.base = GF(p)
        self.zero = ModQuadScalar(0, 0, self)
        self.one = ModQuadScalar(1, 0, self)
        self.t = ModQuadScalar(0, 1, self)

    def __eq__(self, other):
        return (
            isinstance(other, QuadField)
            and (self.p, self.m0, self.m1) == (other.p, other.m0, other.m1)
        )

    def __hash__(self):
        return hash((self.p, self.m0, self.m1))

    def __call__(self, x) -> ModQuadScalar:
        if isinstance(x, ModQuadScalar):
            if x.field != self:
                raise TypeError("element of a different quadratic extension")
            return x
        if isinstance(x, ModScalar):
            if x.p != self.p:
                raise TypeError(f"element of GF({x.p}) is not in {self.tag}")
            return ModQuadScalar(x.value, 0, self)
        return ModQuadScalar(self.base(x).value, 0, self)

    def parse(self, text: str) -> ModQuadScalar:
        c0, c1 = text.replace(" ", "").removesuffix("*t").split("+")
        return ModQuadScalar(int(c0), int(c1), self)

    def elements(self):
        for c1 in range(self.p):
            for c0 in range(self.p):
                yield ModQuadScalar(c0, c1, self)

    def __repr__(self):
        return f"{self.tag} mod t^2+{self.m1}t+{self.m0}"


def _has_root(p: int, c0: int, c1: int) -> bool:
    if p == 2:
        return any((x * x + c1 * x + c0) % 2 == 0 for x in range(2))
    return legendre(c1 * c1 - 4 * c0, p) != -1


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


@lru_cache(maxsize=None)
def GF2(p: int) -> QuadField:
    """The canonical GF(p^2) used throughout: modulus t^2 - t - 1 whenever it is
    irreducible (so t is a root of x^2 - x - 1), else t^2 + t + 1 for p = 2,
    else t^2 - d for the least quadratic non-residue d."""
    require_prime(p)
    if p == 2:
        return QuadField(2, 1, 1)
    if legendre(5, p) == -1:
        return QuadField(p, -1, -1)
    d = 2
    while legendre(d, p) != -1:
        d += 1
    return QuadField(p, -d, 0)


def quad_ext_roots(p: int, coeffs) -> tuple[ModQuadScalar, ModQuadScalar]:
    """Both roots of the monic quadratic x^2 + c1*x + c0 inside GF2(p).

    `coeffs` is the ascending coefficient sequence (c0, c1, 1) of ints, residues
    or a polynomial over GF(p). Roots already in GF(p) come back embedded."""
    require_prime(p)
    if hasattr(coeffs, "coeffs"):
        coeffs = coeffs.coeffs
    cs = [c.value if isinstance(c, ModScalar) else int(c) for c in coeffs]
    if len(cs) != 3 or cs[2] % p != 1:
        raise DomainError("expected a monic quadratic (c0, c1, 1)")
    c0, c1 = cs[0] % p, cs[1] % p
    field = GF2(p)
    if p == 2:
        roots = [z for z in field.elements() if not (z * z + z * c1 + c0)]
        if len(roots) == 1:
            roots *= 2
        return roots[0], roots[1]
    disc = (c1 * c1 - 4 * c0) % p
    half = pow(2, -1, p)
    s = sqrt_mod(disc, p)
    if s is not None:
        root = field(s)
    else:
        # m1^2 - 4*m0 is a non-residue whose square root is 2t + m1
        dm = (field.m1 * field.m1 - 4 * field.m0) % p
        ratio = sqrt_mod(disc * pow(dm, -1, p), p)
        root = (field.t * 2 + field.m1) * ratio
    r1 = (root - c1) * half
    r2 = (-root - c1) * half
    return r1, r2
