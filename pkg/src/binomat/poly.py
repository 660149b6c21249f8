"""Dense univariate polynomials and truncated power series over a scalar ring."""

from __future__ import annotations

from .numbers import DomainError


def _check_ring(a, b):
    if a.ring is not b.ring and a.ring != b.ring:
        raise TypeError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")


class Poly:
    """Coefficients in ascending degree, trailing zeros stripped."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=()):
        cs = [ring(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls, ring) -> Poly:
        return cls(ring, (0, 1))

    @classmethod
    def const(cls, ring, c) -> Poly:
        return cls(ring, (c,))

    @classmethod
    def from_roots(cls, ring, roots) -> Poly:
        """prod (x - r)."""
        result = cls.const(ring, 1)
        for r in roots:
            result = result * cls(ring, (-ring(r), 1))
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ring.zero

    def _lift(self, other) -> Poly:
        if isinstance(other, Poly):
            _check_ring(self, other)
            return other
        return Poly.const(self.ring, other)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self.ring, [self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return Poly(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise DomainError("negative polynomial power")
        result, base = Poly.const(self.ring, 1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x0):
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def map(self, ring) -> Poly:
        return Poly(ring, self.coeffs)

    def paper_sign(self) -> Poly:
        """Multiply by (-1)^degree: turns det(xI - A) into det(A - xI)."""
        return -self if self.degree % 2 else self

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def ascending(self) -> str:
        """"c0 + c1*x + ..." regardless of ring."""
        return _render_ascending(self.coeffs) or "0"

    def __str__(self):
        if not self.coeffs:
            return "0"
        if getattr(self.ring, "tag", "") == "Q":
            return _render_descending(self.coeffs)
        return _render_ascending(self.coeffs)

    def __repr__(self):
        return f"Poly({self.ring!r}, {list(map(str, self.coeffs))})"


def _monomial(k: int) -> str:
    return "" if k == 0 else ("x" if k == 1 else f"x^{k}")


def _render_ascending(coeffs) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = _monomial(k)
        s = str(c)
        if not mono:
            terms.append(s)
        elif s == "1":
            terms.append(mono)
        else:
            terms.append(f"{s}*{mono}")
    return " + ".join(terms)


def _render_descending(coeffs) -> str:
    out = ""
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        mono = _monomial(k)
        body = mono if (mag == 1 and mono) else f"{mag}{mono}"
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


class Series:
    """Power series truncated to a fixed number of terms N (x^0 .. x^{N-1}).

    Binary operations on series of different lengths truncate to the shorter.
    """

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs, N: int | None = None):
        cs = [ring(c) for c in coeffs]
        if N is not None:
            cs = (cs + [ring.zero] * N)[:N]
        if not cs:
            raise DomainError("a truncated series needs at least one term")
        self.ring = ring
        self.coeffs = tuple(cs)

    @classmethod
    def from_poly(cls, p: Poly, N: int) -> Series:
        return cls(p.ring, p.coeffs, N)

    @property
    def N(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def _lift(self, other) -> Series:
        if isinstance(other, Series):
            _check_ring(self, other)
            return other
        if isinstance(other, Poly):
            _check_ring(self, other)
            return Series.from_poly(other, self.N)
        return Series(self.ring, [other], self.N)

    def __add__(self, other):
        o = self._lift(other)
        return Series(self.ring, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Series(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        N = min(self.N, o.N)
        out = [self.ring.zero] * N
        for i in range(N):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(N - i):
                out[i + j] = out[i + j] + a * o.coeffs[j]
        return Series(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        N = min(self.N, o.N)
        return _divide(self.coeffs[:N], o.coeffs[:N], N, self.ring)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int) -> Series:
        base = self
        if k < 0:
            base, k = Series(self.ring, [1], self.N) / self, -k
        result = Series(self.ring, [1], self.N)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def shift(self, k: int) -> Series:
        """Multiply by x^k, k >= 0."""
        return Series(self.ring, [self.ring.zero] * k + list(self.coeffs), self.N)

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.ring == other.ring and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self):
        body = _render_ascending(self.coeffs) or "0"
        return f"{body} + O(x^{self.N})"

    def __repr__(self):
        return f"Series({self.ring!r}, {list(map(str, self.coeffs))})"


def _divide(num, den, N: int, ring) -> Series:
    num = list(num) + [ring.zero] * (N - len(num))
    den = list(den) + [ring.zero] * max(0, N - len(den))
    if not den[0]:
        raise DomainError("series division by a series with zero constant term")
    try:
        inv0 = ring.one / den[0]
    except ZeroDivisionError as exc:
        raise DomainError("constant term of the divisor is not invertible") from exc
    q = []
    for k in range(N):
        acc = num[k]
        for i in range(1, k + 1):
            if den[i]:
                acc = acc - den[i] * q[k - i]
        q.append(acc * inv0)
    return Series(ring, q)


def series_div(num: Poly, den: Poly, N: int) -> Series:
    """First N coefficients of num/den as a formal power series."""
    if N < 1:
        raise DomainError("series_div needs N >= 1")
    _check_ring(num, den)
    return _divide(num.coeffs[:N], den.coeffs[: N + 1], N, num.ring)
