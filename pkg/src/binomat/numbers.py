"""Integer machinery: Fibonacci numbers, binomials, the signed fibonomial array,
primality by trial division and square roots modulo a prime."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

# Exact rationals are stdlib fractions: always reduced, denominator > 0.
Rational = Fraction

TRIAL_DIVISION_LIMIT = 10**6


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


def _fib_pair(k: int) -> tuple[int, int]:
    # (F_k, F_{k+1}) for k >= 0 by fast doubling.
    if k == 0:
        return 0, 1
    a, b = _fib_pair(k >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    if k & 1:
        return d, c + d
    return c, d


def fib(k: int) -> int:
    """Fibonacci number F_k for any signed k, with F_0 = 0, F_1 = 1 and
    F_{-k} = (-1)^(k+1) F_k."""
    if k >= 0:
        return _fib_pair(k)[0]
    f = _fib_pair(-k)[0]
    return f if k % 2 else -f


def binom(a: int, b: int) -> int:
    """C(a, b), zero outside 0 <= b <= a."""
    if a < 0:
        raise DomainError(f"binom: upper index must be >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return comb(a, b)


@lru_cache(maxsize=None)
def fibonomial_b(n: int, m: int) -> Fraction:
    """Signed fibonomial array: b(n,0) = 1, b(n,m) = 0 for m > n, otherwise
    b(n,m) = b(n-1,m-1) * (-1)^m * F_n / F_m."""
    if n < 0 or m < 0:
        raise DomainError(f"fibonomial_b: indices must be >= 0, got ({n}, {m})")
    if m == 0:
        return Fraction(1)
    if m > n:
        return Fraction(0)
    sign = -1 if m % 2 else 1
    return fibonomial_b(n - 1, m - 1) * sign * Fraction(fib(n), fib(m))


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    if p > TRIAL_DIVISION_LIMIT**2:
        raise DomainError(f"{p} is too large for trial division")
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"modulus must be prime, got {p!r}")
    return p


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a modulo the odd prime p (Tonelli-Shanks), or None."""
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if legendre(a, p) != 1:
        return None
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
