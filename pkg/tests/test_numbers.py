from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binomat.numbers import (
    DomainError,
    binom,
    fib,
    fibonomial_b,
    is_prime,
    legendre,
    require_prime,
    sqrt_mod,
)

from oracles import fibonomial_signed, naive_fib, pascal


@pytest.mark.parametrize("k, want", [(4, 3), (0, 0), (-3, 2), (1, 1), (2, 1), (-1, 1), (-2, -1)])
def test_fib_examples(k, want):
    assert fib(k) == want


def test_fib_matches_iteration():
    for k in range(-60, 200):
        assert fib(k) == naive_fib(k), k


def test_fib_large_index():
    assert fib(1000) == naive_fib(1000)
    assert fib(-1000) == -fib(1000)


@given(st.integers(-50, 50))
def test_fib_recurrence(k):
    assert fib(k + 1) == fib(k) + fib(k - 1)


def test_fib_divisibility():
    for n in range(1, 31):
        for k in range(1, 6):
            assert fib(n * k) % fib(n) == 0


@pytest.mark.parametrize("a, b, want", [(3, 2, 3), (0, 3, 0), (2, 0, 1), (0, 0, 1), (5, -1, 0)])
def test_binom_examples(a, b, want):
    assert binom(a, b) == want


def test_binom_matches_pascal():
    for a in range(15):
        for b in range(-2, a + 3):
            assert binom(a, b) == pascal(a, b)


def test_binom_rejects_negative_top():
    with pytest.raises(DomainError):
        binom(-1, 0)


@pytest.mark.parametrize("n, m, want", [(4, 2, -6), (5, 0, 1), (2, 3, 0)])
def test_fibonomial_examples(n, m, want):
    assert fibonomial_b(n, m) == want


def test_fibonomial_integral_and_matches_product_formula():
    for n in range(41):
        for m in range(n + 1):
            b = fibonomial_b(n, m)
            assert isinstance(b, Fraction) and b.denominator == 1
            if n <= 20:
                assert b == fibonomial_signed(n, m)


def test_fibonomial_row_4():
    assert [fibonomial_b(4, m) for m in range(5)] == [1, -3, -6, 3, 1]


def test_primes():
    small = [p for p in range(60) if is_prime(p)]
    assert small == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(1_000_003)
    with pytest.raises(DomainError):
        require_prime(9)
    with pytest.raises(DomainError):
        require_prime(1)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13, 17, 41, 97])
def test_sqrt_mod_and_legendre(p):
    for a in range(p):
        r = sqrt_mod(a, p)
        if legendre(a, p) == -1:
            assert r is None
        else:
            assert r * r % p == a
