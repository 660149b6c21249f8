import pytest
from hypothesis import given
from hypothesis import strategies as st

from binomat.finite import GF, GF2, ModScalar, quad_ext_roots
from binomat.numbers import DomainError
from binomat.poly import Poly

PRIMES = [2, 3, 5, 7, 11, 13, 17, 23]


@given(st.sampled_from(PRIMES), st.integers(), st.integers())
def test_prime_field_ops(p, a, b):
    F = GF(p)
    x, y = F(a), F(b)
    assert (x + y).value == (a + b) % p
    assert (x * y).value == (a * b) % p
    assert (x - y).value == (a - b) % p
    if y:
        assert (x / y) * y == x
        assert y * y.inverse() == 1


def test_zero_inverse_fails():
    with pytest.raises((ZeroDivisionError, DomainError)):
        GF(7)(0).inverse()


def test_mixed_moduli_rejected():
    with pytest.raises((TypeError, ValueError)):
        ModScalar(1, 3) + ModScalar(1, 5)


def test_gf9_modulus_is_golden_polynomial():
    F = GF2(3)
    t = F.t
    assert t * t == t + 1


@pytest.mark.parametrize("p", PRIMES)
def test_quadratic_field_is_a_field(p):
    F = GF2(p)
    elems = list(F.elements())
    assert len(elems) == p * p
    for z in elems:
        if z:
            assert z * z.inverse() == F.one
    # Frobenius fixes exactly the base field
    fixed = [z for z in elems if z**p == z]
    assert len(fixed) == p


def check_roots(p, c0, c1):
    r1, r2 = quad_ext_roots(p, (c0, c1, 1))
    assert r1 + r2 == -c1
    assert r1 * r2 == c0
    for r in (r1, r2):
        assert r * r + r * c1 + c0 == 0


def test_gf9_golden_roots():
    alpha, beta = quad_ext_roots(3, (-1, -1, 1))
    t = GF2(3).t
    assert {str(alpha), str(beta)} == {str(t), str(1 - t)}
    assert alpha * beta == -1
    assert beta == 1 - alpha


def test_gf25_double_root():
    r1, r2 = quad_ext_roots(5, (-1, -1, 1))
    assert r1 == 3 and r2 == 3


def test_gf9_x2_plus_1():
    r, s = quad_ext_roots(3, (1, 0, 1))
    assert r * r == -1 and s == -r


def test_x4_plus_1_vanishes_at_alpha():
    alpha, _ = quad_ext_roots(3, (-1, -1, 1))
    assert alpha**4 + 1 == 0


@pytest.mark.parametrize("p", PRIMES)
def test_all_quadratics(p):
    for c0 in range(p):
        for c1 in range(p):
            check_roots(p, c0, c1)


def test_roots_accept_poly():
    f = Poly(GF(3), (2, 2, 1))
    r1, r2 = quad_ext_roots(3, f)
    assert r1 * r2 == 2


def test_quad_roots_errors():
    with pytest.raises(DomainError):
        quad_ext_roots(4, (1, 1, 1))
    with pytest.raises(DomainError):
        quad_ext_roots(3, (1, 1, 2))
    with pytest.raises(DomainError):
        quad_ext_roots(3, (1, 1, 1, 1))
