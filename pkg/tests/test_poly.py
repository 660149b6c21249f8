from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from binomat.finite import GF, quad_ext_roots
from binomat.golden import PHI
from binomat.numbers import DomainError
from binomat.poly import Poly, Series, series_div
from binomat.rings import QPHI, QQ

small = st.integers(-6, 6)
qpolys = st.lists(small, max_size=6).map(lambda cs: Poly(QQ, cs))


def test_examples():
    x = Poly.x(QQ)
    assert (1 + x) * (1 - x) == 1 - x**2
    F3 = GF(3)
    assert Poly(F3, (2, 1, 1)) * Poly(F3, (2, 2, 1)) == Poly(F3, (1, 0, 0, 0, 1))
    p = Poly(QQ, (3, 0, 1))
    assert p + Poly(QQ) == p
    assert (1 + x) ** 3 == Poly(QQ, (1, 3, 3, 1))
    assert p**0 == Poly.const(QQ, 1)


def test_normalized_and_degree():
    p = Poly(QQ, (1, 2, 0, 0))
    assert p.coeffs == (1, 2) and p.degree == 1
    assert Poly(QQ, (0, 0)).degree == -1
    assert p[7] == 0


def test_mixed_rings_rejected():
    with pytest.raises(TypeError):
        Poly(QQ, (1, 1)) + Poly(GF(3), (1, 1))


def test_mod3_factorizations():
    F3 = GF(3)
    P = lambda *c: Poly(F3, c)
    assert P(1, 1) * P(2, 1) == P(2, 0, 1)
    x4p1 = P(1, 0, 0, 0, 1)
    x4m1 = P(2, 0, 0, 0, 1)
    for k in range(1, 7):
        assert P(2, 1, 1) ** k * P(2, 2, 1) ** k == x4p1**k
        assert (P(1, 1) * P(2, 1) * P(1, 0, 1)) ** k == x4m1**k
    # x^4 + 1 = (x^2 - x - 1)(x^2 + x - 1)
    assert P(-1, -1, 1) * P(-1, 1, 1) == x4p1


def test_eval():
    assert Poly(QQ, (-1, -1, 1))(PHI) == 0
    alpha, _ = quad_ext_roots(3, (-1, -1, 1))
    assert Poly(GF(3), (1, 0, 0, 0, 1))(alpha) == 0
    assert Poly(QQ, (-1, 1))(1) == 0


def test_from_roots_and_paper_sign():
    p = Poly.from_roots(QQ, [1, 2])
    assert p == Poly(QQ, (2, -3, 1))
    q = Poly.from_roots(QQ, [1, 2, 3])
    assert q.paper_sign() == -q and p.paper_sign() == p


def test_rendering():
    assert str(Poly(QQ, (1, 3, -6, -3, 1))) == "x^4 - 3x^3 - 6x^2 + 3x + 1"
    assert str(Poly(QQ, (Fraction(-1, 2), 0, 1))) == "x^2 - 1/2"
    assert str(Poly(GF(3), (1, 0, 0, 0, 1))) == "1 + x^4"
    assert str(Poly(GF(3), (0, 2, 1))) == "2*x + x^2"
    assert Poly(QQ, (1, 5, 8, 4)).ascending() == "1 + 5*x + 8*x^2 + 4*x^3"
    assert str(Poly(QQ)) == "0"


@given(qpolys, st.integers(0, 6), st.integers(0, 6))
def test_pow_additive(p, j, k):
    assert p ** (j + k) == p**j * p**k


@given(qpolys, qpolys, qpolys)
def test_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    if p and q:
        assert (p * q).degree == p.degree + q.degree


@given(qpolys, qpolys, st.integers(1, 12))
def test_series_div_multiply_back(a, b, N):
    assume(b[0] != 0)
    s = series_div(a, b, N)
    assert len(s) == N
    assert s * Series.from_poly(b, N) == Series.from_poly(a, N)


@pytest.mark.parametrize(
    "num, den, N, want",
    [((1,), (1, -1), 4, (1, 1, 1, 1)), ((1,), (1, -2), 2, (1, 2)), ((2, -5), (1, -4, 4), 2, (2, 3))],
)
def test_series_div_examples(num, den, N, want):
    assert series_div(Poly(QQ, num), Poly(QQ, den), N).coeffs == want


def test_series_div_zero_constant():
    with pytest.raises(DomainError):
        series_div(Poly(QQ, (1,)), Poly(QQ, (0, 1)), 3)
    with pytest.raises(DomainError):
        series_div(Poly(GF(3), (1,)), Poly(GF(3), (3, 1)), 3)


def test_series_length_rules():
    a = Series(QQ, (1, 2, 3), 5)
    b = Series(QQ, (1, 1), 3)
    assert a.N == 5 and (a + b).N == 3 and (a * b).N == 3
    assert (a * a).N == 5
    assert str(Series(QQ, (2, 3), 2)) == "2 + 3*x + O(x^2)"


@given(st.lists(small, min_size=1, max_size=5), st.integers(1, 8))
def test_series_inverse(cs, N):
    assume(cs[0] != 0)
    s = Series(QQ, cs, N)
    assert s * s**-1 == Series(QQ, (1,), N)


def test_series_over_golden_field():
    s = Series(QPHI, (1, -PHI), 5)
    inv = s**-1
    assert inv.coeffs == tuple(PHI**k for k in range(5))
