from fractions import Fraction

import pytest

from binomat.family import build
from binomat.genfun import (
    affine_recurrence_closed,
    col_gf,
    col_gf_rational,
    extended_table,
    first_line_closed,
    row_gf,
    solve_affine_recurrence,
    verify_genfun,
)
from binomat.numbers import DomainError, fib
from binomat.poly import Poly
from binomat.rings import QQ

from oracles import matpow, pascal


def R_oracle(n, e):
    return matpow([[pascal(i, n - j - 1) for j in range(n)] for i in range(n)], e)


def test_first_line_examples():
    assert [first_line_closed(4, 1, "row", j) for j in range(1, 5)] == [0, 0, 0, 1]
    assert first_line_closed(2, 3, "column", 2) == 2
    assert first_line_closed(3, 2, "row", 2) == 2
    with pytest.raises(DomainError):
        first_line_closed(3, 2, "row", 4)
    with pytest.raises(DomainError):
        first_line_closed(3, 1, "column", 4)


def test_row_gf_examples():
    assert row_gf(2, 2, 2) == Poly(QQ, (1, 2))
    assert row_gf(4, 1, 1) == Poly(QQ, (0, 0, 0, 1))
    x = Poly.x(QQ)
    for n in range(1, 7):
        for i in range(1, n + 1):
            assert row_gf(n, 1, i) == x ** (n - i) * (1 + x) ** (i - 1)


def test_col_gf_examples():
    assert col_gf(2, 2, 2, 2).coeffs == (1, 2)
    assert col_gf(2, 3, 2, 2).coeffs == (2, 3)
    assert col_gf(4, 1, 2, 4).coeffs == (0, 0, 1, 3)
    num, den = col_gf_rational(2, 3, 2)
    # (2 - 5x)/(1 - 2x)^2 up to a common scalar
    assert num * Poly(QQ, (1, -4, 4)) * den[0] ** -1 == Poly(QQ, (2, -5)) * den * den[0] ** -1


def test_row_sums():
    for n in range(1, 9):
        for e in range(1, 7):
            P = build("R", n) ** e
            for i in range(1, n + 1):
                want = fib(e + 2) ** (i - 1) * fib(e + 1) ** (n - i)
                assert row_gf(n, e, i)(1) == want == sum(P.rows[i - 1])


def test_closed_forms_against_oracle():
    for n in range(1, 7):
        for e in range(1, 6):
            table = R_oracle(n, e)
            for k in range(1, n + 1):
                assert list(row_gf(n, e, k)[j] for j in range(n)) == table[k - 1]
                assert list(col_gf(n, e, k, n).coeffs) == [r[k - 1] for r in table]


def test_extended_table():
    rows = extended_table(3, 2, 4)
    assert len(rows) == 7
    series = [col_gf(3, 2, j, 7).coeffs for j in (1, 2, 3)]
    assert [list(r) for r in zip(*series)] == rows
    with pytest.raises(DomainError):
        extended_table(3, 1, 2)


def test_extended_column_can_be_fractional():
    # F_{e-1}^(n-i) with e = 4, n = 2, i = 4 is 2^-2
    v = first_line_closed(2, 4, "column", 4)
    assert v == Fraction(fib(4) ** 3, fib(3) ** 2) == Fraction(27, 4)


@pytest.mark.parametrize(
    "alpha, beta, c1, u, want",
    [
        (1, -1, 1, [0, 0, 0, 0], [1, 1, 1, 1, 1]),
        (1, 1, 0, [1, 1, 1], [0, 1, 0, 1]),
        (2, -1, 1, [1, 1], [1, 1, 1]),
    ],
)
def test_affine_recurrence_examples(alpha, beta, c1, u, want):
    got = [solve_affine_recurrence(Fraction(alpha), Fraction(beta), Fraction(c1), u, j) for j in range(1, len(want) + 1)]
    assert got == want
    closed = [affine_recurrence_closed(Fraction(alpha), Fraction(beta), Fraction(c1), u, j) for j in range(1, len(want) + 1)]
    assert closed == want


def test_affine_recurrence_shift_two_is_off():
    a, b, c1, u = Fraction(2), Fraction(-3), Fraction(1), [Fraction(1)] * 4
    true = [solve_affine_recurrence(a, b, c1, u, j) for j in range(1, 5)]
    shifted = [affine_recurrence_closed(a, b, c1, u, j, homogeneous_shift=2) for j in range(1, 5)]
    assert true[0] == shifted[0]
    assert all(x != y for x, y in zip(true[1:], shifted[1:]))


def test_affine_recurrence_errors():
    with pytest.raises(DomainError):
        solve_affine_recurrence(0, 1, 1, [1], 2)
    with pytest.raises(DomainError):
        solve_affine_recurrence(1, 1, 1, [], 3)


@pytest.mark.parametrize("n, e", [(4, 3), (2, 2), (5, 1), (12, 1), (3, 8)])
def test_verify_genfun_examples(n, e):
    rep = verify_genfun(n, e)
    assert rep.passed, rep.detail()


def test_recurrence_exponent_note():
    rep = verify_genfun(4, 3)
    assert rep.params["j_minus_2_mismatches"] == [2, 3, 4]
    assert [nt.code for nt in rep.notes] == ["recurrence_exponent"]
    assert not verify_genfun(4, 1).notes
