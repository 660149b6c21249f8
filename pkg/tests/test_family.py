import pytest

from binomat.family import MatrixKind, build, fibonomial_charpoly, verify_companion_similarity, verify_structure
from binomat.finite import GF, GF2
from binomat.golden import PHI, PHIBAR
from binomat.matrix import Matrix
from binomat.numbers import DomainError
from binomat.rings import QPHI, QQ

from oracles import pascal


def rows(m):
    return [list(r) for r in m.rows]


def test_R4_and_A4():
    assert rows(build("R", 4)) == [[0, 0, 0, 1], [0, 0, 1, 1], [0, 1, 2, 1], [1, 3, 3, 1]]
    assert rows(build("A", 4)) == [[1, 3, 3, 1], [1, 2, 1, 0], [1, 1, 0, 0], [1, 0, 0, 0]]


def test_formulas_against_pascal():
    for n in range(1, 9):
        L, R, A = build("L", n), build("R", n), build("A", n)
        for i in range(n):
            for j in range(n):
                assert L[i, j] == pascal(i, j)
                assert R[i, j] == pascal(i, n - j - 1)
                assert A[i, j] == pascal(n - i - 1, j)


def test_D4_and_V4():
    assert build("D", 4, QPHI) == Matrix.diagonal(QPHI, [PHI**3, -PHI, -PHIBAR, PHIBAR**3])
    V = build("V", 3, QPHI)
    assert V.rows[0] == (1, 1, 1)
    assert V.column(0) == (1, PHI**2, PHI**4)


def test_companion_last_row():
    assert build("C", 4).rows[-1] == (-1, -3, 6, 3)
    C = build("C", 4)
    assert all(C[i, i + 1] == 1 for i in range(3))


def test_companion_vandermonde_orientation():
    for n in range(1, 9):
        C, V, D = build("C", n, QPHI), build("V", n, QPHI), build("D", n, QPHI)
        assert C * V == V * D, n


def test_D_and_V_need_golden_ring():
    with pytest.raises(DomainError):
        build("D", 3)
    with pytest.raises(DomainError):
        build("V", 3, GF(5))
    with pytest.raises(DomainError):
        build("R", 0)
    with pytest.raises(ValueError):
        build("Q", 3)


def test_kind_tags():
    assert [k.value for k in MatrixKind] == ["L", "R", "K", "A", "Rinv", "X", "C", "D", "V"]


@pytest.mark.parametrize("n", [1, 4, 7])
def test_verify_structure_examples(n):
    rep = verify_structure(n)
    assert rep.passed, rep.detail()
    assert len(rep.checks) == 8


def test_structure_over_finite_fields():
    for ring in (GF(3), GF(7), GF2(3)):
        assert verify_structure(6, ring).passed


def test_A_triangularity():
    for n in range(1, 25):
        A = build("A", n)
        assert all(A[i, j] == 0 for i in range(n) for j in range(n) if j + 1 > n - i)


def test_X4_as_printed():
    X = build("X", 4)
    assert rows(X) == [[0, 0, 0, 1], [1, 0, 0, 0], [1, 1, 0, 0], [8, 0, 0, 0]]
    assert X.rank() == 3


def test_companion_similarity_reports_singular_X():
    rep = verify_companion_similarity(4)
    assert rep.passed
    assert rep.params["X_invertible"] is False
    assert [n.code for n in rep.notes] == ["X_singular"]
    assert "8 0 0 0" in rep.notes[0].message


@pytest.mark.parametrize("n", [1, 2])
def test_companion_similarity_small_n_runs_full_check(n):
    rep = verify_companion_similarity(n)
    assert rep.params["X_invertible"] is True
    assert any(c.name == "X*A == C*X" for c in rep.checks)
    assert rep.passed and not rep.notes


def test_fibonomial_charpoly_n4():
    assert str(fibonomial_charpoly(4)) == "x^4 - 3x^3 - 6x^2 + 3x + 1"
    assert fibonomial_charpoly(4) == build("C", 4).charpoly() == build("A", 4).charpoly()
