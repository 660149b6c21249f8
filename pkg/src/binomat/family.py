"""The binomial matrix family and its structural identities.

Formulas (1-based i, j, order n):

    L      C(i-1, j-1)                lower Pascal matrix
    R      C(i-1, n-j)                column reversal of L
    K      [i == n-j+1]               exchange matrix
    A      C(n-i, j-1)                |R^-1|, also K R K
    Rinv   (-1)^(n+i+j+1) C(n-i, j-1) closed-form inverse of R
    X      C(n-i, j-1) F_{i-2}^(j-1) F_{i-1}^(n-j)
    C      companion matrix, last row -b(n, n+1-j)
    D      diag of the eigenvalues of R, |lambda| decreasing (Q(phi) only)
    V      Vandermonde lambda_j^(i-1) over the same eigenvalues (Q(phi) only)
"""

from __future__ import annotations

import enum

from .matrix import Matrix
from .numbers import DomainError, binom, fib, fibonomial_b
from .poly import Poly
from .report import CaseReport
from .rings import QPHI, QQ


class MatrixKind(str, enum.Enum):
    L = "L"
    R = "R"
    K = "K"
    A = "A"
    R_INVERSE = "Rinv"
    X = "X"
    C_COMPANION = "C"
    D_DIAG = "D"
    V_VANDERMONDE = "V"


def _x_entry(n: int, i: int, j: int) -> int:
    # int 0**0 == 1, which is the convention wanted here
    return binom(n - i, j - 1) * fib(i - 2) ** (j - 1) * fib(i - 1) ** (n - j)


def _companion(n: int, ring) -> Matrix:
    def entry(i, j):
        if i == n:
            return -fibonomial_b(n, n + 1 - j)
        return int(j == i + 1)

    return Matrix.from_function(ring, n, entry)


_FORMULAS = {
    MatrixKind.L: lambda n: lambda i, j: binom(i - 1, j - 1),
    MatrixKind.R: lambda n: lambda i, j: binom(i - 1, n - j),
    MatrixKind.K: lambda n: lambda i, j: int(i == n - j + 1),
    MatrixKind.A: lambda n: lambda i, j: binom(n - i, j - 1),
    MatrixKind.R_INVERSE: lambda n: lambda i, j: (-1) ** (n + i + j + 1) * binom(n - i, j - 1),
    MatrixKind.X: lambda n: lambda i, j: _x_entry(n, i, j),
}


def build(kind, n: int, ring=QQ) -> Matrix:
    kind = MatrixKind(kind)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"order must be a positive integer, got {n!r}")
    if kind in _FORMULAS:
        return Matrix.from_function(ring, n, _FORMULAS[kind](n))
    if kind is MatrixKind.C_COMPANION:
        return _companion(n, ring)
    if ring is not QPHI:
        raise DomainError(f"{kind.value}_{n} needs the ring Q(phi), got {ring!r}")
    from .spectra import closed_form_eigenvalues

    lams = closed_form_eigenvalues(n).eigenvalues
    if kind is MatrixKind.D_DIAG:
        return Matrix.diagonal(QPHI, lams)
    return Matrix.from_function(QPHI, n, lambda i, j: lams[j - 1] ** (i - 1))


def fibonomial_charpoly(n: int) -> Poly:
    """sum_m b(n,m) x^(n-m), ascending coefficients."""
    return Poly(QQ, [fibonomial_b(n, n - k) for k in range(n + 1)])


def _eq(report: CaseReport, name: str, left: Matrix, right: Matrix) -> bool:
    where = left.first_mismatch(right)
    detail = "" if where is None else f"entries differ at {where}: {left[where[0]-1, where[1]-1]} vs {right[where[0]-1, where[1]-1]}"
    return report.check(name, where is None, detail, where)


def verify_structure(n: int, ring=QQ) -> CaseReport:
    """Exact checks of R K = L, L K = R, K^2 = I, K R K = A, R Rinv = I,
    K L = A and charpoly(A) = charpoly(R)."""
    rep = CaseReport("structure", {"n": n})
    L, R, K = build("L", n, ring), build("R", n, ring), build("K", n, ring)
    A, Rinv = build("A", n, ring), build("Rinv", n, ring)
    I = Matrix.identity(ring, n)
    _eq(rep, "R*K == L", R * K, L)
    _eq(rep, "L*K == R", L * K, R)
    _eq(rep, "K^2 == I", K * K, I)
    _eq(rep, "K*R*K == A", K * R * K, A)
    _eq(rep, "R*Rinv == I", R * Rinv, I)
    _eq(rep, "K*L == A", K * L, A)
    if ring is QQ:
        _eq(rep, "|R^-1| == A", R.inverse().abs(), A)
    ca, cr = A.charpoly(), R.charpoly()
    rep.check("charpoly(A) == charpoly(R)", ca == cr, "" if ca == cr else f"{ca} vs {cr}")
    return rep


def verify_companion_similarity(n: int) -> CaseReport:
    """charpoly(C) = charpoly(A) = sum b(n,m) x^(n-m); the full similarity
    X A = C X is only checked when X as written is invertible."""
    rep = CaseReport("companion", {"n": n})
    A, C, X = build("A", n), build("C", n), build("X", n)
    cc, ca = C.charpoly(), A.charpoly()
    rep.check("charpoly(C) == charpoly(A)", cc == ca, "" if cc == ca else f"{cc} vs {ca}")
    fb, cr = fibonomial_charpoly(n), build("R", n).charpoly()
    rep.check("charpoly(R) == sum b(n,m) x^(n-m)", fb == cr, "" if fb == cr else f"{fb} vs {cr}")
    rank = X.rank()
    rep.params["X_invertible"] = rank == n
    if rank == n:
        _eq(rep, "X*A == C*X", X * A, C * X)
    else:
        rows = "; ".join(" ".join(str(x) for x in r) for r in X.rows)
        rep.note(
            "X_singular",
            f"X_{n} built from the printed entry formula has rank {rank} < {n} "
            f"(rows {rows}); the similarity X A X^-1 = C is not checkable and was skipped",
        )
    return rep
