"""Exact linear algebra for binomial matrices, their Fibonacci spectra,
modular characteristic polynomials and generating functions."""

from .family import MatrixKind, build
from .finite import GF, GF2
from .golden import PHI, PHIBAR, GoldenNumber
from .matrix import Matrix, SingularMatrixError
from .numbers import DomainError, binom, fib, fibonomial_b
from .poly import Poly, Series, series_div
from .rings import QPHI, QQ

__all__ = [
    "GF",
    "GF2",
    "PHI",
    "PHIBAR",
    "QPHI",
    "QQ",
    "DomainError",
    "GoldenNumber",
    "Matrix",
    "MatrixKind",
    "Poly",
    "Series",
    "SingularMatrixError",
    "binom",
    "build",
    "fib",
    "fibonomial_b",
    "series_div",
]
