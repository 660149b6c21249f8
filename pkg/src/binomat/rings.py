"""Scalar ring selectors. Every matrix and polynomial carries one of these.

A ring is callable (coerces ints and rationals into it), exposes ``zero``,
``one`` and a short ``tag``, and knows how to parse its own rendering.
"""

from __future__ import annotations

from fractions import Fraction

from .finite import GF, GF2, ModQuadScalar, ModScalar, PrimeField, QuadField
from .golden import GoldenNumber, parse_golden
from .numbers import DomainError


class RationalField:
    tag = "Q"
    is_ordered = True
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, GoldenNumber) and x.is_rational():
            return x.a
        raise TypeError(f"cannot map {x!r} into Q")

    def parse(self, text: str) -> Fraction:
        return Fraction(text)

    def __repr__(self):
        return "Q"


class GoldenField:
    tag = "Q(phi)"
    is_ordered = True
    zero = GoldenNumber(0)
    one = GoldenNumber(1)

    def __call__(self, x) -> GoldenNumber:
        if isinstance(x, (GoldenNumber, int, Fraction)):
            return GoldenNumber.coerce(x)
        raise TypeError(f"cannot map {x!r} into Q(phi)")

    def parse(self, text: str) -> GoldenNumber:
        return parse_golden(text)

    def __repr__(self):
        return "Q(phi)"


QQ = RationalField()
QPHI = GoldenField()


def ring_from_tag(tag: str):
    """Inverse of ``ring.tag`` for the canonical rings."""
    if tag == "Q":
        return QQ
    if tag == "Q(phi)":
        return QPHI
    if tag.startswith("GF(") and tag.endswith("^2)"):
        return GF2(int(tag[3:-3]))
    if tag.startswith("GF(") and tag.endswith(")"):
        return GF(int(tag[3:-1]))
    raise DomainError(f"unknown ring tag {tag!r}")


__all__ = [
    "GF",
    "GF2",
    "QQ",
    "QPHI",
    "GoldenField",
    "ModQuadScalar",
    "ModScalar",
    "PrimeField",
    "QuadField",
    "RationalField",
    "ring_from_tag",
]
