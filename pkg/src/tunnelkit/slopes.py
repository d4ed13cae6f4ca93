"""Exact slope arithmetic: rationals, slope pairs, and classes mod 1.

Slope invariants of tunnel cablings are rational numbers and must stay
exact: values like 2r(q+s) + 1/n live in Q, and the first invariant of a
cabling sequence is only defined up to an integer, i.e. as an element of
Q/Z.  Everything here is integer arithmetic through fractions.Fraction;
nothing ever touches a float.

Rendering conventions: integers print bare ("-19"), other rationals as
numerator/denominator ("13/2"), and classes mod 1 in square brackets
("[2/3]").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# The exact rational type used throughout the package.
Rational = Fraction


def reduce(numerator: int, denominator: int) -> Fraction:
    """Canonical reduced fraction with positive denominator."""
    if denominator == 0:
        raise ValueError("denominator must be nonzero")
    return Fraction(numerator, denominator)


@dataclass(frozen=True)
class SlopeClass:
    """An element of Q/Z, stored as its unique reduced representative in [0, 1)."""

    representative: Fraction

    def __post_init__(self):
        if not 0 <= self.representative < 1:
            raise ValueError(
                f"representative {self.representative} is not in [0, 1); "
                "use SlopeClass.of() to reduce mod 1"
            )

    @classmethod
    def of(cls, value) -> SlopeClass:
        """The class of any rational, reduced into [0, 1)."""
        return cls(Fraction(value) % 1)

    def __neg__(self) -> SlopeClass:
        return SlopeClass.of(-self.representative)

    def __add__(self, other: SlopeClass) -> SlopeClass:
        return SlopeClass.of(self.representative + other.representative)

    def __str__(self) -> str:
        return f"[{self.representative}]"


@dataclass(frozen=True)
class SlopePair:
    """Integer pair [a, b] standing for slope b/a.

    Kept distinct from a plain fraction: the pair [n, 1+n*m] attached to a
    twisted disk is part of the data even when its entries share a factor.
    """

    a: int
    b: int

    def slope(self) -> Fraction:
        if self.a == 0:
            raise ValueError("slope of the pair [0, b] is undefined")
        return Fraction(self.b, self.a)

    def __str__(self) -> str:
        return f"[{self.a}, {self.b}]"


def mod_one(slope) -> SlopeClass:
    """Class of a rational slope in Q/Z."""
    return SlopeClass.of(slope)


def simple_slope(slope) -> SlopeClass:
    """Class of the reciprocal in Q/Z.

    This is the form in which the first nontrivial cabling of a sequence
    carries its invariant, e.g. slope -3 records as [-1/3] = [2/3].
    """
    value = Fraction(slope)
    if value == 0:
        raise ValueError("simple slope of 0 is undefined (no reciprocal)")
    return SlopeClass.of(1 / value)


def render_slope(value) -> str:
    """Integers render bare ("-19"), other rationals as "13/2"."""
    return str(Fraction(value))
