"""Torus knot parameters, continued fractions, and middle-tunnel cabling data.

T(a, b) is the torus knot wrapping a times around the longitude and b times
around the meridian of a standard torus.  The middle tunnel of a nontrivial
T(a, b) is produced by a unique sequence of cabling constructions, and that
sequence is read off the continued fraction of a/b through words in the
unimodular matrices

    U = (1 1; 0 1)    and    L = (1 0; 1 1).

Writing a/b = [n1, ..., nk] with positive terms, apply n1 L's, then n2 U's,
alternating, with only nk - 1 letters in the final block.  The product of
the applied letters (times a seed of determinant -1 when b < 0) is the
"associated matrix" (p q; r s); its rows always sum back to (a, b).  Each
letter is one cabling: U-steps replace the disk rho, L-steps replace the
disk lambda, and a step's slope is the diagonal sum ps + qr of the matrix
it produces.  Steps whose resulting knot is trivial carry no invariant.

Worked example: 4/3 = [1, 3], so T(4, 3) takes one L then two U's,

    M = U^2 L = (3 2; 1 1),

and the two nontrivial U-steps have diagonal sums 3 and 5.  The first
invariant is recorded as the reciprocal class [1/3], so the middle tunnel
of T(4, 3) has invariant sequence [1/3], 5.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import TYPE_CHECKING, Iterator, Optional

from .slopes import simple_slope

if TYPE_CHECKING:
    from .splitting import SplittingSpec


@dataclass(frozen=True)
class TorusKnot:
    """Coprime parameter pair (a, b) for the torus knot T(a, b)."""

    a: int
    b: int

    def __post_init__(self):
        if gcd(abs(self.a), abs(self.b)) != 1:
            raise ValueError(f"({self.a}, {self.b}) is not a coprime pair")

    @property
    def is_trivial(self) -> bool:
        """T(a, b) is an unknot exactly when either parameter is 0 or +-1."""
        return abs(self.a) <= 1 or abs(self.b) <= 1

    @property
    def is_normalized(self) -> bool:
        return (self.a > self.b >= 2) or (self.a >= 1 and self.b in (0, 1))

    def mirror(self) -> TorusKnot:
        return TorusKnot(self.a, -self.b)

    def swap(self) -> TorusKnot:
        return TorusKnot(self.b, self.a)

    def same_knot_as(self, other: TorusKnot) -> bool:
        """Equality as unoriented knots in the 3-sphere (not up to mirror).

        T(a, b), T(b, a), and T(-a, -b) are all the same knot.
        """
        return _knot_key(self) == _knot_key(other)

    def __str__(self) -> str:
        return f"T({self.a},{self.b})"


def _knot_key(knot: TorusKnot) -> tuple[int, int]:
    reps = [(knot.a, knot.b), (knot.b, knot.a),
            (-knot.a, -knot.b), (-knot.b, -knot.a)]
    return max(reps)


@dataclass(frozen=True)
class NormalizationResult:
    """A normalized knot plus the moves that got it there.

    ``swapped`` records the isotopy interchanging longitude and meridian;
    ``mirrored`` records a reflection, under which every slope invariant
    of the original knot is the negative of the normalized one.
    """

    knot: TorusKnot
    swapped: bool
    mirrored: bool


def normalize(knot: TorusKnot) -> NormalizationResult:
    """Reduce to the form a > b >= 2 (or a trivial knot with b in {0, 1})."""
    a, b = knot.a, knot.b
    swapped = False
    if abs(a) < abs(b):
        a, b = b, a
        swapped = True
    if a < 0:
        a, b = -a, -b
    mirrored = b < 0
    if mirrored:
        b = -b
    return NormalizationResult(TorusKnot(a, b), swapped, mirrored)


def continued_fraction(a: int, b: int) -> tuple[tuple[int, ...], bool]:
    """Continued fraction terms for a/|b|, plus a flag for b < 0.

    Requires a > 0, b != 0, gcd(a, |b|) = 1.  All terms are positive except
    that the leading term is 0 when a < |b|.  The expansion is canonical:
    the Euclidean algorithm never ends in a final term of 1 except for the
    single-term expansion of 1/1, which resolves the [.., n, 1] ambiguity.
    For b < 0 the terms expand a/(-b) and the flag is True.
    """
    if a <= 0:
        raise ValueError(f"a must be positive, got {a}")
    if b == 0:
        raise ValueError("b must be nonzero")
    if gcd(a, abs(b)) != 1:
        raise ValueError(f"({a}, {b}) is not a coprime pair")
    x, y = a, abs(b)
    terms = []
    while y:
        terms.append(x // y)
        x, y = y, x % y
    return tuple(terms), b < 0


def fold_continued_fraction(terms) -> Fraction:
    """Collapse [n1, ..., nk] back to the rational n1 + 1/(n2 + 1/(...))."""
    value = Fraction(terms[-1])
    for term in reversed(terms[:-1]):
        value = term + 1 / value
    return value


@dataclass(frozen=True)
class AssocMatrix:
    """2x2 integer matrix (p q; r s) with the U/L word that generated it.

    ``word`` holds the letters in application order (first-applied first);
    as matrix factors they multiply right to left.  The determinant is +1
    when seeded from the identity and -1 when seeded from (1 0; 0 -1).
    """

    p: int
    q: int
    r: int
    s: int
    word: tuple[str, ...] = ()
    negative_branch: bool = False

    @property
    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.p, self.q), (self.r, self.s))

    def det(self) -> int:
        return self.p * self.s - self.q * self.r

    def knot(self) -> TorusKnot:
        """The knot whose parameters are the row sums."""
        return TorusKnot(self.p + self.r, self.q + self.s)

    def __str__(self) -> str:
        return f"({self.p} {self.q}; {self.r} {self.s})"


IDENTITY = AssocMatrix(1, 0, 0, 1)
NEGATIVE_SEED = AssocMatrix(1, 0, 0, -1, negative_branch=True)


def apply_U(m: AssocMatrix) -> AssocMatrix:
    """Left-multiply by U = (1 1; 0 1)."""
    return AssocMatrix(m.p + m.r, m.q + m.s, m.r, m.s,
                       m.word + ("U",), m.negative_branch)


def apply_L(m: AssocMatrix) -> AssocMatrix:
    """Left-multiply by L = (1 0; 1 1)."""
    return AssocMatrix(m.p, m.q, m.p + m.r, m.q + m.s,
                       m.word + ("L",), m.negative_branch)


def diag(m) -> int:
    """Diagonal sum ad + bc of a 2x2 matrix, given as AssocMatrix or rows."""
    if isinstance(m, AssocMatrix):
        return m.p * m.s + m.q * m.r
    (a, b), (c, d) = m
    return a * d + b * c


def _letters(terms) -> list[str]:
    # Blocks alternate L, U, L, ...; the final block is one letter short.
    out = []
    for i, n in enumerate(terms):
        count = n - 1 if i == len(terms) - 1 else n
        out.extend(("L" if i % 2 == 0 else "U") * count)
    return out


@lru_cache(maxsize=None)
def associated_matrix(knot: TorusKnot) -> AssocMatrix:
    """The matrix (p q; r s) associated to T(a, b), with p+r = a, q+s = b.

    Requires a > 0 (normalize first otherwise) and b != 0.
    """
    if knot.a <= 0:
        raise ValueError(
            f"{knot} has a <= 0; reduce it first, e.g. via normalize()")
    terms, negative = continued_fraction(knot.a, knot.b)
    m = NEGATIVE_SEED if negative else IDENTITY
    for letter in _letters(terms):
        m = apply_U(m) if letter == "U" else apply_L(m)
    return m


@dataclass(frozen=True)
class CablingStep:
    """One cabling construction in a tunnel's principal path.

    U-steps replace rho and L-steps replace lambda; a final band-sum step
    from a splitting has kind "split" and carries the splitting data
    instead of a resulting torus knot.  Steps producing trivial knots are
    flagged and carry no slope.
    """

    kind: str                              # "U", "L", or "split"
    replaces: str                          # "rho" or "lambda"
    trivial: bool
    slope: Optional[Fraction]              # None exactly for trivial steps
    knot: Optional[TorusKnot]              # None for split steps
    matrix: Optional[AssocMatrix] = None   # post-step matrix, None for split
    spec: Optional["SplittingSpec"] = field(default=None, compare=False)


@lru_cache(maxsize=None)
def middle_tunnel_sequence(knot: TorusKnot) -> tuple[CablingStep, ...]:
    """The cabling steps building the middle tunnel of T(a, b), a > 0.

    Trivial knots are allowed and yield a sequence with no nontrivial
    steps (empty for the seeds T(1, +-1) and for T(a, 0)).
    """
    if knot.a <= 0:
        raise ValueError(
            f"{knot} has a <= 0; reduce it first, e.g. via normalize()")
    if knot.b == 0:
        return ()
    terms, negative = continued_fraction(knot.a, knot.b)
    m = NEGATIVE_SEED if negative else IDENTITY
    steps = []
    for letter in _letters(terms):
        m = apply_U(m) if letter == "U" else apply_L(m)
        produced = m.knot()
        trivial = produced.is_trivial
        steps.append(CablingStep(
            kind=letter,
            replaces="rho" if letter == "U" else "lambda",
            trivial=trivial,
            slope=None if trivial else Fraction(diag(m)),
            knot=produced,
            matrix=m,
        ))
    return tuple(steps)


def invariant_slopes(steps) -> tuple:
    """The slope invariants of a step sequence.

    Trivial steps contribute nothing; the first nontrivial step's slope is
    recorded as its reciprocal class mod 1, the rest as exact rationals.
    """
    out = []
    for step in steps:
        if step.trivial or step.slope is None:
            continue
        out.append(simple_slope(step.slope) if not out else step.slope)
    return tuple(out)


def iter_normalized(max_a: int) -> Iterator[TorusKnot]:
    """All normalized nontrivial torus knots with a <= max_a, ordered."""
    for a in range(3, max_a + 1):
        for b in range(2, a):
            if gcd(a, b) == 1:
                yield TorusKnot(a, b)
