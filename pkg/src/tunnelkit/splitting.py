"""The four splitting constructions and their tunnel descriptors.

A splitting acts on the middle tunnel of a base torus knot T(a, b) with
associated matrix (p q; r s): it splits a concentric copy of one of the
two companion knots off the base and rejoins the two by a band with n
half-twists (n != 0, positive meaning right-handed).  The four kinds:

    kind         splits off      level of copy   sigma slope
    drop-lambda  T(r, s)         below           2r(q+s)
    lift-lambda  T(r, s)         above           2s(p+r)
    drop-rho     T(p, q)         below           2p(q+s)
    lift-rho     T(p, q)         above           2q(p+r)

Each sigma slope equals twice the linking number of the upper knot with
the lower knot, where T(x, y) represents x*longitude + y*meridian in the
homology of the product region between the levels.  Twisting by n turns
the separating disk of slope m into a tunnel disk of slope m + 1/n, with
slope pair [n, 1 + n*m].

The lambda-kinds replace the disk rho and the rho-kinds replace lambda, so
a splitting extends the base's cabling sequence by one step.  From the full
sequence the descriptor reads off the slope invariants, the binary bits
(direction changes along the nontrivial cablings, the first pair carrying
no bit), the depth, and the regular/semisimple/simple classification.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .slopes import SlopeClass, SlopePair, render_slope
from .torus import (
    CablingStep,
    TorusKnot,
    associated_matrix,
    invariant_slopes,
    middle_tunnel_sequence,
)


class SplittingKind(Enum):
    DROP_LAMBDA = "drop-lambda"
    LIFT_LAMBDA = "lift-lambda"
    DROP_RHO = "drop-rho"
    LIFT_RHO = "lift-rho"

    @property
    def replaces(self) -> str:
        """Disk replaced by the cabling: lambda-kinds replace rho and vice versa."""
        if self in (SplittingKind.DROP_LAMBDA, SplittingKind.LIFT_LAMBDA):
            return "rho"
        return "lambda"

    @property
    def is_drop(self) -> bool:
        return self in (SplittingKind.DROP_LAMBDA, SplittingKind.DROP_RHO)

    @property
    def splits_off_lambda(self) -> bool:
        return self in (SplittingKind.DROP_LAMBDA, SplittingKind.LIFT_LAMBDA)

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SplittingSpec:
    """A splitting: base knot, kind, and half-twist count n != 0."""

    base: TorusKnot
    kind: SplittingKind
    n: int

    def __post_init__(self):
        if self.n == 0:
            raise ValueError(
                "n must be nonzero: with no half-twists the twisted disk is "
                "the original disk again and no new tunnel is produced")

    def __str__(self) -> str:
        return f"{self.kind} n={self.n} on {self.base}"


@dataclass(frozen=True)
class HomologyClass:
    """Coefficients (ell, m) in the longitude/meridian basis."""

    ell: int
    m: int


def homology_class(knot: TorusKnot) -> HomologyClass:
    return HomologyClass(knot.a, knot.b)


def linking_number(upper: HomologyClass, lower: HomologyClass) -> int:
    """Linking number of an upper-level knot with a lower-level one.

    Only the meridian part of the upper knot links the longitude part of
    the lower knot, so the value is m_upper * ell_lower.
    """
    return upper.m * lower.ell


@dataclass(frozen=True)
class BandSum:
    """The associated knot: two concentric torus knots joined by a twisted band."""

    upper: TorusKnot
    lower: TorusKnot
    half_twists: int

    def __str__(self) -> str:
        return (f"band sum of {self.upper} (upper) and {self.lower} (lower), "
                f"{self.half_twists} half-twists")


def level_knots(base: TorusKnot, kind: SplittingKind) -> tuple[TorusKnot, TorusKnot]:
    """(upper, lower) torus levels: drops put the split-off copy below."""
    m = associated_matrix(base)
    whole = TorusKnot(m.p + m.r, m.q + m.s)
    off = TorusKnot(m.r, m.s) if kind.splits_off_lambda else TorusKnot(m.p, m.q)
    if kind.is_drop:
        return whole, off
    return off, whole


def band_sum(spec: SplittingSpec) -> BandSum:
    upper, lower = level_knots(spec.base, spec.kind)
    return BandSum(upper=upper, lower=lower, half_twists=spec.n)


def sigma_slope(spec: SplittingSpec) -> int:
    """Slope of the separating disk of the splitting, before twisting."""
    m = associated_matrix(spec.base)
    a, b = m.p + m.r, m.q + m.s
    return {
        SplittingKind.DROP_LAMBDA: 2 * m.r * b,
        SplittingKind.LIFT_LAMBDA: 2 * m.s * a,
        SplittingKind.DROP_RHO: 2 * m.p * b,
        SplittingKind.LIFT_RHO: 2 * m.q * a,
    }[spec.kind]


def gamma_slope(m_sigma: int, n: int) -> tuple[Fraction, SlopePair]:
    """Slope and slope pair of the disk obtained by n half-twists.

    The slope is m_sigma + 1/n and the pair is [n, 1 + n*m_sigma]; the
    pair's ratio always reproduces the slope.
    """
    if n == 0:
        raise ValueError("n must be nonzero: the untwisted disk is not a new tunnel")
    return Fraction(m_sigma) + Fraction(1, n), SlopePair(n, 1 + n * m_sigma)


def binary_bits(labels) -> tuple[int, ...]:
    """Direction-change bits along the nontrivial cablings.

    Bit i (for cablings i and i+1, starting at the second pair) is 1 when
    the two cablings replace different disks.  The first pair carries no
    bit, so any sequence of at most two cablings has a trivial (empty)
    binary sequence.
    """
    return tuple(1 if labels[i] != labels[i - 1] else 0
                 for i in range(2, len(labels)))


@dataclass(frozen=True)
class TunnelDescriptor:
    """Complete computed record of a splitting's tunnel."""

    base: TorusKnot
    kind: SplittingKind
    n: int
    steps: tuple[CablingStep, ...]
    slopes: tuple                      # SlopeClass first, Fractions after
    binary: tuple[int, ...]
    depth: int
    classification: str                # "simple" | "semisimple" | "regular"
    band_sum: BandSum

    def invariants(self) -> tuple:
        """The (slopes, binary, depth) triple that distinguishes tunnels."""
        return (self.slopes, self.binary, self.depth)

    def slopes_text(self) -> str:
        return ", ".join(
            str(s) if isinstance(s, SlopeClass) else render_slope(s)
            for s in self.slopes)

    def binary_text(self) -> str:
        return "".join(str(b) for b in self.binary)

    def to_record(self) -> dict:
        return {
            "base": [self.base.a, self.base.b],
            "kind": self.kind.value,
            "n": self.n,
            "slopes": [str(s) if isinstance(s, SlopeClass) else render_slope(s)
                       for s in self.slopes],
            "binary": self.binary_text(),
            "depth": self.depth,
            "classification": self.classification,
            "band_sum": {
                "upper": [self.band_sum.upper.a, self.band_sum.upper.b],
                "lower": [self.band_sum.lower.a, self.band_sum.lower.b],
                "half_twists": self.band_sum.half_twists,
            },
        }


def split(spec: SplittingSpec) -> TunnelDescriptor:
    """Perform a splitting and assemble the full tunnel descriptor.

    The base is taken as given: no normalization is applied here, since
    mirroring negates every slope invariant and the caller must choose.
    Trivial bases are allowed and give simple tunnels with the single
    invariant [n / (n*m_sigma + 1)].
    """
    base = spec.base
    if base.a <= 0:
        raise ValueError(
            f"base {base} has a <= 0; reduce it first, e.g. via normalize()")
    base_steps = middle_tunnel_sequence(base)
    slope, _pair = gamma_slope(sigma_slope(spec), spec.n)
    steps = base_steps + (CablingStep(
        kind="split",
        replaces=spec.kind.replaces,
        trivial=False,
        slope=slope,
        knot=None,
        spec=spec,
    ),)
    slopes = invariant_slopes(steps)
    labels = tuple(step.replaces for step in steps if not step.trivial)
    bits = binary_bits(labels)
    if base.is_trivial:
        classification = "simple"
    elif any(bits):
        classification = "regular"
    else:
        classification = "semisimple"
    return TunnelDescriptor(
        base=base,
        kind=spec.kind,
        n=spec.n,
        steps=steps,
        slopes=slopes,
        binary=bits,
        depth=1 + sum(bits),
        classification=classification,
        band_sum=band_sum(spec),
    )
