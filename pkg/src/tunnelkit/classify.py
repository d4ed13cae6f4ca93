"""When do two splittings produce the same tunnel?

Splittings on distinct (normalized, nontrivial) base knots never produce
the same tunnel, because a splitting extends the base's unique cabling
sequence.  On a single normalized nontrivial base T(a, b) with matrix
(p q; r s) the complete list of coincidences is:

  (a)      drop-lambda n=1  ==  lift-lambda n=-1
           -> the middle tunnel of T(p+2r, q+2s), i.e. one more U-step;
  (b)      drop-rho n=-1    ==  lift-rho n=1
           -> the middle tunnel of T(2p+r, 2q+s), i.e. one more L-step;
  (c) only on bases T(2r+1, 2):
      (i)   lift-lambda and lift-rho with the same n,
      (ii)  lift-lambda n=1 and drop-rho n=-1,
      (iii) drop-lambda n=1 and lift-rho n=-1.

On T(2r+1, 2) the n = +-1 cases merge into two triples:

    {drop-lambda 1, lift-lambda -1, lift-rho -1}
        -> middle tunnel of T(3r+1, 3), slopes [1/(2r+1)], 4r+1
    {lift-lambda 1, lift-rho 1, drop-rho -1}
        -> middle tunnel of T(3r+2, 3), slopes [1/(2r+1)], 4r+3

while the (c)(i) pairs with |n| >= 2 give semisimple tunnels of non-torus
3-bridge knots with slopes [1/(2r+1)], 4r+2+1/n.

Coincidence is decided purely from these parameter conditions; comparing
the computed slope/binary/depth data of both splittings is the independent
cross-check used by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .slopes import SlopeClass
from .splitting import SplittingKind, SplittingSpec, split
from .torus import (
    TorusKnot,
    apply_L,
    apply_U,
    associated_matrix,
    invariant_slopes,
    middle_tunnel_sequence,
    normalize,
)

CASE_LABELS = {
    "a": "(a)",
    "b": "(b)",
    "c-i": "(c)(i)",
    "c-ii": "(c)(ii)",
    "c-iii": "(c)(iii)",
}


@dataclass(frozen=True)
class TunnelIdentification:
    """What a coincidence family's shared tunnel turns out to be."""

    kind: str                      # "torus-middle" | "three-bridge"
    knot: Optional[TorusKnot]      # set for torus-middle identifications

    def __str__(self) -> str:
        if self.kind == "torus-middle":
            return f"middle tunnel of {self.knot}"
        return "semisimple tunnel of a non-torus 3-bridge knot"


@dataclass(frozen=True)
class CoincidenceVerdict:
    same: bool
    case: Optional[str] = None     # "a", "b", "c-i", "c-ii", "c-iii"
    tunnel: Optional[TunnelIdentification] = None

    def case_label(self) -> Optional[str]:
        return CASE_LABELS.get(self.case) if self.case else None


def _require_normalized_nontrivial(knot: TorusKnot, name: str) -> None:
    if not knot.is_normalized:
        norm = normalize(knot)
        hint = f"normalized form is {norm.knot}"
        if norm.mirrored:
            hint += " (mirror image: slopes negate)"
        raise ValueError(f"{name} {knot} is not normalized; {hint}")
    if knot.is_trivial:
        raise ValueError(
            f"{name} {knot} is trivial; splittings on trivial knots give "
            "simple tunnels and are outside the coincidence classification")


def _torus_middle(knot: TorusKnot) -> TunnelIdentification:
    return TunnelIdentification("torus-middle", knot)


THREE_BRIDGE = TunnelIdentification("three-bridge", None)


def coincident(spec_a: SplittingSpec, spec_b: SplittingSpec) -> CoincidenceVerdict:
    """Decide whether two splittings produce the same tunnel.

    Both bases must be normalized and nontrivial.  Identical specs are
    reported as the same tunnel without a case tag; distinct specs are the
    same exactly under the parameter conditions listed in the module
    docstring.
    """
    _require_normalized_nontrivial(spec_a.base, "first base")
    _require_normalized_nontrivial(spec_b.base, "second base")
    if spec_a.base != spec_b.base:
        return CoincidenceVerdict(False)
    if spec_a == spec_b:
        return CoincidenceVerdict(True)

    base = spec_a.base
    m = associated_matrix(base)
    pair = {(spec_a.kind, spec_a.n), (spec_b.kind, spec_b.n)}
    kinds = {spec_a.kind, spec_b.kind}

    if pair == {(SplittingKind.DROP_LAMBDA, 1), (SplittingKind.LIFT_LAMBDA, -1)}:
        return CoincidenceVerdict(True, "a", _torus_middle(apply_U(m).knot()))
    if pair == {(SplittingKind.DROP_RHO, -1), (SplittingKind.LIFT_RHO, 1)}:
        return CoincidenceVerdict(True, "b", _torus_middle(apply_L(m).knot()))

    if base.b == 2:
        if (kinds == {SplittingKind.LIFT_LAMBDA, SplittingKind.LIFT_RHO}
                and spec_a.n == spec_b.n):
            n = spec_a.n
            if n == 1:
                ident = _torus_middle(apply_L(m).knot())
            elif n == -1:
                ident = _torus_middle(apply_U(m).knot())
            else:
                ident = THREE_BRIDGE
            return CoincidenceVerdict(True, "c-i", ident)
        if pair == {(SplittingKind.LIFT_LAMBDA, 1), (SplittingKind.DROP_RHO, -1)}:
            return CoincidenceVerdict(True, "c-ii", _torus_middle(apply_L(m).knot()))
        if pair == {(SplittingKind.DROP_LAMBDA, 1), (SplittingKind.LIFT_RHO, -1)}:
            return CoincidenceVerdict(True, "c-iii", _torus_middle(apply_U(m).knot()))

    return CoincidenceVerdict(False)


@dataclass(frozen=True)
class SplittingFamily:
    """A maximal set of distinct splittings on one base giving one tunnel."""

    members: tuple[SplittingSpec, ...]
    cases: tuple[str, ...]             # the pairwise coincidence cases inside
    slopes: tuple
    identification: TunnelIdentification

    def to_record(self) -> dict:
        return {
            "members": [{"kind": s.kind.value, "n": s.n} for s in self.members],
            "cases": [CASE_LABELS[c] for c in self.cases],
            "slopes": [str(s) for s in self.slopes],
            "identification": str(self.identification),
            "identified_knot": ([self.identification.knot.a,
                                 self.identification.knot.b]
                                if self.identification.knot else None),
        }


def multiple_splittings(knot: TorusKnot, *, max_twist: int = 3
                        ) -> tuple[SplittingFamily, ...]:
    """All coincidence families with the given base, trivial base giving none.

    (c)(i) families exist for every |n| >= 2, so only those with
    |n| <= max_twist are listed.
    """
    if not knot.is_normalized:
        _require_normalized_nontrivial(knot, "base")
    if knot.is_trivial:
        return ()
    m = associated_matrix(knot)
    u_knot = apply_U(m).knot()
    l_knot = apply_L(m).knot()

    def fam(members, cases, ident):
        specs = tuple(SplittingSpec(knot, k, n) for k, n in members)
        return SplittingFamily(specs, cases, split(specs[0]).slopes, ident)

    if knot.b != 2:
        return (
            fam([(SplittingKind.DROP_LAMBDA, 1), (SplittingKind.LIFT_LAMBDA, -1)],
                ("a",), _torus_middle(u_knot)),
            fam([(SplittingKind.DROP_RHO, -1), (SplittingKind.LIFT_RHO, 1)],
                ("b",), _torus_middle(l_knot)),
        )

    families = [
        fam([(SplittingKind.DROP_LAMBDA, 1), (SplittingKind.LIFT_LAMBDA, -1),
             (SplittingKind.LIFT_RHO, -1)],
            ("a", "c-i", "c-iii"), _torus_middle(u_knot)),
        fam([(SplittingKind.LIFT_LAMBDA, 1), (SplittingKind.LIFT_RHO, 1),
             (SplittingKind.DROP_RHO, -1)],
            ("b", "c-i", "c-ii"), _torus_middle(l_knot)),
    ]
    for n_abs in range(2, max_twist + 1):
        for n in (n_abs, -n_abs):
            families.append(fam(
                [(SplittingKind.LIFT_LAMBDA, n), (SplittingKind.LIFT_RHO, n)],
                ("c-i",), THREE_BRIDGE))
    return tuple(families)


def identify_torus_middle(slopes, *, max_a: int = 100) -> Optional[TorusKnot]:
    """Brute-force search for a torus knot with the given middle-tunnel slopes.

    The search covers one parameterization per knot: all T(a, b) with
    a > |b| >= 2 and a <= max_a, both signs of b.  Returns the unique match
    or None; uniqueness within the bound is checked exhaustively.
    """
    target = _coerce_sequence(slopes)
    if not target:
        return None
    matches = []
    for a in range(3, max_a + 1):
        for b_abs in range(2, a):
            if gcd(a, b_abs) != 1:
                continue
            for b in (b_abs, -b_abs):
                knot = TorusKnot(a, b)
                if invariant_slopes(middle_tunnel_sequence(knot)) == target:
                    matches.append(knot)
    assert len(matches) <= 1, f"ambiguous invariant sequence: {matches}"
    return matches[0] if matches else None


def _coerce_sequence(slopes) -> tuple:
    entries = list(slopes)
    if not entries:
        return ()
    if not isinstance(entries[0], SlopeClass):
        raise TypeError("the first invariant must be a SlopeClass (mod-1 value)")
    return (entries[0],) + tuple(Fraction(x) for x in entries[1:])
