from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tunnelkit.classify import (
    THREE_BRIDGE,
    coincident,
    identify_torus_middle,
    multiple_splittings,
)
from tunnelkit.slopes import SlopeClass, mod_one
from tunnelkit.splitting import SplittingKind, SplittingSpec, split
from tunnelkit.torus import (
    TorusKnot,
    invariant_slopes,
    iter_normalized,
    middle_tunnel_sequence,
)

DL, LL, DR, LR = (SplittingKind.DROP_LAMBDA, SplittingKind.LIFT_LAMBDA,
                  SplittingKind.DROP_RHO, SplittingKind.LIFT_RHO)


def spec(base, kind, n):
    return SplittingSpec(base, kind, n)


def grid_specs(base, max_twist=3):
    return [spec(base, kind, n)
            for kind in SplittingKind
            for n in range(-max_twist, max_twist + 1) if n != 0]


# ---------------------------------------------------------------------------
# coincident: verdicts on the worked cases
# ---------------------------------------------------------------------------

def test_case_a_with_identification():
    v = coincident(spec(TorusKnot(4, 3), DL, 1), spec(TorusKnot(4, 3), LL, -1))
    assert v.same and v.case == "a"
    # matrix (3 2; 1 1): one more U-step reaches T(3+2, 2+2) = T(5, 4)
    assert v.tunnel.knot == TorusKnot(5, 4)


def test_case_b_with_identification():
    v = coincident(spec(TorusKnot(4, 3), DR, -1), spec(TorusKnot(4, 3), LR, 1))
    assert v.same and v.case == "b"
    assert v.tunnel.knot == TorusKnot(7, 5)


def test_case_c_i_same_twist():
    v = coincident(spec(TorusKnot(3, 2), LL, 7), spec(TorusKnot(3, 2), LR, 7))
    assert v.same and v.case == "c-i"
    assert v.tunnel == THREE_BRIDGE


def test_case_c_requires_width_two_base():
    v = coincident(spec(TorusKnot(4, 3), LL, 7), spec(TorusKnot(4, 3), LR, 7))
    assert not v.same


def test_case_a_requires_unit_twists():
    v = coincident(spec(TorusKnot(4, 3), DL, 2), spec(TorusKnot(4, 3), LL, -2))
    assert not v.same


def test_distinct_bases_never_coincide():
    v = coincident(spec(TorusKnot(4, 3), DL, 1), spec(TorusKnot(5, 3), LL, -1))
    assert not v.same


def test_identical_specs_same_without_case():
    v = coincident(spec(TorusKnot(4, 3), DL, 1), spec(TorusKnot(4, 3), DL, 1))
    assert v.same
    assert v.case is None


def test_unnormalized_or_trivial_base_rejected():
    with pytest.raises(ValueError, match="normalized"):
        coincident(spec(TorusKnot(3, 4), DL, 1), spec(TorusKnot(3, 4), LL, -1))
    with pytest.raises(ValueError, match="trivial"):
        coincident(spec(TorusKnot(3, 1), DL, 1), spec(TorusKnot(3, 1), LL, -1))


@given(st.sampled_from(list(iter_normalized(15))),
       st.sampled_from(list(SplittingKind)), st.sampled_from(list(SplittingKind)),
       st.integers(-3, 3).filter(bool), st.integers(-3, 3).filter(bool))
def test_coincident_symmetric(base, kind1, kind2, n1, n2):
    a, b = spec(base, kind1, n1), spec(base, kind2, n2)
    assert coincident(a, b) == coincident(b, a)


# ---------------------------------------------------------------------------
# coincident vs the slope-sequence oracle
# ---------------------------------------------------------------------------

@settings(deadline=None, max_examples=30)
@given(st.sampled_from(list(iter_normalized(15))))
def test_verdicts_match_descriptor_equality(base):
    specs = grid_specs(base)
    descriptors = {s: split(s).invariants() for s in specs}
    for a, b in combinations(specs, 2):
        assert coincident(a, b).same == (descriptors[a] == descriptors[b]), \
            f"disagreement for {a} vs {b}"


def test_case_identifications_match_middle_tunnels():
    # Either member of an (a)/(b) family computes the same invariant
    # sequence as the middle tunnel of the identified knot.
    for base in iter_normalized(12):
        for members in ([(DL, 1), (LL, -1)], [(DR, -1), (LR, 1)]):
            first = spec(base, *members[0])
            second = spec(base, *members[1])
            verdict = coincident(first, second)
            assert verdict.same
            expected = invariant_slopes(
                middle_tunnel_sequence(verdict.tunnel.knot))
            assert split(first).slopes == expected
            assert split(second).slopes == expected


# ---------------------------------------------------------------------------
# multiple_splittings
# ---------------------------------------------------------------------------

def test_families_on_width_two_base():
    families = multiple_splittings(TorusKnot(3, 2), max_twist=3)
    by_members = {frozenset((s.kind, s.n) for s in f.members): f
                  for f in families}

    minus_triple = by_members[frozenset({(DL, 1), (LL, -1), (LR, -1)})]
    assert minus_triple.identification.knot == TorusKnot(4, 3)
    assert minus_triple.slopes == (SlopeClass(Fraction(1, 3)), Fraction(5))

    plus_triple = by_members[frozenset({(LL, 1), (LR, 1), (DR, -1)})]
    assert plus_triple.identification.knot == TorusKnot(5, 3)
    assert plus_triple.slopes == (SlopeClass(Fraction(1, 3)), Fraction(7))

    for n in (2, -2, 3, -3):
        pair = by_members[frozenset({(LL, n), (LR, n)})]
        assert pair.identification == THREE_BRIDGE
        assert pair.slopes == (SlopeClass(Fraction(1, 3)),
                               Fraction(6) + Fraction(1, n))
    assert len(families) == 6


def test_families_on_wider_base():
    families = multiple_splittings(TorusKnot(4, 3), max_twist=3)
    assert len(families) == 2
    assert {f.cases for f in families} == {("a",), ("b",)}
    idents = {f.identification.knot for f in families}
    assert idents == {TorusKnot(5, 4), TorusKnot(7, 5)}


def test_families_on_five_two():
    families = multiple_splittings(TorusKnot(5, 2), max_twist=2)
    ci = [f for f in families if f.cases == ("c-i",)]
    # matrix (3 1; 2 1): lift slopes are 2*1*5 + 1/n = 10 + 1/n
    for fam in ci:
        n = fam.members[0].n
        assert fam.slopes == (SlopeClass(Fraction(1, 5)),
                              Fraction(10) + Fraction(1, n))


def test_families_members_are_really_coincident():
    for base in (TorusKnot(3, 2), TorusKnot(5, 2), TorusKnot(4, 3),
                 TorusKnot(5, 3)):
        for family in multiple_splittings(base, max_twist=3):
            reference = split(family.members[0]).invariants()
            for member in family.members[1:]:
                assert split(member).invariants() == reference
            assert split(family.members[0]).slopes == family.slopes


def test_trivial_base_yields_no_families():
    assert multiple_splittings(TorusKnot(4, 1)) == ()


def test_multiple_splittings_rejects_unnormalized():
    with pytest.raises(ValueError, match="normalized"):
        multiple_splittings(TorusKnot(3, 4))


# ---------------------------------------------------------------------------
# identify_torus_middle
# ---------------------------------------------------------------------------

def test_identify_examples():
    assert identify_torus_middle(
        [SlopeClass(Fraction(1, 3)), 5], max_a=20) == TorusKnot(4, 3)
    # The search keeps one parameterization per knot (a > |b|), so the
    # match comes back as T(4,-3); it is the same knot as T(3,-4).
    found = identify_torus_middle([mod_one(Fraction(2, 3)), -5], max_a=20)
    assert found.same_knot_as(TorusKnot(3, -4))
    assert identify_torus_middle([mod_one(Fraction(2, 3)), -4], max_a=20) is None


def test_identify_requires_class_first():
    with pytest.raises(TypeError):
        identify_torus_middle([Fraction(1, 3), 5], max_a=20)


def test_identify_empty_sequence():
    assert identify_torus_middle([], max_a=20) is None


def test_identify_round_trip_on_normalized_knots():
    for knot in iter_normalized(12):
        slopes = invariant_slopes(middle_tunnel_sequence(knot))
        assert identify_torus_middle(slopes, max_a=12) == knot
