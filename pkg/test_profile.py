"""
Tests for the surface profile model and its derived real invariants.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from errors import ProfileValidationError
from surfaces import (
    HodgeNumbers,
    RealComponent,
    SurfaceProfile,
    derive_real_invariants,
    ensure_valid,
    sum_real_invariants,
    validate,
)

components = st.builds(
    RealComponent,
    orientable=st.booleans(),
    genus_or_crosscaps=st.integers(min_value=1, max_value=30),
)


def test_component_betti_numbers():
    assert RealComponent.sphere().betti == (1, 0, 1)
    assert RealComponent.of_genus(2).betti == (1, 4, 1)
    assert RealComponent.with_crosscaps(3).betti == (1, 3, 1)
    assert RealComponent.with_crosscaps(2).euler_characteristic == 0
    assert RealComponent.of_genus(10).beta_star == 22


def test_component_labels():
    labels = [c.label for c in (RealComponent.sphere(), RealComponent.of_genus(1),
                                RealComponent.with_crosscaps(1), RealComponent.with_crosscaps(2),
                                RealComponent.of_genus(5), RealComponent.with_crosscaps(4))]
    assert labels == ["S2", "T2", "RP2", "Klein", "Sigma5", "N4"]


def test_non_orientable_component_needs_a_crosscap():
    with pytest.raises(ValidationError):
        RealComponent(orientable=False, genus_or_crosscaps=0)


def test_negative_genus_is_rejected():
    with pytest.raises(ValidationError):
        RealComponent(orientable=True, genus_or_crosscaps=-1)


def test_valid_profile_has_no_violations():
    profile = SurfaceProfile(
        name="k3",
        betti_f2=(1, 0, 22, 0, 1),
        hodge=HodgeNumbers(h10=0, h20=1, h11=20),
        real_components=(RealComponent.of_genus(10), RealComponent.sphere()),
    )
    assert validate(profile) == []
    assert ensure_valid(profile) is profile
    assert profile.real_locus_label == "Sigma10 + S2"


@pytest.mark.parametrize("betti", [(2, 0, 1, 0, 1), (1, 0, 1, 0, 2), (1, 2, 1, 0, 1)])
def test_betti_violations(betti):
    profile = SurfaceProfile(name="bad", betti_f2=betti)
    violations = validate(profile)
    assert violations
    assert all(v.field == "betti_f2" for v in violations)


def test_torsion_flags_must_be_consistent():
    profile = SurfaceProfile(name="bad", betti_f2=(1, 0, 1, 0, 1), tors2_h1=True)
    assert [v.field for v in validate(profile)] == ["tors2_hstar"]


def test_hodge_numbers_must_match_betti_numbers():
    profile = SurfaceProfile(
        name="bad",
        betti_f2=(1, 2, 4, 2, 1),
        hodge=HodgeNumbers(h10=0, h20=1, h11=2),
    )
    fields = [v.field for v in validate(profile)]
    assert fields == ["hodge"]


def test_hodge_check_skipped_with_torsion_in_h1():
    profile = SurfaceProfile(
        name="enriques-like",
        betti_f2=(1, 1, 12, 1, 1),
        tors2_h1=True,
        tors2_hstar=True,
        hodge=HodgeNumbers(h10=0, h20=0, h11=10),
    )
    assert validate(profile) == []


def test_ensure_valid_collects_every_violation():
    profile = SurfaceProfile(name="bad", betti_f2=(2, 1, 0, 0, 3))
    with pytest.raises(ProfileValidationError) as info:
        ensure_valid(profile)
    assert len(info.value.violations) == 3
    assert "beta0 = 1" in str(info.value)


def test_profiles_are_frozen():
    profile = SurfaceProfile(name="p2", betti_f2=(1, 0, 1, 0, 1))
    with pytest.raises(ValidationError):
        profile.name = "other"


def test_derived_invariants_of_k3():
    profile = SurfaceProfile(
        name="k3",
        betti_f2=(1, 0, 22, 0, 1),
        real_components=(RealComponent.of_genus(10), RealComponent.sphere()),
    )
    inv = derive_real_invariants(profile)
    assert (inv.r, inv.beta_star_R, inv.beta1_R, inv.chi_R) == (2, 24, 20, -16)


def test_derived_invariants_of_empty_locus():
    profile = SurfaceProfile(name="empty", betti_f2=(1, 0, 1, 0, 1))
    assert tuple(derive_real_invariants(profile)) == (0, 0, 0, 0)


def test_derived_invariants_reject_invalid_profiles():
    with pytest.raises(ProfileValidationError):
        derive_real_invariants(SurfaceProfile(name="bad", betti_f2=(1, 1, 0, 0, 1)))


@given(st.lists(components, max_size=8), st.lists(components, max_size=8))
def test_real_invariants_are_additive(left, right):
    a, b = sum_real_invariants(left), sum_real_invariants(right)
    both = sum_real_invariants(left + right)
    assert tuple(both) == tuple(x + y for x, y in zip(a, b))


@given(st.lists(components, max_size=8))
def test_real_invariant_relations(parts):
    inv = sum_real_invariants(parts)
    assert inv.beta_star_R == 2 * inv.r + inv.beta1_R
    assert inv.chi_R == 2 * inv.r - inv.beta1_R


@given(st.integers(min_value=1, max_value=15), st.integers(min_value=0, max_value=60))
def test_synthetic_maximal_profiles(r, extra):
    beta2 = 2 * r - 2 + extra
    profile = SurfaceProfile.synthetic_maximal(r, beta2)
    inv = derive_real_invariants(profile)
    assert inv.r == r
    assert inv.beta_star_R == profile.beta_star


def test_synthetic_maximal_needs_room_for_components():
    with pytest.raises(ValueError):
        SurfaceProfile.synthetic_maximal(3, 1)
