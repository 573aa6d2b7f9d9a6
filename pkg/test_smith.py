"""
Tests for the Smith-Thom report of the surface itself.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import HypothesisError, MissingHodgeDataError, SmithTheoryError
from surfaces import (
    HodgeNumbers,
    RealComponent,
    SmithReport,
    SurfaceProfile,
    check_consistency,
    comessatti_check,
    consistency_violations,
    hodge_obstruction_bound,
    smith_defect,
)

K3 = SurfaceProfile(
    name="k3",
    betti_f2=(1, 0, 22, 0, 1),
    hodge=HodgeNumbers(h10=0, h20=1, h11=20),
    real_components=(RealComponent.of_genus(10), RealComponent.sphere()),
)

# maximal, but Hodge numbers rule the real locus out
OVER_CONNECTED = SurfaceProfile(
    name="over-connected",
    betti_f2=(1, 0, 4, 0, 1),
    hodge=HodgeNumbers(h10=0, h20=1, h11=2),
    real_components=(RealComponent.of_genus(2),),
)


def test_maximal_k3():
    report = smith_defect(K3)
    assert report == SmithReport(
        beta_star_X=24, beta_star_R=24, defect=0, is_maximal=True,
        comessatti_ok=True, hodge_component_bound=2,
    )


def test_non_maximal_k3():
    profile = K3.model_copy(update={"real_components": (RealComponent.sphere(),) * 3})
    report = smith_defect(profile)
    assert report.defect == 18
    assert not report.is_maximal


def test_no_hodge_numbers_leaves_optional_fields_empty():
    profile = SurfaceProfile(name="p2", betti_f2=(1, 0, 1, 0, 1),
                             real_components=(RealComponent.with_crosscaps(1),))
    report = smith_defect(profile)
    assert report.is_maximal
    assert report.comessatti_ok is None
    assert report.hodge_component_bound is None


@pytest.mark.parametrize("components", [
    (RealComponent.sphere(), RealComponent.sphere()),  # negative defect
    (RealComponent.of_genus(1),),  # 3 - 4
])
def test_negative_defect_is_not_realizable(components):
    profile = SurfaceProfile(name="bad", betti_f2=(1, 0, 1, 0, 1), real_components=components)
    with pytest.raises(SmithTheoryError):
        smith_defect(profile)


def test_odd_defect_is_not_realizable():
    profile = SurfaceProfile(name="odd", betti_f2=(1, 0, 2, 0, 1),
                             real_components=(RealComponent.with_crosscaps(1),))
    with pytest.raises(SmithTheoryError):
        smith_defect(profile)


def test_report_checks_its_own_invariants():
    with pytest.raises(ValueError):
        SmithReport(beta_star_X=4, beta_star_R=3, defect=1, is_maximal=False)
    with pytest.raises(ValueError):
        SmithReport(beta_star_X=4, beta_star_R=4, defect=0, is_maximal=False)


def test_comessatti():
    assert comessatti_check(K3)
    assert not comessatti_check(OVER_CONNECTED)


def test_comessatti_needs_hodge_numbers():
    with pytest.raises(MissingHodgeDataError):
        comessatti_check(K3.model_copy(update={"hodge": None}))


def test_hodge_obstruction_bound():
    assert hodge_obstruction_bound(K3) == 2
    ruled = SurfaceProfile(name="ruled", betti_f2=(1, 4, 2, 4, 1),
                           hodge=HodgeNumbers(h10=2, h20=0, h11=2))
    assert hodge_obstruction_bound(ruled) == 3
    p2 = SurfaceProfile(name="p2", betti_f2=(1, 0, 1, 0, 1),
                        hodge=HodgeNumbers(h10=0, h20=0, h11=1))
    assert hodge_obstruction_bound(p2) is None
    abelian = SurfaceProfile(name="abelian", betti_f2=(1, 4, 6, 4, 1),
                             hodge=HodgeNumbers(h10=2, h20=1, h11=4))
    assert hodge_obstruction_bound(abelian) == 4


def test_hodge_obstruction_needs_torsion_free_h1():
    enriques = SurfaceProfile(name="enriques", betti_f2=(1, 1, 12, 1, 1), tors2_h1=True,
                              tors2_hstar=True, hodge=HodgeNumbers(h10=0, h20=0, h11=10))
    with pytest.raises(HypothesisError):
        hodge_obstruction_bound(enriques)


def test_consistency_violations():
    assert consistency_violations(K3) == []
    problems = consistency_violations(OVER_CONNECTED)
    assert len(problems) == 2
    assert any("Comessatti" in p for p in problems)
    with pytest.raises(SmithTheoryError):
        check_consistency(OVER_CONNECTED)


def test_non_maximal_profiles_pass_consistency():
    profile = OVER_CONNECTED.model_copy(update={"real_components": (RealComponent.sphere(),)})
    assert consistency_violations(profile) == []


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=40))
def test_synthetic_profiles_are_maximal(r, extra):
    profile = SurfaceProfile.synthetic_maximal(r, 2 * r - 2 + extra)
    report = smith_defect(profile)
    assert report.is_maximal
    assert report.defect == 0
