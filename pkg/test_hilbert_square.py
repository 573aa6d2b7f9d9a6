"""
Tests for the Hilbert-square maximality engine.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catalog import ENTRIES
from errors import ConsistencyError, HypothesisError
from hilbert import (
    Decision,
    Hilb2Report,
    RankMuSource,
    Rule,
    Verdict,
    actual_beta1_hilb2_real,
    beta1_extra,
    beta1_pieces,
    beta_star_hilb2_complex,
    chi_hilb2_real,
    hilb2_verdict,
    hilbert_total,
    main_component_beta1,
    rank_mu_rule,
    real_betti_table,
    real_betti_vector,
    required_beta1,
)
from surfaces import RankMuHint, RealComponent, SurfaceProfile


def entry(name):
    return next(e.profile for e in ENTRIES if e.name == name)


P2 = entry("p2-rp2")
K3 = entry("k3-sigma10-s2")
ENRIQUES = entry("enriques")
RULED_G1 = entry("ruled-g1")
ABELIAN = entry("abelian-4-tori")

# beta1 > 0 with a connected maximal real locus
CONNECTED_IRREGULAR = SurfaceProfile(
    name="connected-irregular",
    betti_f2=(1, 2, 2, 2, 1),
    real_components=(RealComponent.of_genus(3),),
)

maximal_grid = st.integers(min_value=1, max_value=12).flatmap(
    lambda r: st.tuples(st.just(r), st.integers(min_value=2 * r - 2, max_value=2 * r + 40))
)


def test_complex_totals():
    assert beta_star_hilb2_complex(P2) == (9, True)
    assert beta_star_hilb2_complex(K3) == (324, True)
    assert beta_star_hilb2_complex(ENRIQUES) == (150, False)


def test_hint_overrides_the_lower_bound():
    assert hilbert_total(ENRIQUES) == (154, True)
    assert hilbert_total(K3) == (324, True)


@pytest.mark.parametrize("profile, hint", [(ENRIQUES, 149), (K3, 325)])
def test_contradictory_hints(profile, hint):
    with pytest.raises(ConsistencyError):
        hilbert_total(profile.model_copy(update={"beta_star_hilb2_hint": hint}))


def test_real_euler_characteristics():
    assert chi_hilb2_real(P2) == 1
    assert chi_hilb2_real(K3) == 156
    assert chi_hilb2_real(ENRIQUES) == 18
    assert chi_hilb2_real(RULED_G1) == 0


def test_extra_beta1():
    assert beta1_extra(K3) == 20
    assert beta1_extra(RULED_G1) == 4
    assert beta1_extra(P2) == 0


def test_rank_mu_from_vanishing_beta1():
    assert rank_mu_rule(K3) == (2, RankMuSource.THEOREM_BETA1_ZERO, 2)


def test_rank_mu_connected_case():
    assert rank_mu_rule(CONNECTED_IRREGULAR) == (3, RankMuSource.CONNECTED_CASE, 3)


def test_rank_mu_overflow():
    resolution = rank_mu_rule(entry("curves-g3-g3"))
    assert resolution.value is None
    assert resolution.source == RankMuSource.OVERFLOW_CASE
    assert resolution.lower_bound == 14


def test_rank_mu_hints():
    assert rank_mu_rule(RULED_G1) == (3, RankMuSource.HINT, 3)
    assert rank_mu_rule(ABELIAN) == (None, RankMuSource.HINT_LOWER_BOUND, 6)
    unhinted = ABELIAN.model_copy(update={"rank_mu_hint": None})
    assert rank_mu_rule(unhinted) == (None, RankMuSource.UNKNOWN, 5)


def test_rank_mu_hint_below_forced_minimum():
    too_small = ABELIAN.model_copy(update={"rank_mu_hint": RankMuHint(value=4)})
    with pytest.raises(ConsistencyError):
        rank_mu_rule(too_small)


def test_rank_mu_needs_maximal_surface():
    with pytest.raises(HypothesisError):
        rank_mu_rule(entry("cubic4-irregular"))


def test_pieces_of_k3():
    pieces = beta1_pieces(K3)
    assert pieces.beta1_H0 == 1
    assert pieces.beta1_Hi == (21, 1)
    assert pieces.pieces_total == 23
    assert pieces.rank_mu == 2


def test_required_and_actual_beta1():
    assert required_beta1(P2) == 2
    assert actual_beta1_hilb2_real(P2) == 2
    assert required_beta1(K3) == 42
    assert actual_beta1_hilb2_real(K3) == 41
    assert required_beta1(ENRIQUES) == 34


def test_required_beta1_hypotheses():
    with pytest.raises(HypothesisError):
        required_beta1(entry("cubic4-irregular"))
    with pytest.raises(HypothesisError):
        required_beta1(ENRIQUES.model_copy(update={"beta_star_hilb2_hint": None}))


def test_actual_beta1_unknown_without_rank_mu():
    assert actual_beta1_hilb2_real(ABELIAN) is None
    assert real_betti_vector(ABELIAN) is None


def test_main_component_beta1_without_maximality():
    assert main_component_beta1(entry("cubic4-irregular")) == 1
    assert main_component_beta1(K3) == 21
    with pytest.raises(HypothesisError):
        main_component_beta1(RULED_G1)


def test_betti_tables():
    assert real_betti_table(P2) == (1, 2, 3, 2, 1)
    assert real_betti_table(K3) == (2, 41, 234, 41, 2)
    with pytest.raises(HypothesisError):
        real_betti_table(RULED_G1)


def test_general_betti_vector():
    assert real_betti_vector(RULED_G1) == (2, 10, 16, 10, 2)
    assert real_betti_vector(CONNECTED_IRREGULAR) == (1, 7, 24, 7, 1)
    assert real_betti_vector(K3) == real_betti_table(K3)


def test_verdict_for_connected_irregular_surface():
    report = hilb2_verdict(CONNECTED_IRREGULAR)
    assert report.verdict.decision == Decision.MAXIMAL
    assert report.verdict.rule == Rule.CONNECTED_REAL_LOCUS
    assert report.defect == 0
    assert report.required_beta1 == report.actual_beta1 == 7


def test_verdict_for_k3():
    report = hilb2_verdict(K3)
    assert report.verdict.decision == Decision.NOT_MAXIMAL
    assert report.verdict.rule == Rule.HODGE_POSITIVE_DISCONNECTED
    assert report.defect == 4
    assert report.beta_star_hilb2_C == 324


def test_verdict_without_hodge_numbers_uses_connectivity():
    report = hilb2_verdict(K3.model_copy(update={"hodge": None}))
    assert report.verdict.rule == Rule.H1_VANISHING_CONNECTIVITY
    assert report.verdict.decision == Decision.NOT_MAXIMAL


def test_maximal_verdicts_mention_the_cube():
    notes = hilb2_verdict(P2).verdict.notes
    assert any("X^[3]" in note for note in notes)


def test_non_maximal_surface():
    report = hilb2_verdict(entry("cubic4-irregular"))
    assert report.verdict.decision == Decision.NOT_MAXIMAL
    assert report.verdict.rule == Rule.SURFACE_NOT_MAXIMAL
    assert "18" in report.verdict.notes[0]


def test_empty_real_locus_note():
    report = hilb2_verdict(K3.model_copy(update={"real_components": ()}))
    assert report.verdict.decision == Decision.NOT_MAXIMAL
    assert report.verdict.rule == Rule.EMPTY_REAL_LOCUS
    assert report.verdict.notes[0] == "X itself has Smith defect 24"
    assert report.verdict.notes[1].startswith("empty real locus")


def test_unknown_without_rank_mu_hint():
    report = hilb2_verdict(ABELIAN.model_copy(update={"rank_mu_hint": None}))
    assert report.verdict.decision == Decision.UNKNOWN
    assert report.verdict.rule is None
    assert report.rank_mu.source == RankMuSource.UNKNOWN


def test_torsion_case():
    report = hilb2_verdict(ENRIQUES)
    assert report.verdict.decision == Decision.NOT_MAXIMAL
    assert report.verdict.rule == Rule.TORSION_KNOWN_TOTAL
    assert report.required_beta1 == 34
    unknown = hilb2_verdict(ENRIQUES.model_copy(update={"beta_star_hilb2_hint": None}))
    assert unknown.verdict.decision == Decision.UNKNOWN
    assert unknown.beta_star_exact is False


def test_decided_verdict_needs_a_rule():
    with pytest.raises(ValueError):
        Verdict(Decision.MAXIMAL)


def test_report_rejects_inconsistent_tables():
    with pytest.raises(ConsistencyError):
        Hilb2Report(
            profile_name="broken",
            beta_star_hilb2_C=9,
            beta_star_exact=True,
            chi_hilb2_R=2,
            verdict=Verdict(Decision.MAXIMAL, Rule.H1_VANISHING_CONNECTIVITY),
            beta_hilb2_R=(1, 2, 3, 2, 1),
        )


@settings(max_examples=200)
@given(maximal_grid)
def test_connectivity_criterion(grid):
    r, beta2 = grid
    profile = SurfaceProfile.synthetic_maximal(r, beta2)
    balanced = actual_beta1_hilb2_real(profile) == required_beta1(profile)
    assert balanced == (r == 1)
    report = hilb2_verdict(profile)
    assert (report.verdict.decision == Decision.MAXIMAL) == (r == 1)
    assert report.defect == 4 * (r - 1)


@given(maximal_grid)
def test_table_identities(grid):
    r, beta2 = grid
    profile = SurfaceProfile.synthetic_maximal(r, beta2)
    table = real_betti_table(profile)
    assert table[0] - table[1] + table[2] - table[3] + table[4] == chi_hilb2_real(profile)
    assert sum(table) == beta_star_hilb2_complex(profile).value - 4 * (r - 1)
    assert table[1] == 1 + r * beta2 + 2 * r - 2 * r * r


@given(st.integers(min_value=0, max_value=80))
def test_connected_required_value(beta2):
    profile = SurfaceProfile.synthetic_maximal(1, beta2)
    assert required_beta1(profile) == profile.beta_star - 1


def test_every_rule_carries_a_citation():
    for rule in Rule:
        assert rule.citation
    assert "Hodge" in hilb2_verdict(K3).verdict.rule.citation
