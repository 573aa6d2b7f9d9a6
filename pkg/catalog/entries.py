"""
Built-in surfaces with known Hilbert-square verdicts.

Each entry carries its profile, the expected verdict, a short reference
to the argument behind it and any externally established facts the
verdict engine consumes (rank mu bounds, exact Betti totals).
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from config import OUTPUT_CONFIG
from errors import ConsistencyError, HypothesisError
from hilbert import (
    Decision,
    Rule,
    Verdict,
    beta_star_hilb2_complex,
    beta1_extra,
    chi_hilb2_real,
    hilb2_verdict,
    main_component_beta1,
)
from surfaces import HodgeNumbers, RankMuHint, RealComponent, SurfaceProfile
from surfaces.profile import sum_real_invariants
from tools import ProfileReader

logger = logging.getLogger(__name__)

S2 = RealComponent.sphere()
T2 = RealComponent.of_genus(1)

# Real loci of the three deformation classes of maximal real cubic 4-folds
MAXIMAL_CUBIC_REAL_LOCI = (
    "RP4 # 10(S2 x S2) # (S1 x S3)",
    "RP4 # 6(S2 x S2) # 5(S1 x S3)",
    "RP4 # 2(S2 x S2) # 9(S1 x S3)",
)

# S2 x S2 components of the Fano real locus in the irregular class
IRREGULAR_FANO_SPHERE_PRODUCTS = 6


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    profile: SurfaceProfile
    expected: Verdict
    reference: str
    facts: Dict[str, int] = field(default_factory=dict)
    fano: Optional[str] = None  # "regular" or "irregular" for cubic 4-fold entries

    def __post_init__(self):
        if self.expected.decision == Decision.UNKNOWN:
            raise ValueError(f"catalog entry {self.name} must have a decided verdict")


@dataclass(frozen=True)
class CatalogResult:
    entry: CatalogEntry
    computed: Verdict

    @property
    def agrees(self) -> bool:
        return (self.computed.decision == self.entry.expected.decision
                and self.computed.rule == self.entry.expected.rule)


@dataclass(frozen=True)
class FanoReport:
    """Real locus of the Fano variety of lines of a cubic in the irregular class."""

    k3_name: str
    beta_star_C: int
    main_betti: Tuple[int, int, int, int, int]
    product_count: int
    verdict: Verdict

    @property
    def beta_star_R(self) -> int:
        return 4 * self.product_count + sum(self.main_betti)

    @property
    def defect(self) -> int:
        return self.beta_star_C - self.beta_star_R


def _k3(name: str, *components: RealComponent) -> SurfaceProfile:
    return SurfaceProfile(
        name=name,
        betti_f2=(1, 0, 22, 0, 1),
        hodge=HodgeNumbers(h10=0, h20=1, h11=20),
        real_components=components,
    )


def _ruled(genus: int) -> SurfaceProfile:
    return SurfaceProfile(
        name=f"ruled-g{genus}",
        betti_f2=(1, 2 * genus, 2, 2 * genus, 1),
        hodge=HodgeNumbers(h10=genus, h20=0, h11=2),
        real_components=(T2,) * (genus + 1),
        rank_mu_hint=RankMuHint(
            value=2 * genus + 1,
            justification="every real component is null-homologous in the quotient by conjugation",
        ),
    )


def _curve_product(g1: int, g2: int) -> SurfaceProfile:
    return SurfaceProfile(
        name=f"curves-g{g1}-g{g2}",
        betti_f2=(1, 2 * (g1 + g2), 2 + 4 * g1 * g2, 2 * (g1 + g2), 1),
        hodge=HodgeNumbers(h10=g1 + g2, h20=g1 * g2, h11=2 + 2 * g1 * g2),
        real_components=(T2,) * ((g1 + 1) * (g2 + 1)),
    )


K3_SIGMA10_S2 = _k3("k3-sigma10-s2", RealComponent.of_genus(10), S2)
K3_SIGMA6_5S2 = _k3("k3-sigma6-5s2", RealComponent.of_genus(6), *(S2,) * 5)
K3_SIGMA2_9S2 = _k3("k3-sigma2-9s2", RealComponent.of_genus(2), *(S2,) * 9)
K3_SIGMA10 = _k3("k3-sigma10", RealComponent.of_genus(10))
K3_3S2 = _k3("k3-3s2", S2, S2, S2)


def _verdict(decision: Decision, rule: Rule) -> Verdict:
    return Verdict(decision, rule)


MAXIMAL, NOT_MAXIMAL = Decision.MAXIMAL, Decision.NOT_MAXIMAL

ENTRIES: Tuple[CatalogEntry, ...] = (
    CatalogEntry(
        name="p2-rp2",
        profile=SurfaceProfile(
            name="p2-rp2",
            betti_f2=(1, 0, 1, 0, 1),
            hodge=HodgeNumbers(h10=0, h20=0, h11=1),
            real_components=(RealComponent.with_crosscaps(1),),
        ),
        expected=_verdict(MAXIMAL, Rule.H1_VANISHING_CONNECTIVITY),
        reference="rational surfaces: the Hilbert square of the real projective plane",
    ),
    CatalogEntry(
        name="rational-ruled-torus",
        profile=SurfaceProfile(
            name="rational-ruled-torus",
            betti_f2=(1, 0, 2, 0, 1),
            hodge=HodgeNumbers(h10=0, h20=0, h11=2),
            real_components=(T2,),
        ),
        expected=_verdict(MAXIMAL, Rule.H1_VANISHING_CONNECTIVITY),
        reference="rational surfaces with connected real locus",
    ),
    CatalogEntry(
        name="k3-sigma10-s2",
        profile=K3_SIGMA10_S2,
        expected=_verdict(NOT_MAXIMAL, Rule.HODGE_POSITIVE_DISCONNECTED),
        reference="no maximal K3 surface has a maximal Hilbert square",
    ),
    CatalogEntry(
        name="k3-sigma6-5s2",
        profile=K3_SIGMA6_5S2,
        expected=_verdict(NOT_MAXIMAL, Rule.HODGE_POSITIVE_DISCONNECTED),
        reference="no maximal K3 surface has a maximal Hilbert square",
    ),
    CatalogEntry(
        name="k3-sigma2-9s2",
        profile=K3_SIGMA2_9S2,
        expected=_verdict(NOT_MAXIMAL, Rule.HODGE_POSITIVE_DISCONNECTED),
        reference="no maximal K3 surface has a maximal Hilbert square",
    ),
    CatalogEntry(
        name="elliptic-k1",
        profile=SurfaceProfile(
            name="elliptic-k1",
            betti_f2=(1, 0, 10, 0, 1),
            hodge=HodgeNumbers(h10=0, h20=0, h11=10),
            real_components=(RealComponent.with_crosscaps(10),),
        ),
        expected=_verdict(MAXIMAL, Rule.H1_VANISHING_CONNECTIVITY),
        reference="rational elliptic surface from two real cubics meeting in 9 real points",
    ),
    CatalogEntry(
        name="elliptic-k3",
        profile=SurfaceProfile(
            name="elliptic-k3",
            betti_f2=(1, 0, 34, 0, 1),
            hodge=HodgeNumbers(h10=0, h20=2, h11=30),
            real_components=(RealComponent.of_genus(15), S2, S2),
        ),
        expected=_verdict(NOT_MAXIMAL, Rule.HODGE_POSITIVE_DISCONNECTED),
        reference="maximal elliptic surfaces with k >= 2 have a disconnected real locus",
    ),
    *(
        CatalogEntry(
            name=f"ruled-g{g}",
            profile=_ruled(g),
            expected=_verdict(MAXIMAL, Rule.RANK_MU_BALANCE),
            reference="ruled surface over a maximal curve with a maximal real structure",
            facts={"rank_mu": 2 * g + 1},
        )
        for g in (1, 2, 3)
    ),
    CatalogEntry(
        name="abelian-4-tori",
        profile=SurfaceProfile(
            name="abelian-4-tori",
            betti_f2=(1, 4, 6, 4, 1),
            hodge=HodgeNumbers(h10=2, h20=1, h11=4),
            real_components=(T2,) * 4,
            rank_mu_hint=RankMuHint(
                value=6,
                exact=False,
                justification="the involution is modelled by (-1) x id on E x E; rank mu exceeds 5",
            ),
        ),
        expected=_verdict(NOT_MAXIMAL, Rule.RANK_MU_BALANCE),
        reference="no real abelian surface has a maximal Hilbert square",
        facts={"rank_mu_lower_bound": 6},
    ),
    CatalogEntry(
        name="del-pezzo-k2-1",
        profile=SurfaceProfile(
            name="del-pezzo-k2-1",
            betti_f2=(1, 0, 9, 0, 1),
            hodge=HodgeNumbers(h10=0, h20=0, h11=9),
            real_components=(RealComponent.with_crosscaps(1),) + (S2,) * 4,
        ),
        expected=_verdict(NOT_MAXIMAL, Rule.H1_VANISHING_CONNECTIVITY),
        reference="maximal del Pezzo surface of degree 1 with real locus RP2 + 4 S2",
    ),
    CatalogEntry(
        name="rational-klein-4s2",
        profile=SurfaceProfile(
            name="rational-klein-4s2",
            betti_f2=(1, 0, 10, 0, 1),
            hodge=HodgeNumbers(h10=0, h20=0, h11=10),
            real_components=(RealComponent.with_crosscaps(2),) + (S2,) * 4,
        ),
        expected=_verdict(NOT_MAXIMAL, Rule.H1_VANISHING_CONNECTIVITY),
        reference="real blowup of the degree 1 del Pezzo surface at a real point",
    ),
    CatalogEntry(
        name="curves-g3-g3",
        profile=_curve_product(3, 3),
        expected=_verdict(NOT_MAXIMAL, Rule.COMPONENT_OVERFLOW),
        reference="products of maximal curves with g1 + g2 > 4",
    ),
    CatalogEntry(
        name="curves-g2-g3",
        profile=_curve_product(2, 3),
        expected=_verdict(NOT_MAXIMAL, Rule.COMPONENT_OVERFLOW),
        reference="products of maximal curves with g1 + g2 > 4",
    ),
    CatalogEntry(
        name="enriques",
        profile=SurfaceProfile(
            name="enriques",
            betti_f2=(1, 1, 12, 1, 1),
            tors2_h1=True,
            tors2_hstar=True,
            hodge=HodgeNumbers(h10=0, h20=0, h11=10),
            real_components=(RealComponent.of_genus(4), T2, S2),
            beta_star_hilb2_hint=154,
        ),
        expected=_verdict(NOT_MAXIMAL, Rule.TORSION_KNOWN_TOTAL),
        reference="no real Enriques surface has a maximal Hilbert square",
        facts={"beta_star_hilb2": 154, "beta_star_hilb2_lower_bound": 150},
    ),
    *(
        CatalogEntry(
            name=f"cubic4-regular-{k3.name[3:]}",
            profile=k3,
            expected=_verdict(NOT_MAXIMAL, Rule.FANO_INHERITS_HILBERT_SQUARE),
            reference="regular cubic 4-folds: the Fano variety is equivariantly the Hilbert square of a K3",
            facts={"fano_beta_star": 324},
            fano="regular",
        )
        for k3 in (K3_SIGMA10_S2, K3_SIGMA6_5S2, K3_SIGMA2_9S2, K3_SIGMA10)
    ),
    CatalogEntry(
        name="cubic4-irregular",
        profile=K3_3S2,
        expected=_verdict(NOT_MAXIMAL, Rule.FANO_IRREGULAR_CLASS),
        reference="irregular cubic 4-folds: six copies of S2 x S2 plus the main component of a K3 with 3 S2",
        facts={"fano_beta_star": 324},
        fano="irregular",
    ),
)


def _is_ten_spheres(profile: SurfaceProfile) -> bool:
    return len(profile.real_components) == 10 and all(c == S2 for c in profile.real_components)


def fano_regular_verdict(k3: SurfaceProfile) -> Verdict:
    """Fano variety of a regular cubic 4-fold, through the associated K3."""
    if _is_ten_spheres(k3):
        raise HypothesisError("the class of the K3 with real locus 10 S2 is not covered")
    underlying = hilb2_verdict(k3).verdict
    if underlying.decision == Decision.UNKNOWN:
        return Verdict(Decision.UNKNOWN, None, underlying.notes)
    return Verdict(
        underlying.decision,
        Rule.FANO_INHERITS_HILBERT_SQUARE,
        (f"Hilbert square of {k3.name}: {underlying.rule.value}",) + underlying.notes,
    )


def fano_irregular_report(k3: SurfaceProfile = K3_3S2) -> FanoReport:
    """
    Fano real locus for the irregular class: six copies of S2 x S2 and
    the main component of the Hilbert square of the K3 with real locus 3 S2.
    """
    inv = sum_real_invariants(k3.real_components)
    b1 = main_component_beta1(k3)
    chi_main = chi_hilb2_real(k3) - 4 * (inv.r * (inv.r - 1) // 2)
    if beta1_extra(k3) != 0:
        raise ConsistencyError("products of spheres have no first homology")
    main = (1, b1, chi_main - 2 + 2 * b1, b1, 1)

    total = beta_star_hilb2_complex(k3)
    beta_star_R = 4 * IRREGULAR_FANO_SPHERE_PRODUCTS + sum(main)
    decision = Decision.MAXIMAL if beta_star_R == total.value else Decision.NOT_MAXIMAL
    verdict = Verdict(decision, Rule.FANO_IRREGULAR_CLASS,
                      (f"beta*(real locus) = {beta_star_R} < beta* = {total.value}",))
    return FanoReport(
        k3_name=k3.name,
        beta_star_C=total.value,
        main_betti=main,
        product_count=IRREGULAR_FANO_SPHERE_PRODUCTS,
        verdict=verdict,
    )


def evaluate(entry: CatalogEntry) -> Verdict:
    if entry.fano == "regular":
        return fano_regular_verdict(entry.profile)
    if entry.fano == "irregular":
        return fano_irregular_report(entry.profile).verdict
    return hilb2_verdict(entry.profile).verdict


def run_catalog(name_filter: Optional[str] = None) -> List[CatalogResult]:
    """Evaluate every entry whose name contains name_filter."""
    results = []
    for entry in ENTRIES:
        if name_filter and name_filter not in entry.name:
            continue
        result = CatalogResult(entry=entry, computed=evaluate(entry))
        if not result.agrees:
            logger.warning("catalog entry %s: expected %s, computed %s",
                           entry.name, entry.expected.decision.value, result.computed.decision.value)
        results.append(result)
    return results


def export_catalog(directory: Union[str, Path]) -> List[Path]:
    """Write every entry's profile to directory as an editable profile file."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in ENTRIES:
        path = directory / f"{entry.name}{OUTPUT_CONFIG['profile_suffix']}"
        ProfileReader.write(entry.profile, path)
        written.append(path)
    logger.info("exported %d profiles to %s", len(written), directory)
    return written
