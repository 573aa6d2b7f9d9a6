"""
Hilbert square X^[2] of a real surface: Betti-number formulas and the
three-valued maximality verdict.

The real locus of X^[2] splits into the products F_i x F_j (i < j) of
real components and one main component, which the exceptional divisor
cuts into pieces H_0, ..., H_r glued along P(T*F_i). Everything here is
exact integer arithmetic on profile data.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional, Tuple

from errors import ConsistencyError, HypothesisError
from surfaces import (
    SurfaceProfile,
    check_consistency,
    derive_real_invariants,
    ensure_valid,
    smith_defect,
    sum_real_invariants,
)

logger = logging.getLogger(__name__)


class Decision(str, Enum):
    MAXIMAL = "Maximal"
    NOT_MAXIMAL = "NotMaximal"
    UNKNOWN = "Unknown"


class Rule(str, Enum):
    """Which established criterion produced a verdict."""

    SURFACE_NOT_MAXIMAL = "surface-not-maximal"
    EMPTY_REAL_LOCUS = "empty-real-locus"
    H1_VANISHING_CONNECTIVITY = "h1-vanishing-connectivity"
    HODGE_POSITIVE_DISCONNECTED = "hodge-positive-disconnected"
    CONNECTED_REAL_LOCUS = "connected-real-locus"
    COMPONENT_OVERFLOW = "component-overflow"
    RANK_MU_BALANCE = "rank-mu-balance"
    TORSION_KNOWN_TOTAL = "torsion-known-total"
    FANO_INHERITS_HILBERT_SQUARE = "fano-inherits-hilbert-square"
    FANO_IRREGULAR_CLASS = "fano-irregular-class"

    @property
    def citation(self) -> str:
        """The statement the rule applies, in words."""
        return _CITATIONS[self]


_CITATIONS = {
    Rule.SURFACE_NOT_MAXIMAL:
        "Smith-Thom inequality: a non-maximal X has a non-maximal Hilbert square",
    Rule.EMPTY_REAL_LOCUS:
        "Smith exact sequence: with X(R) empty, beta*(X^[2](R)) <= beta*(X^[2]/conj) < beta*(X^[2])",
    Rule.H1_VANISHING_CONNECTIVITY:
        "criterion for H1(X; F2) = 0: X^[2] is maximal iff X is maximal with connected real locus",
    Rule.HODGE_POSITIVE_DISCONNECTED:
        "Comessatti and Hodge bounds: h20 > 0 forces a disconnected real locus, so X^[2] is not maximal",
    Rule.CONNECTED_REAL_LOCUS:
        "connected real locus without 2-torsion: rank mu = 1 + beta1 balances beta1 of X^[2](R)",
    Rule.COMPONENT_OVERFLOW:
        "more than 1 + beta1 real components: rank mu >= 2 + beta1 leaves a beta1 deficit",
    Rule.RANK_MU_BALANCE:
        "beta1 balance of X^[2](R) with rank mu taken from the known geometry of the gluing",
    Rule.TORSION_KNOWN_TOTAL:
        "2-torsion in H1(X; Z): total Betti number of X^[2] known from the literature",
    Rule.FANO_INHERITS_HILBERT_SQUARE:
        "equivariant diffeomorphism between the Fano variety of lines and the Hilbert square of a K3",
    Rule.FANO_IRREGULAR_CLASS:
        "Fano variety of lines of an irregular real cubic fourfold: total Betti count of the real locus",
}


class RankMuSource(str, Enum):
    THEOREM_BETA1_ZERO = "TheoremBeta1Zero"
    CONNECTED_CASE = "ConnectedCase"
    OVERFLOW_CASE = "OverflowCase"
    HINT = "Hint"
    HINT_LOWER_BOUND = "HintLowerBound"
    UNKNOWN = "Unknown"


class HilbertTotal(NamedTuple):
    value: int
    exact: bool


class RankMuResolution(NamedTuple):
    value: Optional[int]
    source: RankMuSource
    lower_bound: Optional[int] = None


@dataclass(frozen=True)
class PieceBetti:
    beta1_H0: int
    beta1_Hi: Tuple[int, ...]
    beta1_extra: int
    rank_mu: Optional[int]
    rank_mu_source: RankMuSource
    rank_mu_lower_bound: Optional[int] = None

    @property
    def pieces_total(self) -> int:
        return self.beta1_H0 + sum(self.beta1_Hi)


@dataclass(frozen=True)
class Verdict:
    decision: Decision
    rule: Optional[Rule] = None
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.decision != Decision.UNKNOWN and self.rule is None:
            raise ValueError("a decided verdict must name its rule")


@dataclass(frozen=True)
class Hilb2Report:
    profile_name: str
    beta_star_hilb2_C: int
    beta_star_exact: bool
    chi_hilb2_R: int
    verdict: Verdict
    beta_hilb2_R: Optional[Tuple[int, int, int, int, int]] = None
    required_beta1: Optional[int] = None
    actual_beta1: Optional[int] = None
    defect: Optional[int] = None
    rank_mu: Optional[RankMuResolution] = None

    def __post_init__(self):
        if self.beta_hilb2_R is not None:
            alternating = sum((-1) ** i * b for i, b in enumerate(self.beta_hilb2_R))
            if alternating != self.chi_hilb2_R:
                raise ConsistencyError(
                    f"{self.profile_name}: Betti vector {self.beta_hilb2_R} has Euler "
                    f"characteristic {alternating}, expected {self.chi_hilb2_R}"
                )
            total = sum(self.beta_hilb2_R)
            if self.defect is not None and total != self.beta_star_hilb2_C - self.defect:
                raise ConsistencyError(f"{self.profile_name}: total {total} does not match defect")
            if self.beta_star_exact and total > self.beta_star_hilb2_C:
                raise ConsistencyError(f"{self.profile_name}: Smith inequality fails for X^[2]")
        if self.required_beta1 is not None and self.actual_beta1 is not None:
            balanced = self.required_beta1 == self.actual_beta1
            if not balanced and self.verdict.decision != Decision.NOT_MAXIMAL:
                raise ConsistencyError(f"{self.profile_name}: beta1 mismatch must mean NotMaximal")
            if balanced and self.beta_star_exact and self.verdict.decision != Decision.MAXIMAL:
                raise ConsistencyError(f"{self.profile_name}: balanced beta1 must mean Maximal")


def _require_maximal_torsion_free(profile: SurfaceProfile, operation: str):
    report = smith_defect(profile)
    if not report.is_maximal:
        raise HypothesisError(
            f"{operation} needs a maximal surface; {profile.name!r} has Smith defect "
            f"{report.defect} (use hilb2_verdict instead)"
        )
    if profile.tors2_h1:
        raise HypothesisError(f"{operation} needs H1(X; Z) without 2-torsion")
    return sum_real_invariants(profile.real_components)


def beta_star_hilb2_complex(profile: SurfaceProfile) -> HilbertTotal:
    """
    Total F2-Betti number of X^[2] from the Betti numbers of X.

    Exact when H*(X; Z) has no 2-torsion, otherwise a lower bound.
    """
    ensure_valid(profile)
    b = profile.beta_star
    value = b * (b + 1) // 2 + b - 2 * profile.beta1
    return HilbertTotal(value, not profile.tors2_hstar)


def hilbert_total(profile: SurfaceProfile) -> HilbertTotal:
    """The best known total Betti number of X^[2]: the hint if supplied, else the formula."""
    formula = beta_star_hilb2_complex(profile)
    hint = profile.beta_star_hilb2_hint
    if hint is None:
        return formula
    if hint < formula.value or (formula.exact and hint != formula.value):
        raise ConsistencyError(
            f"{profile.name}: beta_star_hilb2_hint={hint} contradicts the formula value {formula.value}"
        )
    return HilbertTotal(hint, True)


def chi_hilb2_real(profile: SurfaceProfile) -> int:
    """Euler characteristic of X^[2](R); the real locus may be empty."""
    inv = derive_real_invariants(profile)
    chi = inv.chi_R
    twice = profile.beta_star - 4 * profile.beta1 + chi * chi - 2 * chi
    if twice % 2:
        raise ConsistencyError(
            f"{profile.name}: beta*(X) and chi(X(R)) have different parity"
        )
    return twice // 2


def beta1_extra(profile: SurfaceProfile) -> int:
    """beta1 of the union of products F_i x F_j, i < j (Kunneth)."""
    inv = derive_real_invariants(profile)
    r, b_R = inv.r, inv.beta_star_R
    general = r * b_R - 2 * r * r - b_R + 2 * r

    # every component meets r - 1 partners
    if general != (r - 1) * inv.beta1_R:
        raise ConsistencyError(f"{profile.name}: product beta1 formulas disagree")

    if profile.beta1 == 0 and not profile.tors2_h1 and b_R == profile.beta_star and r:
        b2 = profile.beta2
        if general != r * b2 - 2 * r * r + 4 * r - b2 - 2:
            raise ConsistencyError(f"{profile.name}: maximal beta1=0 form disagrees")
    return general


def rank_mu_rule(profile: SurfaceProfile) -> RankMuResolution:
    """
    Resolve the rank of the gluing map mu of the main component.

    beta1(X) = 0 gives rank r; a connected real locus gives 1 + beta1;
    more than 1 + beta1 components only bound it below by 2 + beta1;
    in between, the profile's hint decides.
    """
    inv = _require_maximal_torsion_free(profile, "rank_mu_rule")
    r, b1 = inv.r, profile.beta1
    hint = profile.rank_mu_hint

    floor = max(r, 1 + b1)
    if hint is not None and hint.exact and hint.value < floor:
        raise ConsistencyError(
            f"{profile.name}: rank mu hint {hint.value} is below the forced minimum {floor}"
        )

    def _contradicts(value):
        return hint is not None and hint.exact and hint.value != value

    if b1 == 0:
        if _contradicts(r):
            raise ConsistencyError(f"{profile.name}: rank mu is {r} when beta1 = 0, hint says {hint.value}")
        return RankMuResolution(r, RankMuSource.THEOREM_BETA1_ZERO, r)

    if r == 1:
        if _contradicts(1 + b1):
            raise ConsistencyError(f"{profile.name}: connected real locus forces rank mu = {1 + b1}")
        return RankMuResolution(1 + b1, RankMuSource.CONNECTED_CASE, 1 + b1)

    if r > 1 + b1:
        bound = 2 + b1
        if hint is not None:
            if hint.exact and hint.value < bound:
                raise ConsistencyError(f"{profile.name}: rank mu is at least {bound}")
            bound = max(bound, hint.value)
        return RankMuResolution(None, RankMuSource.OVERFLOW_CASE, bound)

    if hint is None:
        return RankMuResolution(None, RankMuSource.UNKNOWN, floor)
    if hint.exact:
        return RankMuResolution(hint.value, RankMuSource.HINT, hint.value)
    return RankMuResolution(None, RankMuSource.HINT_LOWER_BOUND, max(hint.value, floor))


def beta1_pieces(profile: SurfaceProfile) -> PieceBetti:
    """beta1 of the pieces H_0, ..., H_r of the main component, plus rank mu."""
    inv = _require_maximal_torsion_free(profile, "beta1_pieces")
    h0 = 1 + profile.beta1
    hi = tuple(c.beta_star - 1 for c in profile.real_components)
    if sum(hi) != profile.beta_star - inv.r:
        raise ConsistencyError(f"{profile.name}: pieces do not sum to beta*(X) - r")

    resolution = rank_mu_rule(profile)
    return PieceBetti(
        beta1_H0=h0,
        beta1_Hi=hi,
        beta1_extra=beta1_extra(profile),
        rank_mu=resolution.value,
        rank_mu_source=resolution.source,
        rank_mu_lower_bound=resolution.lower_bound,
    )


def required_beta1(profile: SurfaceProfile) -> int:
    """
    The value beta1(X^[2](R)) must take for X^[2] to be maximal.

    Only meaningful for maximal X; needs an exact total Betti number of
    X^[2] (formula, or hint in the torsion case).
    """
    report = smith_defect(profile)
    if not report.is_maximal:
        raise HypothesisError(
            f"{profile.name!r} is not maximal, so X^[2] cannot be; the required value is moot"
        )
    total = hilbert_total(profile)
    if not total.exact:
        raise HypothesisError(
            f"{profile.name!r}: H*(X; Z) has 2-torsion and no exact beta*(X^[2]) is known"
        )

    difference = total.value - chi_hilb2_real(profile)
    if difference % 4:
        raise ConsistencyError(f"{profile.name}: beta*(X^[2]) - chi(X^[2](R)) is not divisible by 4")
    required = difference // 4

    r = len(profile.real_components)
    if profile.beta_star_hilb2_hint is None:
        if required != r * profile.beta_star - 2 * r * r + r:
            raise ConsistencyError(f"{profile.name}: general required-beta1 form disagrees")
        if profile.beta1 == 0 and required != 3 * r - 2 * r * r + r * profile.beta2:
            raise ConsistencyError(f"{profile.name}: beta1=0 required-beta1 form disagrees")
    return required


def actual_beta1_hilb2_real(profile: SurfaceProfile) -> Optional[int]:
    """beta1(X^[2](R)) from the cut-and-paste pieces; None while rank mu is unknown."""
    pieces = beta1_pieces(profile)
    if pieces.rank_mu is None:
        return None
    actual = pieces.beta1_extra + pieces.pieces_total - pieces.rank_mu

    if profile.beta1 == 0:
        r, b2 = len(profile.real_components), profile.beta2
        if actual != 1 + r * b2 + 2 * r - 2 * r * r:
            raise ConsistencyError(f"{profile.name}: closed form for beta1(X^[2](R)) disagrees")
    return actual


def main_component_beta1(profile: SurfaceProfile) -> int:
    """
    beta1 of the main component for beta1(X) = 0 and any real structure
    with non-empty real locus; maximality is not assumed.
    """
    inv = derive_real_invariants(profile)
    if profile.beta1 != 0 or profile.tors2_h1:
        raise HypothesisError("main_component_beta1 needs H1(X; F2) = 0")
    if inv.r == 0:
        raise HypothesisError("main_component_beta1 needs a non-empty real locus")
    # beta1(H_0) = 1, beta1(H_i) = beta*(F_i) - 1, rank mu = r
    return 1 + inv.beta_star_R - 2 * inv.r


def real_betti_table(profile: SurfaceProfile) -> Tuple[int, int, int, int, int]:
    """Closed-form Betti vector of X^[2](R) for maximal X with H1(X; F2) = 0."""
    inv = _require_maximal_torsion_free(profile, "real_betti_table")
    if profile.beta1 != 0:
        raise HypothesisError("real_betti_table needs beta1(X) = 0")

    r, b = inv.r, profile.beta_star
    b0 = r * (r - 1) // 2 + 1
    b1 = r * b + 1 - 2 * r * r
    b2 = b * (b - 1) // 2 - 2 * (r - 1) * b + 3 * r * (r - 1)
    table = (b0, b1, b2, b1, b0)

    if 2 * b0 - 2 * b1 + b2 != chi_hilb2_real(profile):
        raise ConsistencyError(f"{profile.name}: Betti table and Euler characteristic disagree")
    if b1 != actual_beta1_hilb2_real(profile):
        raise ConsistencyError(f"{profile.name}: Betti table and piece computation disagree")
    return table


def real_betti_vector(profile: SurfaceProfile) -> Optional[Tuple[int, int, int, int, int]]:
    """
    Betti vector of X^[2](R) for maximal torsion-free X once rank mu is known.

    Every component of X^[2](R) is a closed 4-manifold, so beta3 = beta1 and
    beta2 follows from the Euler characteristic.
    """
    actual = actual_beta1_hilb2_real(profile)
    if actual is None:
        return None
    r = len(profile.real_components)
    b0 = r * (r - 1) // 2 + 1
    b2 = chi_hilb2_real(profile) - 2 * b0 + 2 * actual
    vector = (b0, actual, b2, actual, b0)
    if profile.beta1 == 0 and vector != real_betti_table(profile):
        raise ConsistencyError(f"{profile.name}: general Betti vector disagrees with the table")
    return vector


def _empty_locus_note(profile: SurfaceProfile, total: HilbertTotal) -> str:
    upper = profile.beta_star // 2 + 2 * profile.beta1 + 4
    return (
        f"empty real locus: beta*(X^[2](R)) = beta*(X/conj) <= {upper}, "
        f"while beta*(X^[2]) >= {total.value}"
    )


def hilb2_verdict(profile: SurfaceProfile) -> Hilb2Report:
    """
    Decide maximality of X^[2].

    Order: empty real locus, non-maximal X, H1(X; F2) = 0, torsion-free
    beta1 > 0, and finally the 2-torsion case, which needs an externally
    known total Betti number of X^[2].
    """
    smith = check_consistency(profile)
    inv = sum_real_invariants(profile.real_components)
    total = hilbert_total(profile)
    chi2 = chi_hilb2_real(profile)
    r, b1 = inv.r, profile.beta1

    def report(verdict, **fields):
        logger.info("%s: %s (%s)", profile.name, verdict.decision.value,
                    verdict.rule.value if verdict.rule else "undecided")
        return Hilb2Report(
            profile_name=profile.name,
            beta_star_hilb2_C=total.value,
            beta_star_exact=total.exact,
            chi_hilb2_R=chi2,
            verdict=verdict,
            **fields,
        )

    defect_note = f"X itself has Smith defect {smith.defect}"
    # empty locus first: its defect is always positive
    if r == 0:
        return report(Verdict(Decision.NOT_MAXIMAL, Rule.EMPTY_REAL_LOCUS,
                              (defect_note, _empty_locus_note(profile, total))))

    if not smith.is_maximal:
        return report(Verdict(Decision.NOT_MAXIMAL, Rule.SURFACE_NOT_MAXIMAL, (defect_note,)))

    if profile.tors2_h1:
        return _torsion_verdict(profile, report, r)

    resolution = rank_mu_rule(profile)
    required = required_beta1(profile) if total.exact else None
    cube_note = "maximality of X^[2] implies maximality of X^[3]"

    if b1 == 0:
        table = real_betti_table(profile)
        if r == 1:
            rule, decision = Rule.H1_VANISHING_CONNECTIVITY, Decision.MAXIMAL
        else:
            decision = Decision.NOT_MAXIMAL
            hodge = profile.hodge
            positive = hodge is not None and hodge.h20 > 0
            rule = Rule.HODGE_POSITIVE_DISCONNECTED if positive else Rule.H1_VANISHING_CONNECTIVITY
        notes = (f"defect 4(r-1) = {4 * (r - 1)}",)
        if decision == Decision.MAXIMAL:
            notes += (cube_note,)
        return report(
            Verdict(decision, rule, notes),
            beta_hilb2_R=table,
            required_beta1=required,
            actual_beta1=table[1],
            defect=4 * (r - 1) if total.exact else None,
            rank_mu=resolution,
        )

    if r > 1 + b1:
        return report(
            Verdict(Decision.NOT_MAXIMAL, Rule.COMPONENT_OVERFLOW,
                    (f"{r} components exceed 1 + beta1 = {1 + b1}; rank mu >= {resolution.lower_bound}",
                     "defect at least 4")),
            required_beta1=required,
            rank_mu=resolution,
        )

    if resolution.value is None:
        if resolution.lower_bound > 1 + b1:
            bound = 4 * (resolution.lower_bound - b1 - 1)
            return report(
                Verdict(Decision.NOT_MAXIMAL, Rule.RANK_MU_BALANCE,
                        (f"rank mu >= {resolution.lower_bound} > 1 + beta1 = {1 + b1}",
                         f"defect at least {bound}")),
                required_beta1=required,
                rank_mu=resolution,
            )
        return report(
            Verdict(Decision.UNKNOWN, None,
                    (f"rank mu undetermined for 1 < r = {r} <= 1 + beta1 = {1 + b1}; supply a hint",)),
            required_beta1=required,
            rank_mu=resolution,
        )

    rule = Rule.CONNECTED_REAL_LOCUS if r == 1 else Rule.RANK_MU_BALANCE
    decision = Decision.MAXIMAL if resolution.value == 1 + b1 else Decision.NOT_MAXIMAL
    notes = (f"rank mu = {resolution.value} ({resolution.source.value})",)
    if decision == Decision.MAXIMAL:
        notes += (cube_note,)
    vector = real_betti_vector(profile)
    return report(
        Verdict(decision, rule, notes),
        beta_hilb2_R=vector,
        required_beta1=required,
        actual_beta1=vector[1],
        defect=4 * (resolution.value - b1 - 1) if total.exact else None,
        rank_mu=resolution,
    )


def _torsion_verdict(profile: SurfaceProfile, report, r: int) -> Hilb2Report:
    """2-torsion in H1(X; Z): decidable only with a known beta*(X^[2])."""
    if profile.beta_star_hilb2_hint is None:
        return report(Verdict(Decision.UNKNOWN, None,
                              ("H1(X; Z) has 2-torsion and no exact beta*(X^[2]) is known",)))

    required = required_beta1(profile)
    pieces_total = (1 + profile.beta1) + (profile.beta_star - r)
    needed = beta1_extra(profile) + pieces_total - required
    # the blocks mu_i alone already have total rank r
    if r > needed:
        return report(
            Verdict(Decision.NOT_MAXIMAL, Rule.TORSION_KNOWN_TOTAL,
                    (f"maximality needs rank mu = {needed}, but rank mu >= r = {r}",)),
            required_beta1=required,
            rank_mu=RankMuResolution(None, RankMuSource.OVERFLOW_CASE, r),
        )
    return report(
        Verdict(Decision.UNKNOWN, None,
                (f"maximality needs rank mu = {needed}; only rank mu >= {r} is known",)),
        required_beta1=required,
    )
