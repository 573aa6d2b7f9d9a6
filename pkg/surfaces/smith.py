"""
Smith-Thom maximality of the surface itself.

Smith inequality and defect, the Comessatti inequality, and the lower
bound on the number of real components that Hodge numbers force on any
maximal real structure.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from errors import HypothesisError, MissingHodgeDataError, SmithTheoryError

from .profile import SurfaceProfile, derive_real_invariants, ensure_valid

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithReport:
    beta_star_X: int
    beta_star_R: int
    defect: int
    is_maximal: bool
    comessatti_ok: Optional[bool] = None
    hodge_component_bound: Optional[int] = None

    def __post_init__(self):
        if self.defect != self.beta_star_X - self.beta_star_R:
            raise ValueError("defect must equal beta_star_X - beta_star_R")
        if self.defect < 0 or self.defect % 2:
            raise ValueError(f"Smith defect must be even and non-negative, got {self.defect}")
        if self.is_maximal != (self.defect == 0):
            raise ValueError("is_maximal must be equivalent to a zero defect")


def smith_defect(profile: SurfaceProfile) -> SmithReport:
    """
    Compare total F2-Betti numbers of X and of its real locus.

    Raises:
        SmithTheoryError: if the defect is negative or odd.
    """
    inv = derive_real_invariants(profile)
    defect = profile.beta_star - inv.beta_star_R
    if defect < 0 or defect % 2:
        raise SmithTheoryError(
            f"profile {profile.name!r} violates Smith theory "
            f"(beta*(X)={profile.beta_star}, beta*(X(R))={inv.beta_star_R}); not realizable"
        )

    comessatti_ok = None
    bound = None
    if profile.hodge is not None:
        comessatti_ok = comessatti_check(profile)
        if not profile.tors2_h1:
            bound = hodge_obstruction_bound(profile)

    logger.debug("Smith defect of %s: %d", profile.name, defect)
    return SmithReport(
        beta_star_X=profile.beta_star,
        beta_star_R=inv.beta_star_R,
        defect=defect,
        is_maximal=defect == 0,
        comessatti_ok=comessatti_ok,
        hodge_component_bound=bound,
    )


def comessatti_check(profile: SurfaceProfile) -> bool:
    """True iff 2 - chi(X(R)) <= h11(X)."""
    if profile.hodge is None:
        raise MissingHodgeDataError(f"profile {profile.name!r} has no Hodge numbers")
    inv = derive_real_invariants(profile)
    return 2 - (2 * inv.r - inv.beta1_R) <= profile.hodge.h11


def hodge_obstruction_bound(profile: SurfaceProfile) -> Optional[int]:
    """
    Lower bound on the number of real components of any maximal real structure.

    Returns:
        ceil(1 + h20/2 + h10), or None when h20 + h10 = 0.
    """
    ensure_valid(profile)
    if profile.hodge is None:
        raise MissingHodgeDataError(f"profile {profile.name!r} has no Hodge numbers")
    if profile.tors2_h1:
        raise HypothesisError("the component bound needs H1(X; Z) without 2-torsion")

    h = profile.hodge
    if h.h20 + h.h10 == 0:
        return None
    return 1 + h.h10 + (h.h20 + 1) // 2


def consistency_violations(profile: SurfaceProfile) -> List[str]:
    """
    Cross-check a maximal profile against its Hodge data.

    Non-maximal profiles and profiles without Hodge numbers pass.
    """
    report = smith_defect(profile)
    problems = []
    if not report.is_maximal or profile.hodge is None:
        return problems

    r = len(profile.real_components)
    if report.hodge_component_bound is not None and r < report.hodge_component_bound:
        problems.append(
            f"maximal real structure with {r} component(s), "
            f"but Hodge numbers force at least {report.hodge_component_bound}"
        )
    if report.comessatti_ok is False:
        problems.append("Comessatti inequality 2 - chi(X(R)) <= h11 fails")
    return problems


def check_consistency(profile: SurfaceProfile) -> SmithReport:
    """Return the Smith report, raising SmithTheoryError on any contradiction."""
    problems = consistency_violations(profile)
    if problems:
        raise SmithTheoryError(f"profile {profile.name!r}: " + "; ".join(problems))
    return smith_defect(profile)
