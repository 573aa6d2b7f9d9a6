"""Surface data model and Smith-Thom analysis of the surface itself."""

from .profile import (
    HodgeNumbers,
    RankMuHint,
    RealComponent,
    RealInvariants,
    SurfaceProfile,
    Violation,
    derive_real_invariants,
    ensure_valid,
    sum_real_invariants,
    validate,
)
from .smith import (
    SmithReport,
    check_consistency,
    comessatti_check,
    consistency_violations,
    hodge_obstruction_bound,
    smith_defect,
)

__all__ = [
    'HodgeNumbers',
    'RankMuHint',
    'RealComponent',
    'RealInvariants',
    'SurfaceProfile',
    'Violation',
    'derive_real_invariants',
    'ensure_valid',
    'sum_real_invariants',
    'validate',
    'SmithReport',
    'check_consistency',
    'comessatti_check',
    'consistency_violations',
    'hodge_obstruction_bound',
    'smith_defect',
]
