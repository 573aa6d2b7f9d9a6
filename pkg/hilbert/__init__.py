"""Hilbert square of a real surface: formulas, verdicts and the generating-function oracle."""

from .goettsche import (
    BettiSeries,
    check_cx_relation,
    check_euler_specialization,
    euler_series,
    hilb_betti_series,
    hilbert_square_total,
)
from .square import (
    Decision,
    Hilb2Report,
    HilbertTotal,
    PieceBetti,
    RankMuResolution,
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

__all__ = [
    'BettiSeries',
    'check_cx_relation',
    'check_euler_specialization',
    'euler_series',
    'hilb_betti_series',
    'hilbert_square_total',
    'Decision',
    'Hilb2Report',
    'HilbertTotal',
    'PieceBetti',
    'RankMuResolution',
    'RankMuSource',
    'Rule',
    'Verdict',
    'actual_beta1_hilb2_real',
    'beta1_extra',
    'beta1_pieces',
    'beta_star_hilb2_complex',
    'chi_hilb2_real',
    'hilb2_verdict',
    'hilbert_total',
    'main_component_beta1',
    'rank_mu_rule',
    'real_betti_table',
    'real_betti_vector',
    'required_beta1',
]
