"""
確率モジュール

部分置換 g(k) のサイズ分布と、パターンが g(k) に現れない確率の
厳密な式・漸近式・打ち切り級数を提供します。
"""

from .models import (
    AvoidanceSequence,
    DenominatorMethod,
    EstimateMethod,
    Not213Cases,
    ProbEstimate,
    Provenance,
    SizeDistribution,
)
from .size_law import binom, expected_size, size_variance, subperm_size_law
from .av213 import av_213_2_count, not_av_213_2_cases, not_av_213_2_count
from .constants import h_constant, h_partial_sum, h_sigma, h_sigma_partial_sum
from .sequences import (
    closed_form_sequence,
    load_avoidance_sequence,
    oracle_avoidance_sequence,
    oracle_limit,
    resolve_sequence,
)
from .presence import (
    conditional_presence,
    exhaustive_not_avsk,
    exhaustive_not_avsk_count,
    not_avsk2_bounds,
    prob_not_avsk,
    prob_not_avsk_asymptotic,
    w_sigma,
)

__all__ = [
    # Models
    "AvoidanceSequence",
    "DenominatorMethod",
    "EstimateMethod",
    "Not213Cases",
    "ProbEstimate",
    "Provenance",
    "SizeDistribution",

    # Size law
    "binom",
    "expected_size",
    "size_variance",
    "subperm_size_law",

    # Av(213;2)
    "av_213_2_count",
    "not_av_213_2_cases",
    "not_av_213_2_count",

    # Constants
    "h_constant",
    "h_partial_sum",
    "h_sigma",
    "h_sigma_partial_sum",

    # Sequences
    "closed_form_sequence",
    "load_avoidance_sequence",
    "oracle_avoidance_sequence",
    "oracle_limit",
    "resolve_sequence",

    # Estimates
    "conditional_presence",
    "exhaustive_not_avsk",
    "exhaustive_not_avsk_count",
    "not_avsk2_bounds",
    "prob_not_avsk",
    "prob_not_avsk_asymptotic",
    "w_sigma",
]

__version__ = "0.1.0"
