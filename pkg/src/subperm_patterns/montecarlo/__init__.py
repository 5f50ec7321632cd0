"""
モンテカルロ推定モジュール

シード固定の一様乱数置換を使い、パターンが置換には現れるが
部分置換 g(k) には現れない確率を推定します。
"""

from .models import McConfig, McEstimate
from .sampler import chunk_rng, chunk_sizes, random_permutation, sample_sub_permutation_sizes
from .estimator import (
    ESTIMATE_COLUMNS,
    estimate_not_avsk,
    estimates_frame,
    linear_trend,
    sweep,
    sweep_grid,
    within_standard_errors,
)

__all__ = [
    # Models
    "McConfig",
    "McEstimate",

    # Sampling
    "chunk_rng",
    "chunk_sizes",
    "random_permutation",
    "sample_sub_permutation_sizes",

    # Estimation
    "ESTIMATE_COLUMNS",
    "estimate_not_avsk",
    "estimates_frame",
    "linear_trend",
    "sweep",
    "sweep_grid",
    "within_standard_errors",
]

__version__ = "0.1.0"
