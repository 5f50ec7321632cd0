"""Permutations, pattern containment, sub-permutations and the two-line drawing."""

from .models import (
    Permutation,
    SubPermutation,
    TwoLineRepr,
    format_permutation,
    parse_permutation,
)
from .oracle import class_sizes, count_class, enumerate_class
from .patterns import (
    ClassTest,
    PatternLike,
    SearchBudget,
    as_permutation,
    avoider,
    avoids,
    contains_pattern,
    is_decreasing,
    is_increasing,
    is_odd_alternating,
    standardize,
    word_contains,
)
from .subperms import (
    all_sub_permutations,
    gamma,
    gamma_u,
    sub_permutation,
    sub_permutation_at,
)
from .two_line import extend_right, two_line

__all__ = [
    # Models
    "Permutation",
    "SubPermutation",
    "TwoLineRepr",
    "parse_permutation",
    "format_permutation",

    # Oracles
    "enumerate_class",
    "count_class",
    "class_sizes",

    # Patterns
    "ClassTest",
    "PatternLike",
    "SearchBudget",
    "as_permutation",
    "avoider",
    "avoids",
    "contains_pattern",
    "word_contains",
    "is_increasing",
    "is_decreasing",
    "is_odd_alternating",
    "standardize",

    # Sub-permutations
    "sub_permutation",
    "sub_permutation_at",
    "all_sub_permutations",
    "gamma",
    "gamma_u",
    "two_line",
    "extend_right",
]

__version__ = "0.1.0"
