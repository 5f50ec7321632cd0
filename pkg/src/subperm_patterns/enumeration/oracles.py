"""Brute-force counterparts of the coefficient tables, filtered from enumerate_class."""

import logging
from collections import Counter
from typing import Dict, Optional

from ..permutations import (
    Permutation,
    all_sub_permutations,
    avoider,
    enumerate_class,
    gamma,
    gamma_u,
    is_odd_alternating,
    standardize,
)

logger = logging.getLogger(__name__)

AVOIDS_213 = avoider("213")


def gamma_distribution(n: int, ceiling: Optional[int] = None) -> Dict[int, int]:
    """How many pi in Av_n(312) have each value of gamma(pi, Av(213))."""
    return dict(Counter(gamma(p, AVOIDS_213) for p in enumerate_class(n, "312", ceiling)))


def pj_oracle(j: int, n: int, ceiling: Optional[int] = None) -> int:
    return sum(count for value, count in gamma_distribution(n, ceiling).items() if value <= j)


def has_odd_alternating_of_size(p: Permutation, size: int) -> bool:
    return any(
        record.size == size and is_odd_alternating(record.pattern)
        for record in all_sub_permutations(p)
    )


def lj_oracle(m: int, n: int, ceiling: Optional[int] = None) -> int:
    """pi in Av_n(312) with an odd alternating sub-permutation of size exactly 2m+1."""
    size = 2 * m + 1
    return sum(1 for p in enumerate_class(n, "312", ceiling) if has_odd_alternating_of_size(p, size))


def starts_with_231(p: Permutation) -> bool:
    return len(p) >= 3 and standardize(p.entries[:3]).entries == (2, 3, 1)


def m2_oracle(n: int, ceiling: Optional[int] = None) -> int:
    """pi in Av_n(123) whose first three entries form 231."""
    return sum(1 for p in enumerate_class(n, "123", ceiling) if starts_with_231(p))


def largest_increasing_distribution(n: int, ceiling: Optional[int] = None) -> Dict[int, int]:
    """How many pi in Av_n(123) have each largest increasing sub-permutation size."""
    increasing = avoider("21")
    return dict(Counter(gamma(p, increasing) for p in enumerate_class(n, "123", ceiling)))


def gamma_u_distribution(n: int, ceiling: Optional[int] = None) -> Dict[int, int]:
    """How many pi in Av_n(123) have each value of gamma_u."""
    return dict(Counter(gamma_u(p) for p in enumerate_class(n, "123", ceiling)))


def gamma_u_oracle(n: int, j: int, ceiling: Optional[int] = None) -> int:
    return sum(count for value, count in gamma_u_distribution(n, ceiling).items() if value <= j)
