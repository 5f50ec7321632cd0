"""Exact count of permutations that contain 213 while g(2) avoids it."""

import logging
import math

from ..enumeration import catalan_list
from ..errors import InvalidInputError
from .models import Not213Cases
from .size_law import binom

logger = logging.getLogger(__name__)


def _require_n(n: int) -> None:
    if n < 3:
        raise InvalidInputError(f"n must be >= 3, got {n}")


def not_av_213_2_count(n: int) -> int:
    """|S_n minus Av_n(213;2)| in closed form:

    2 (n-2)! sum_(i=1)^(n-4) c_i/(i-1)! + 2 (n-2)(n-3) c_(n-3) + 2 (n-2) c_(n-2) - c_n + 2 c_(n-1).
    """
    _require_n(n)
    c = catalan_list(n)
    head = math.factorial(n - 2)
    series = sum(c[i] * (head // math.factorial(i - 1)) for i in range(1, n - 3))
    return (
        2 * series
        + 2 * (n - 2) * (n - 3) * c[n - 3]
        + 2 * (n - 2) * c[n - 2]
        - c[n]
        + 2 * c[n - 1]
    )


def not_av_213_2_cases(n: int) -> Not213Cases:
    """The same count split by where 2 sits relative to 1 and how g(m) behaves."""
    _require_n(n)
    c = catalan_list(n)
    left_of_one = sum(
        c[i] * math.factorial(n - i - 1) * binom(n - 2, i - 1) for i in range(1, n - 1)
    )
    right_containing = sum(
        c[i] * (math.factorial(n - i - 1) - c[n - i - 1]) * binom(n - 2, i - 1)
        for i in range(1, n - 3)
    )
    right_avoiding = sum(
        c[i] * c[n - i - 1] * (binom(n - 2, i - 1) - 1) for i in range(1, n - 1)
    )
    return Not213Cases(n, left_of_one, right_containing, right_avoiding)


def av_213_2_count(n: int) -> int:
    """|Av_n(213;2)| = n! - |S_n minus Av_n(213;2)|."""
    return math.factorial(n) - not_av_213_2_count(n)
