"""Sub-permutation extraction and the gamma statistics built on it."""

import logging
from typing import List, Tuple

from ..errors import InvalidInputError, UnsupportedInputError
from .models import Permutation, SubPermutation
from .patterns import ClassTest, contains_pattern, is_decreasing, standardize

logger = logging.getLogger(__name__)

INCREASING_3 = Permutation((1, 2, 3))


def _window(entries: Tuple[int, ...], index: int) -> Tuple[int, int]:
    """0-based inclusive bounds of the maximal run around ``index`` with entries >= entries[index]."""
    k = entries[index]
    lo = index
    while lo > 0 and entries[lo - 1] >= k:
        lo -= 1
    hi = index
    while hi < len(entries) - 1 and entries[hi + 1] >= k:
        hi += 1
    return lo, hi


def _extract(host: Permutation, index: int) -> SubPermutation:
    lo, hi = _window(host.entries, index)
    return SubPermutation(
        generator_value=host.entries[index],
        window=(lo + 1, hi + 1),
        pattern=standardize(host.entries[lo : hi + 1]),
    )


def sub_permutation(host: Permutation, k: int) -> SubPermutation:
    """The sub-permutation g(k) generated by the entry of value ``k``."""
    if not 1 <= k <= len(host):
        raise InvalidInputError(f"k={k} is outside 1..{len(host)}")
    return _extract(host, host.position(k))


def sub_permutation_at(host: Permutation, position: int) -> SubPermutation:
    """Same as sub_permutation, keyed by the 1-based position of the generator."""
    if not 1 <= position <= len(host):
        raise InvalidInputError(f"position {position} is outside 1..{len(host)}")
    return _extract(host, position - 1)


def all_sub_permutations(host: Permutation) -> List[SubPermutation]:
    """One record per value k = 1..n, in increasing k."""
    return [sub_permutation(host, k) for k in range(1, len(host) + 1)]


def gamma(host: Permutation, class_test: ClassTest) -> int:
    """Size of the largest sub-permutation whose pattern passes ``class_test``; 0 if none."""
    best = 0
    for record in all_sub_permutations(host):
        if record.size > best and class_test(record.pattern):
            best = record.size
    return best


def gamma_u(host: Permutation) -> int:
    """Largest non-trivial decreasing sub-permutation of a 123-avoider.

    Windows starting at position 1 are trivial. Returns 0 when every decreasing
    sub-permutation is trivial, which includes every decreasing host.
    """
    if contains_pattern(host, INCREASING_3):
        raise UnsupportedInputError(f"{host} contains 123")
    best = 0
    for record in all_sub_permutations(host):
        if not record.is_prefix and record.size > best and is_decreasing(record.pattern):
            best = record.size
    return best
