"""Exhaustive generators used as brute-force oracles."""

import itertools
import logging
from typing import Dict, Iterator, Optional

from ..config_manager import oracle_ceiling
from ..errors import InvalidInputError, ResourceLimitError
from .models import Permutation
from .patterns import PatternLike, as_permutation, word_contains

logger = logging.getLogger(__name__)


def _check_size(n: int, ceiling: Optional[int]) -> None:
    if n < 0:
        raise InvalidInputError(f"size must be non-negative, got {n}")
    limit = oracle_ceiling() if ceiling is None else ceiling
    if n > limit:
        raise ResourceLimitError(f"size {n} exceeds the oracle ceiling {limit}")


def enumerate_class(
    n: int, avoided: Optional[PatternLike] = None, ceiling: Optional[int] = None
) -> Iterator[Permutation]:
    """Yields every permutation of size ``n`` (avoiding ``avoided`` if given) in lexicographic order.

    Branches are cut as soon as the prefix built so far contains the pattern.
    Each call returns an independent generator.
    """
    _check_size(n, ceiling)
    if avoided is None:
        return (Permutation(entries) for entries in itertools.permutations(range(1, n + 1)))
    return _generate_avoiders(n, as_permutation(avoided))


def _generate_avoiders(n: int, pattern: Permutation) -> Iterator[Permutation]:
    prefix = []
    used = [False] * (n + 1)

    def extend() -> Iterator[Permutation]:
        if len(prefix) == n:
            yield Permutation(tuple(prefix))
            return
        for value in range(1, n + 1):
            if used[value]:
                continue
            prefix.append(value)
            if len(prefix) < len(pattern) or not word_contains(prefix, pattern):
                used[value] = True
                yield from extend()
                used[value] = False
            prefix.pop()

    yield from extend()


def count_class(n: int, avoided: Optional[PatternLike] = None, ceiling: Optional[int] = None) -> int:
    """|Av_n(avoided)| (or n! without a pattern) by exhaustion."""
    return sum(1 for _ in enumerate_class(n, avoided, ceiling))


def class_sizes(
    avoided: PatternLike, n_max: int, ceiling: Optional[int] = None
) -> Dict[int, int]:
    """|Av_i(avoided)| for i = 1..n_max."""
    sizes = {}
    for i in range(1, n_max + 1):
        sizes[i] = count_class(i, avoided, ceiling)
        logger.info(f"|Av_{i}({as_permutation(avoided)})| = {sizes[i]}")
    return sizes
