"""Standardization, classical pattern containment and the shape classes built on it."""

import logging
from typing import Callable, List, Optional, Sequence, Tuple, Union

from ..errors import InvalidInputError, SearchBudgetExceeded
from .models import Permutation

logger = logging.getLogger(__name__)

ClassTest = Callable[[Permutation], bool]
PatternLike = Union[Permutation, str, Sequence[int]]


def as_permutation(value: PatternLike) -> Permutation:
    """Accepts a Permutation, its one-line text, or a sequence of ranks."""
    if isinstance(value, Permutation):
        return value
    if isinstance(value, str):
        text = value.strip()
        # compact form "213" for patterns below 10
        if text.isdigit() and " " not in text and len(text) > 1:
            return Permutation(tuple(int(ch) for ch in text))
        return Permutation.parse(text)
    return Permutation(tuple(value))


def standardize(word: Sequence[int]) -> Permutation:
    """Rescales a word of distinct integers onto 1..len(word), preserving relative order."""
    word = tuple(word)
    if len(set(word)) != len(word):
        raise InvalidInputError(f"entries must be pairwise distinct: {word}")
    ranks = {value: rank for rank, value in enumerate(sorted(word), start=1)}
    return Permutation(tuple(ranks[value] for value in word))


def _contains_short(text: Tuple[int, ...], pattern: Tuple[int, ...]) -> bool:
    """Direct scan for patterns of length at most 3."""
    n = len(text)
    if len(pattern) == 1:
        return n >= 1
    if len(pattern) == 2:
        ascending = pattern == (1, 2)
        for i in range(n - 1):
            for j in range(i + 1, n):
                if (text[i] < text[j]) == ascending:
                    return True
        return False

    p1, p2, p3 = pattern
    left_below = p1 < p2
    right_below = p3 < p2
    want_small_left = p1 < p3
    # fix the middle entry, keep the most permissive left candidate, scan the right side
    for j in range(1, n - 1):
        middle = text[j]
        best = None
        for i in range(j):
            if (text[i] < middle) == left_below:
                if best is None or (text[i] < best) == want_small_left:
                    best = text[i]
        if best is None:
            continue
        for k in range(j + 1, n):
            value = text[k]
            if (value < middle) == right_below and (best < value) == want_small_left:
                return True
    return False


class SearchBudget:
    """Node expansions left for one or more pattern searches; None means unlimited."""

    __slots__ = ("remaining", "limit")

    def __init__(self, limit: Optional[int]):
        self.limit = limit
        self.remaining = limit

    def spend(self) -> None:
        if self.remaining is None:
            return
        self.remaining -= 1
        if self.remaining < 0:
            raise SearchBudgetExceeded(self.limit)


BudgetLike = Union[int, SearchBudget, None]


def _neighbour_indices(pattern: Tuple[int, ...]) -> List[Tuple[Optional[int], Optional[int], int]]:
    """For each pattern position s: the earlier positions holding the nearest smaller
    and larger values, and how many pattern values lie strictly between those two."""
    m = len(pattern)
    result = []
    for s, value in enumerate(pattern):
        below = above = None
        for t in range(s):
            if pattern[t] < value and (below is None or pattern[t] > pattern[below]):
                below = t
            if pattern[t] > value and (above is None or pattern[t] < pattern[above]):
                above = t
        floor = pattern[below] if below is not None else 0
        ceiling = pattern[above] if above is not None else m + 1
        result.append((below, above, ceiling - floor - 1))
    return result


def _contains_backtracking(
    text: Tuple[int, ...], pattern: Tuple[int, ...], budget: SearchBudget
) -> bool:
    n, m = len(text), len(pattern)
    neighbours = _neighbour_indices(pattern)
    chosen = [0] * m

    def place(s: int, start: int) -> bool:
        if s == m:
            return True
        below, above, gap_needed = neighbours[s]
        low = chosen[below] if below is not None else 0
        high = chosen[above] if above is not None else n + 1
        # the text values between the neighbours must host every pattern value between them
        if high - low - 1 < gap_needed:
            return False
        last_start = n - (m - s)
        for pos in range(start, last_start + 1):
            value = text[pos]
            if low < value < high:
                budget.spend()
                chosen[s] = value
                if place(s + 1, pos + 1):
                    return True
        return False

    return place(0, 0)


def contains_pattern(
    text: PatternLike, pattern: PatternLike, budget: BudgetLike = None
) -> bool:
    """True iff some subsequence of ``text`` standardizes to ``pattern``.

    Patterns of length <= 3 use a quadratic scan; longer ones backtrack over
    pattern positions. ``budget`` caps node expansions and raises
    SearchBudgetExceeded when exhausted; pass one SearchBudget to several calls
    to make them share a single cap.
    """
    text = as_permutation(text)
    pattern = as_permutation(pattern)
    if len(pattern) == 0:
        raise InvalidInputError("pattern must be non-empty")
    return _search(text.entries, pattern.entries, budget)


def word_contains(
    word: Sequence[int], pattern: Permutation, budget: BudgetLike = None
) -> bool:
    """Like contains_pattern, for any word of distinct integers (no validation)."""
    word = tuple(word)
    ranks = {value: rank for rank, value in enumerate(sorted(word), start=1)}
    return _search(tuple(ranks[value] for value in word), pattern.entries, budget)


def _search(text: Tuple[int, ...], pattern: Tuple[int, ...], budget: BudgetLike) -> bool:
    if len(pattern) > len(text):
        return False
    if len(pattern) <= 3:
        return _contains_short(text, pattern)
    if not isinstance(budget, SearchBudget):
        budget = SearchBudget(budget)
    return _contains_backtracking(text, pattern, budget)


def avoids(text: PatternLike, pattern: PatternLike) -> bool:
    return not contains_pattern(text, pattern)


def avoider(pattern: PatternLike) -> ClassTest:
    """Class test for Av(pattern)."""
    pattern = as_permutation(pattern)

    def test(p: Permutation) -> bool:
        return not contains_pattern(p, pattern)

    test.__name__ = f"av_{''.join(str(x) for x in pattern)}"
    return test


def is_increasing(p: Permutation) -> bool:
    return all(a < b for a, b in zip(p.entries, p.entries[1:]))


def is_decreasing(p: Permutation) -> bool:
    return all(a > b for a, b in zip(p.entries, p.entries[1:]))


def is_odd_alternating(p: Permutation) -> bool:
    """pi_1 > pi_2 < pi_3 > ... of odd length; sizes 0 and 1 count."""
    n = len(p)
    if n <= 1:
        return True
    if n % 2 == 0:
        return False
    for i in range(n - 1):
        down = i % 2 == 0
        if (p[i] > p[i + 1]) != down:
            return False
    return True
