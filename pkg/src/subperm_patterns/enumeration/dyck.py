"""Dyck paths: ascent-restricted counting, block decomposition and the first-return construction."""

import logging
from collections import Counter
from typing import Iterator, List

from ..errors import InvalidInputError
from .models import CoefficientTable, DyckPath, Family

logger = logging.getLogger(__name__)


def dyck_avoiding_count(n: int, j: int) -> int:
    """Dyck paths of semilength n with no factor U^(j+2) D, i.e. every ascent of length <= j+1.

    DP over (height, length of the current ascent).
    """
    if n < 0:
        raise InvalidInputError(f"n must be non-negative, got {n}")
    if j < 1:
        raise InvalidInputError(f"j must be >= 1, got {j}")
    max_run = j + 1
    states: Counter = Counter({(0, 0): 1})
    for _ in range(2 * n):
        nxt: Counter = Counter()
        for (height, run), count in states.items():
            if run + 1 <= max_run and height < n:
                nxt[(height + 1, run + 1)] += count
            if height > 0:
                nxt[(height - 1, 0)] += count
        states = nxt
    return sum(count for (height, _), count in states.items() if height == 0)


def dyck_avoiding_table(j: int, n_max: int) -> CoefficientTable:
    return CoefficientTable(
        Family.DYCK_AVOID, j, [dyck_avoiding_count(n, j) for n in range(n_max + 1)]
    )


def dyck_paths(n: int) -> Iterator[DyckPath]:
    """All c_n Dyck paths of semilength n, U before D in lexicographic order."""
    if n < 0:
        raise InvalidInputError(f"n must be non-negative, got {n}")
    steps: List[str] = []

    def extend(ups: int, downs: int) -> Iterator[DyckPath]:
        if downs == n:
            yield DyckPath("".join(steps))
            return
        if ups < n:
            steps.append("U")
            yield from extend(ups + 1, downs)
            steps.pop()
        if downs < ups:
            steps.append("D")
            yield from extend(ups, downs + 1)
            steps.pop()

    yield from extend(0, 0)


def blocks(path: DyckPath) -> List[DyckPath]:
    """Minimal factors starting at height 0 and returning to it."""
    result = []
    height = 0
    start = 0
    for i, step in enumerate(path.steps):
        height += 1 if step == "U" else -1
        if height == 0:
            result.append(DyckPath(path.steps[start : i + 1]))
            start = i + 1
    return result


def dyck_children(path: DyckPath) -> List[DyckPath]:
    """First-return construction: for p = b_1...b_k, the children are
    U D p and U b_1...b_i D b_(i+1)...b_k for i = 1..k."""
    parts = [b.steps for b in blocks(path)]
    children = [DyckPath("UD" + path.steps)]
    for i in range(1, len(parts) + 1):
        children.append(DyckPath("U" + "".join(parts[:i]) + "D" + "".join(parts[i:])))
    return children


def max_ascent(path: DyckPath) -> int:
    """Length of the longest run of consecutive U steps."""
    best = run = 0
    for step in path.steps:
        run = run + 1 if step == "U" else 0
        best = max(best, run)
    return best


def motzkin(n: int) -> int:
    """M_n = M_(n-1) + sum_(i=0)^(n-2) M_i M_(n-2-i)."""
    return motzkin_table(n)[n]


def motzkin_table(n_max: int) -> CoefficientTable:
    if n_max < 0:
        raise InvalidInputError(f"n_max must be non-negative, got {n_max}")
    values = [1]
    for n in range(1, n_max + 1):
        values.append(values[n - 1] + sum(values[i] * values[n - 2 - i] for i in range(n - 1)))
    return CoefficientTable(Family.MOTZKIN, None, values)
