"""Counting 123-avoiders through the succession rule (l) -> (1),(2),...,(l+1).

The label of a 123-avoider is the ``l`` statistic of its two-line drawing; level n
of the tree holds Av_n(123), rooted at the empty permutation with label (0).
"""

import logging
import math
from collections import Counter
from typing import Dict, Tuple

from ..errors import InvalidInputError
from .models import CoefficientTable, Family, GeneratingTreeState
from .series import catalan

logger = logging.getLogger(__name__)


def m2_count(n: int) -> int:
    """a_n = 3 (2n-4)! / ((n-3)! n!): 123-avoiders whose largest increasing sub-permutation has size 2."""
    if n < 3:
        raise InvalidInputError(f"n must be >= 3, got {n}")
    numerator = 3 * math.factorial(2 * n - 4)
    denominator = math.factorial(n - 3) * math.factorial(n)
    return numerator // denominator


def increasing_split(n: int) -> Tuple[int, int]:
    """(a_n, b_n) with b_n = c_n - a_n."""
    a = m2_count(n)
    return a, catalan(n) - a


def level_counts(start_label: int, levels: int) -> Dict[int, int]:
    """Label multiset reached ``levels`` steps below a node labelled ``start_label``."""
    counts: Dict[int, int] = {start_label: 1}
    for _ in range(levels):
        nxt: Counter = Counter()
        for label, count in counts.items():
            for child in range(1, label + 2):
                nxt[child] += count
        counts = dict(nxt)
    return counts


def m2_count_by_generating_tree(n: int) -> int:
    """a_n as the number of descendants at size n of 2 3 1, whose label is (2).

    Appending on the right never changes the first three entries.
    """
    if n < 3:
        raise InvalidInputError(f"n must be >= 3, got {n}")
    return sum(level_counts(2, n - 3).values())


def m2_table(n_max: int) -> CoefficientTable:
    """a_0..a_(n_max); sizes below 3 have no 231 prefix and count 0."""
    if n_max < 0:
        raise InvalidInputError(f"n_max must be non-negative, got {n_max}")
    return CoefficientTable(
        Family.M2, None, [m2_count(n) if n >= 3 else 0 for n in range(n_max + 1)]
    )


def gamma_u_bounded_count(n: int, j: int) -> int:
    """|{pi in Av_n(123) : gamma_u(pi) <= j}|.

    Children with label <= the parent label extend a decreasing run on line U;
    such children may be taken at most j times in a row.
    """
    if n < 0:
        raise InvalidInputError(f"n must be non-negative, got {n}")
    if j < 1:
        raise InvalidInputError(f"j must be >= 1, got {j}")
    states: Counter = Counter({GeneratingTreeState(0, 0): 1})
    for _ in range(n):
        nxt: Counter = Counter()
        for state, count in states.items():
            for child in state.children(bound=j):
                nxt[child] += count
        states = nxt
    return sum(states.values())


def gamma_u_bounded_table(j: int, n_max: int) -> CoefficientTable:
    return CoefficientTable(
        Family.GAMMA_U_BOUNDED, j, [gamma_u_bounded_count(n, j) for n in range(n_max + 1)]
    )
