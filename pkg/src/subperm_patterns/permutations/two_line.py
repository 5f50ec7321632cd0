"""Two-line drawing of 123-avoiders and its generating tree."""

import logging
from typing import List

from ..errors import UnsupportedInputError
from .models import Permutation, TwoLineRepr
from .subperms import INCREASING_3
from .patterns import contains_pattern

logger = logging.getLogger(__name__)


def two_line(host: Permutation) -> TwoLineRepr:
    """Splits a 123-avoider into lines U and D.

    An entry lies on U iff it covers (is right of and above) some D-entry,
    which makes D the left-to-right minima.
    """
    if contains_pattern(host, INCREASING_3):
        raise UnsupportedInputError(f"{host} contains 123")

    upper = []
    running_min = None
    for x in host:
        if running_min is None or x < running_min:
            running_min = x
            upper.append(False)
        else:
            upper.append(True)
    upper = tuple(upper)

    lower_values = [x for x, up in zip(host, upper) if not up]
    upper_values = [x for x, up in zip(host, upper) if up]
    if upper_values:
        # U is decreasing, so its rightmost entry is its minimum
        rightmost_u = upper_values[-1]
        l = sum(1 for x in lower_values if x < rightmost_u)
    else:
        l = len(lower_values)

    v = 0
    if len(host):
        one = host.position(1)
        v = sum(1 for i in range(one + 1, len(host)) if upper[i])

    return TwoLineRepr(host=host, upper=upper, l=l, v=v)


def extend_right(host: Permutation) -> List[Permutation]:
    """All 123-avoiders of size n+1 whose first n entries standardize to ``host``.

    The new last entry x ranges over 1..l+1; entries >= x are shifted up by one.
    """
    label = two_line(host).l
    children = []
    for x in range(1, label + 2):
        shifted = tuple(e + 1 if e >= x else e for e in host)
        children.append(Permutation(shifted + (x,)))
    return children
