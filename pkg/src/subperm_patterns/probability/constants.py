"""The series constants h and h_sigma."""

import logging
import math
from fractions import Fraction

from ..enumeration import catalan_list
from ..errors import InvalidInputError
from .models import AvoidanceSequence

logger = logging.getLogger(__name__)


def h_partial_sum(terms: int) -> Fraction:
    """sum_(i=1)^terms c_i / (i-1)!, exactly."""
    if terms < 1:
        raise InvalidInputError(f"terms must be >= 1, got {terms}")
    c = catalan_list(terms)
    return sum((Fraction(c[i], math.factorial(i - 1)) for i in range(1, terms + 1)), Fraction(0))


def h_constant(terms: int = 60) -> float:
    """h = lim sum c_i / (i-1)! = 11.75330..."""
    return float(h_partial_sum(terms))


def h_sigma_partial_sum(seq: AvoidanceSequence, terms: int) -> Fraction:
    if terms < 1:
        raise InvalidInputError(f"terms must be >= 1, got {terms}")
    if len(seq) < terms:
        raise InvalidInputError(
            f"h_sigma needs {terms} terms of |Av_i({seq.pattern})|, only {len(seq)} available"
        )
    return sum(
        (Fraction(seq.term(i), math.factorial(i - 1)) for i in range(1, terms + 1)),
        Fraction(0),
    )


def h_sigma(seq: AvoidanceSequence, terms: int) -> float:
    """sum_(i=1)^terms |Av_i(sigma)| / (i-1)!."""
    return float(h_sigma_partial_sum(seq, terms))
