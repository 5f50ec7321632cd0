"""Probability that a pattern occurs in a permutation but not in its sub-permutation g(k)."""

import itertools
import logging
import math
from fractions import Fraction
from typing import Optional, Tuple

from ..config_manager import oracle_ceiling
from ..errors import InvalidInputError, ResourceLimitError, UndefinedConditionalError
from ..permutations import (
    Permutation,
    PatternLike,
    as_permutation,
    contains_pattern,
    sub_permutation,
)
from .constants import h_sigma_partial_sum
from .models import AvoidanceSequence, DenominatorMethod, EstimateMethod, ProbEstimate, Provenance
from .sequences import closed_form_sequence
from .size_law import binom, expected_size, subperm_size_law

logger = logging.getLogger(__name__)


def _clamped(value: Fraction, method: EstimateMethod, **kwargs) -> ProbEstimate:
    raw = float(value)
    if raw > 1.0:
        logger.warning(f"{method.value} estimate {raw:.6g} exceeds 1; reporting 1")
        return ProbEstimate(1.0, method, raw_value=raw, **kwargs)
    return ProbEstimate(raw, method, exact=value, **kwargs)


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    if not 1 <= k <= n:
        raise InvalidInputError(f"k={k} is outside 1..{n}")


def prob_not_avsk_asymptotic(seq: AvoidanceSequence, n: int, terms: int) -> ProbEstimate:
    """2 h_sigma / n^2, with h_sigma truncated after ``terms`` terms."""
    if n < 3:
        raise InvalidInputError(f"n must be >= 3, got {n}")
    h = h_sigma_partial_sum(seq, terms)
    return _clamped(2 * h / (n * n), EstimateMethod.ASYMPTOTIC, truncation=terms)


def not_avsk2_bounds(seq: AvoidanceSequence, n: int, terms: int) -> Tuple[Fraction, Fraction]:
    """Large-n lower and upper bounds for |S_n minus Av_n(sigma;2)|.

    Both use the limit h_sigma rather than its partial sums, so they only bracket
    the exact count once the tail of h_sigma is negligible.

    2(n-2)! (h_sigma - sum_(i=1)^(n-1-s) A_i/(i-1)! A_(n-i-1)/(n-i-1)!) and
    2(n-2)! (h_sigma + sum_(i=n-s)^(n-1) A_i/(i-1)! A_(n-i-1)/(n-i-1)!), s = |sigma|, A_0 = 1.
    """
    if n < 3:
        raise InvalidInputError(f"n must be >= 3, got {n}")
    if len(seq) < n - 1:
        raise InvalidInputError(f"bounds at n={n} need {n - 1} terms, only {len(seq)} available")
    s = len(seq.pattern)
    h = h_sigma_partial_sum(seq, terms)

    def product(i: int) -> Fraction:
        return Fraction(seq.term(i), math.factorial(i - 1)) * Fraction(
            seq.term(n - i - 1), math.factorial(n - i - 1)
        )

    inner = sum((product(i) for i in range(1, n - s)), Fraction(0))
    outer = sum((product(i) for i in range(max(1, n - s), n)), Fraction(0))
    scale = 2 * math.factorial(n - 2)
    return scale * (h - inner), scale * (h + outer)


def w_sigma(seq: AvoidanceSequence, n: int, k: int, terms: Optional[int] = None) -> Tuple[Fraction, int]:
    """sum_(m=1)^(min(n-k+1, T)) C(n-m-1, k-2)/C(n-2, k-2) |Av_m|/(m-1)!, and the T used."""
    _check_nk(n, k)
    if k < 2:
        raise InvalidInputError("w_sigma needs k >= 2")
    limit = n - k + 1
    available = len(seq) if terms is None else min(terms, len(seq))
    upper = min(limit, available)
    norm = binom(n - 2, k - 2)
    total = sum(
        (
            Fraction(binom(n - m - 1, k - 2) * seq.term(m), norm * math.factorial(m - 1))
            for m in range(1, upper + 1)
        ),
        Fraction(0),
    )
    return total, upper


def prob_not_avsk(
    seq: AvoidanceSequence, n: int, k: int, terms: Optional[int] = None
) -> ProbEstimate:
    """Prob(pi not in Av_n(sigma;k)) ~ k/(n C(n-1,k-1)) sum_m m C(n-m-1,k-2)/m! |Av_m(sigma)|.

    g(k) is treated as a uniform permutation whose size follows the exact law,
    and sigma is assumed present in pi. Sizes beyond the available terms are
    dropped; the number of terms used is reported as the truncation.
    """
    _check_nk(n, k)
    if k == 1:
        return ProbEstimate(0.0, EstimateMethod.EXACT, exact=Fraction(0))

    limit = n - k + 1
    available = len(seq) if terms is None else min(terms, len(seq))
    upper = min(limit, available)
    if upper < limit:
        logger.info(f"Series for n={n}, k={k} truncated after {upper} of {limit} sizes")

    scale = Fraction(k, n * binom(n - 1, k - 1))
    total = sum(
        (
            Fraction(m * binom(n - m - 1, k - 2) * seq.term(m), math.factorial(m))
            for m in range(1, upper + 1)
        ),
        Fraction(0),
    )
    value = scale * total
    w, _ = w_sigma(seq, n, k, terms)
    w_form = Fraction(k * (k - 1), n * (n - 1)) * w
    return _clamped(
        value,
        EstimateMethod.TRUNCATED_SERIES,
        truncation=upper,
        details={"w": float(w), "w_form": float(w_form), "sizes": limit},
    )


def _size_law_denominator(seq: AvoidanceSequence, n: int, k: int, available: int) -> Fraction:
    law = subperm_size_law(n, k)
    return sum(
        (p * Fraction(seq.term(m), math.factorial(m)) for m, p in law.masses.items() if m <= available),
        Fraction(0),
    )


def conditional_presence(
    seq: AvoidanceSequence,
    n: int,
    k: int,
    method: DenominatorMethod = DenominatorMethod.MEAN_SIZE,
    terms: Optional[int] = None,
) -> ProbEstimate:
    """Prob(sigma in pi | sigma not in g(k)) = Prob(pi not in Av(sigma;k)) / Prob(g(k) in Av(sigma)).

    With MEAN_SIZE, closed-form sequences are extended to K as needed. Other
    sequences shorter than K fall back to the SIZE_LAW denominator, and
    ``details["fallback"]`` says so.
    """
    _check_nk(n, k)
    if k == 1:
        return ProbEstimate(0.0, EstimateMethod.EXACT, exact=Fraction(0))
    numerator = prob_not_avsk(seq, n, k, terms)
    if numerator.exact is None:
        # the numerator itself was clamped
        numerator_value = Fraction(numerator.raw_value)
    else:
        numerator_value = numerator.exact

    available = len(seq) if terms is None else min(terms, len(seq))
    details = {"denominator_method": method.value}
    if method is DenominatorMethod.MEAN_SIZE:
        size = round(expected_size(n, k))
        details["K"] = size
        if size > len(seq) and set(seq.provenance) == {Provenance.CLOSED_FORM}:
            seq = closed_form_sequence(seq.pattern, size)
        if size <= len(seq):
            denominator = Fraction(seq.term(size), math.factorial(size))
        else:
            logger.warning(
                f"|Av_{size}({seq.pattern})| is not available; "
                f"using the size law for the denominator at n={n}, k={k}"
            )
            details["denominator_method"] = DenominatorMethod.SIZE_LAW.value
            details["fallback"] = f"|Av_{size}| unavailable, {len(seq)} terms known"
            denominator = _size_law_denominator(seq, n, k, available)
    else:
        denominator = _size_law_denominator(seq, n, k, available)
    if denominator == 0:
        raise UndefinedConditionalError(f"Prob(g({k}) avoids {seq.pattern}) is 0 at n={n}")
    details["denominator"] = float(denominator)
    return _clamped(
        numerator_value / denominator,
        EstimateMethod.TRUNCATED_SERIES,
        truncation=numerator.truncation,
        details=details,
    )


def exhaustive_not_avsk_count(
    pattern: PatternLike, n: int, k: int, ceiling: Optional[int] = None
) -> int:
    """#{pi in S_n : pattern in pi and pattern not in g(k)} by exhaustion."""
    _check_nk(n, k)
    limit = oracle_ceiling() if ceiling is None else ceiling
    if n > limit:
        raise ResourceLimitError(f"size {n} exceeds the oracle ceiling {limit}")
    pattern = as_permutation(pattern)
    count = 0
    for entries in itertools.permutations(range(1, n + 1)):
        p = Permutation(entries)
        if contains_pattern(p, pattern) and not contains_pattern(sub_permutation(p, k).pattern, pattern):
            count += 1
    return count


def exhaustive_not_avsk(
    pattern: PatternLike, n: int, k: int, ceiling: Optional[int] = None
) -> Fraction:
    """Exact Prob(pi not in Av_n(pattern;k)) for small n."""
    return Fraction(exhaustive_not_avsk_count(pattern, n, k, ceiling), math.factorial(n))
