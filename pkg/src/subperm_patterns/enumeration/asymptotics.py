"""Dominant roots, coefficient asymptotics and the expected size of the largest caterpillar."""

import logging
import math
from fractions import Fraction
from typing import Dict, Iterable, Optional

import mpmath as mp
import pandas as pd

from ..errors import InvalidInputError, NumericFailureError
from .models import AsymptoticParams, Family, RecurrenceMethod
from .series import (
    catalan,
    family_polynomial,
    lj_complement,
    pj_coefficients,
    radical_coefficients,
)

logger = logging.getLogger(__name__)

DEFAULT_PRECISION_BITS = 128
DEFAULT_BRACKET_WIDTH = 1e-20
RESIDUAL_TOLERANCE = 1e-12
NEWTON_STEPS = 6

_ROOT_FAMILIES = (Family.CATALAN, Family.PJ, Family.LJ_COMPLEMENT)


def _evaluate(poly: Dict[int, int], x):
    return mp.fsum(q * mp.power(x, i) for i, q in poly.items())


def _derivative(poly: Dict[int, int], x):
    return mp.fsum(i * q * mp.power(x, i - 1) for i, q in poly.items() if i >= 1)


def dominant_root(
    family: Family,
    index: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    bracket_width: float = DEFAULT_BRACKET_WIDTH,
) -> AsymptoticParams:
    """Smallest positive root of the family's radicand.

    PJ(j) gives rho_j; LJ_COMPLEMENT(m) gives a_m (and b_m is PJ(2m)). The
    radicand is convex on x > 0 and positive on (0, 1/4], so the root is the
    unique sign change in (1/4, 2/5): bisection down to ``bracket_width``, then
    a Newton polish.
    """
    if family not in _ROOT_FAMILIES:
        raise InvalidInputError(f"{family.value} has no dominant-root form")
    if family is not Family.CATALAN and index < 1:
        raise InvalidInputError(f"index must be >= 1, got {index}")

    poly = family_polynomial(family, index)
    with mp.workprec(precision_bits):
        if family is Family.CATALAN:
            root = mp.mpf(1) / 4
            return AsymptoticParams(family, index, root, 1 / root, 0.0)

        lo, hi = mp.mpf(1) / 4, mp.mpf(2) / 5
        if not (_evaluate(poly, lo) > 0 > _evaluate(poly, hi)):
            raise NumericFailureError(
                f"no sign change of the {family.value}({index}) radicand on (1/4, 2/5)"
            )
        width = mp.mpf(bracket_width)
        while hi - lo > width:
            mid = (lo + hi) / 2
            if _evaluate(poly, mid) > 0:
                lo = mid
            else:
                hi = mid

        root = (lo + hi) / 2
        for _ in range(NEWTON_STEPS):
            slope = _derivative(poly, root)
            if slope == 0:
                break
            candidate = root - _evaluate(poly, root) / slope
            if not (mp.mpf(1) / 4 < candidate < mp.mpf(2) / 5):
                break
            root = candidate

        residual = float(abs(_evaluate(poly, root)))
        if residual >= RESIDUAL_TOLERANCE:
            raise NumericFailureError(
                f"{family.value}({index}) root residual {residual:.3e} is too large"
            )
        logger.debug(f"{family.value}({index}) root {mp.nstr(root, 25)}, residual {residual:.3e}")
        return AsymptoticParams(family, index, +root, 1 / root, residual)


def rho_approximation(j: int) -> mp.mpf:
    """Leading terms 1/4 + 2^-(j+4) of rho_j."""
    return mp.mpf(1) / 4 + mp.power(2, -(j + 4))


def root_ratio(m: int, precision_bits: int = DEFAULT_PRECISION_BITS) -> mp.mpf:
    """a_m / b_m from the computed roots."""
    a = dominant_root(Family.LJ_COMPLEMENT, m, precision_bits).root
    b = dominant_root(Family.PJ, 2 * m, precision_bits).root
    with mp.workprec(precision_bits):
        return a / b


def root_ratio_approximation(m: int) -> mp.mpf:
    """(-1 + 4^-(m+1)) / (-1 + c_m 4^-(2m+1)), the first-order estimate of a_m / b_m."""
    numerator = -1 + mp.power(4, -(m + 1))
    denominator = -1 + catalan(m) * mp.power(4, -(2 * m + 1))
    return numerator / denominator


def asymptotic_coefficient(
    family: Family,
    index: int,
    n: int,
    params: Optional[AsymptoticParams] = None,
    precision_bits: int = DEFAULT_PRECISION_BITS,
) -> mp.mpf:
    """(1/4) sqrt(-rho Q'(rho) / (pi n^3)) rho^-(n+1), the square-root singularity estimate
    of the n-th coefficient of (1 - sqrt(Q)) / (2x)."""
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    if params is None:
        params = dominant_root(family, index, precision_bits)
    poly = family_polynomial(family, index)
    with mp.workprec(precision_bits):
        rho = params.root
        radicand = -rho * _derivative(poly, rho)
        return mp.sqrt(radicand / (mp.pi * mp.mpf(n) ** 3)) / 4 * mp.power(rho, -(n + 1))


def ratio_estimate(m: int, n: int, k_m: float = 1.0) -> mp.mpf:
    """k_m (a_m / b_m)^(n+1) with the first-order root ratio."""
    return k_m * mp.power(root_ratio_approximation(m), n + 1)


def ratio_table(m: int, ns: Iterable[int], k_m: float = 1.0) -> pd.DataFrame:
    """Exact v_(2m,n) / (c_n - l_n) next to its estimate k_m (a_m / b_m)^(n+1)."""
    if m < 1:
        raise InvalidInputError(f"m must be >= 1, got {m}")
    ns = sorted(set(ns))
    if not ns or ns[0] < 1:
        raise InvalidInputError("ratio_table needs sizes n >= 1")
    n_max = ns[-1]
    logger.info(f"Computing exact tables for m={m} up to n={n_max}")
    bounded = pj_coefficients(2 * m, n_max, RecurrenceMethod.RADICAL)
    complement = lj_complement(m, n_max, RecurrenceMethod.RADICAL)
    rows = []
    for n in ns:
        rows.append(
            {
                "n": n,
                "exact_ratio": bounded[n] / complement[n],
                "estimate": float(ratio_estimate(m, n, k_m)),
            }
        )
    return pd.DataFrame(rows, columns=["n", "exact_ratio", "estimate"])


def expected_gamma(n: int) -> Fraction:
    """Exact mean, over Av_n(312), of the largest Av(213) sub-permutation size.

    E = 1 + sum_(j=1)^(n-1) (c_n - v_(j,n)) / c_n.
    """
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    c_n = catalan(n)
    total = c_n
    for j in range(1, n):
        v = radical_coefficients(family_polynomial(Family.PJ, j), n)[n]
        total += c_n - v
    return Fraction(total, c_n)


def expected_gamma_table(ns: Iterable[int]) -> pd.DataFrame:
    """expected_gamma(n) next to log2(n)."""
    rows = []
    for n in ns:
        value = expected_gamma(n)
        log2_n = math.log2(n)
        rows.append(
            {
                "n": n,
                "expected_gamma": float(value),
                "log2_n": log2_n,
                "ratio": float(value) / log2_n if n > 1 else math.nan,
            }
        )
    return pd.DataFrame(rows, columns=["n", "expected_gamma", "log2_n", "ratio"])
