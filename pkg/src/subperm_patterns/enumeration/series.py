"""Exact coefficient tables for the Catalan family and its restrictions.

Every table is an integer recurrence read off a functional equation. The two
quadratic families P_j and C - L_j both have the shape
``F = (1 - sqrt(Q(x))) / (2x)`` for a sparse polynomial Q, which also gives
them a linear recurrence (see ``radical_coefficients``).
"""

import logging
import math
from typing import Dict, List, Mapping

import mpmath as mp

from ..errors import InvalidInputError, NumericFailureError
from .models import CoefficientTable, Family, RecurrenceMethod

logger = logging.getLogger(__name__)


def catalan(n: int) -> int:
    """c_n = binom(2n, n) / (n + 1)."""
    if n < 0:
        raise InvalidInputError(f"n must be non-negative, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def catalan_list(n_max: int) -> List[int]:
    values = [1]
    for n in range(n_max):
        values.append(values[-1] * 2 * (2 * n + 1) // (n + 2))
    return values[: n_max + 1]


def catalan_table(n_max: int) -> CoefficientTable:
    return CoefficientTable(Family.CATALAN, None, catalan_list(n_max))


def catalan_asymptotic(n: int) -> mp.mpf:
    """4^n / sqrt(pi n^3)."""
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    return mp.power(4, n) / mp.sqrt(mp.pi * mp.mpf(n) ** 3)


def caterpillar_count(j: int) -> int:
    """Caterpillars with j internal nodes: one free leaf side per non-bottom spine node."""
    if j < 1:
        raise InvalidInputError(f"j must be positive, got {j}")
    return 2 ** (j - 1)


def family_polynomial(family: Family, index: int) -> Dict[int, int]:
    """Sparse radicand Q with F = (1 - sqrt(Q)) / (2x).

    PJ(j): 1 - 4x + 2^(j+2) x^(j+2).
    LJ_COMPLEMENT(m): 1 - 4x + 4 c_m x^(2m+2), the complement C - L_(2m+1).
    CATALAN: 1 - 4x.
    """
    if family is Family.CATALAN:
        return {0: 1, 1: -4}
    if family is Family.PJ:
        if index < 1:
            raise InvalidInputError(f"j must be >= 1, got {index}")
        return {0: 1, 1: -4, index + 2: 2 ** (index + 2)}
    if family is Family.LJ_COMPLEMENT:
        if index < 0:
            raise InvalidInputError(f"m must be >= 0, got {index}")
        return {0: 1, 1: -4, 2 * index + 2: 4 * catalan(index)}
    raise InvalidInputError(f"{family.value} has no radical form")


def radical_coefficients(poly: Mapping[int, int], n_max: int) -> List[int]:
    """Coefficients 0..n_max of (1 - sqrt(Q(x))) / (2x) for Q with Q(0) = 1.

    f = sqrt(Q) satisfies 2 Q f' = Q' f, i.e.
    2 (n+1) f_(n+1) = -sum_(i>=1) q_i (2n + 2 - 3i) f_(n+1-i),
    and the wanted coefficient is -f_(n+1) / 2.
    """
    if poly.get(0) != 1:
        raise InvalidInputError("the radicand must have constant term 1")
    terms = sorted((i, q) for i, q in poly.items() if i >= 1 and q != 0)
    f = [1]
    for n in range(n_max + 1):
        total = 0
        for i, q in terms:
            if i > n + 1:
                break
            total += q * (2 * n + 2 - 3 * i) * f[n + 1 - i]
        numerator = -total
        if numerator % (2 * (n + 1)):
            raise NumericFailureError(f"square-root recurrence is not integral at n={n + 1}")
        f.append(numerator // (2 * (n + 1)))
    coefficients = []
    for n in range(n_max + 1):
        if f[n + 1] % 2:
            raise NumericFailureError(f"odd square-root coefficient at n={n + 1}")
        coefficients.append(-f[n + 1] // 2)
    return coefficients


def pj_coefficients(
    j: int, n_max: int, method: RecurrenceMethod = RecurrenceMethod.CONVOLUTION
) -> CoefficientTable:
    """v_(j,0..n_max): 312-avoiders whose largest Av(213) sub-permutation has size <= j.

    v_0 = 1, v_n = sum_(a<n) v_a v_(n-1-a) - 2^j [n = j+1].
    """
    if j < 1:
        raise InvalidInputError(f"j must be >= 1, got {j}")
    if n_max < 0:
        raise InvalidInputError(f"n_max must be non-negative, got {n_max}")
    if method is RecurrenceMethod.RADICAL:
        return CoefficientTable(
            Family.PJ, j, radical_coefficients(family_polynomial(Family.PJ, j), n_max)
        )
    v = [1]
    for n in range(1, n_max + 1):
        value = sum(v[a] * v[n - 1 - a] for a in range(n))
        if n == j + 1:
            value -= 2 ** j
        v.append(value)
    return CoefficientTable(Family.PJ, j, v)


def no_size_j_caterpillar(j: int, n_max: int) -> CoefficientTable:
    """312-avoiders with no Av(213) sub-permutation of size exactly j; the same table as P_(j-1)."""
    if j < 2:
        raise InvalidInputError(f"j must be >= 2, got {j}")
    return pj_coefficients(j - 1, n_max)


def lj_coefficients(m: int, n_max: int) -> CoefficientTable:
    """l_n: 312-avoiders with an odd alternating sub-permutation of size exactly j = 2m+1.

    l_0 = 0, l_n = c_m [n = j] + 2 sum_a c_a l_(n-1-a) - sum_a l_a l_(n-1-a).
    """
    if m < 0:
        raise InvalidInputError(f"m must be >= 0, got {m}")
    j = 2 * m + 1
    c = catalan_list(n_max)
    c_m = catalan(m)
    l = [0]
    for n in range(1, n_max + 1):
        value = c_m if n == j else 0
        value += 2 * sum(c[a] * l[n - 1 - a] for a in range(n))
        value -= sum(l[a] * l[n - 1 - a] for a in range(n))
        l.append(value)
    return CoefficientTable(Family.LJ, m, l)


def lj_complement(
    m: int, n_max: int, method: RecurrenceMethod = RecurrenceMethod.CONVOLUTION
) -> CoefficientTable:
    """c_n - l_n: 312-avoiders without an odd alternating sub-permutation of size 2m+1."""
    if method is RecurrenceMethod.RADICAL:
        return CoefficientTable(
            Family.LJ_COMPLEMENT,
            m,
            radical_coefficients(family_polynomial(Family.LJ_COMPLEMENT, m), n_max),
        )
    c = catalan_list(n_max)
    l = lj_coefficients(m, n_max)
    return CoefficientTable(Family.LJ_COMPLEMENT, m, [c[n] - l[n] for n in range(n_max + 1)])
