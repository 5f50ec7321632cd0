"""The law of |g(k)| for a uniform random permutation."""

import logging
import math
from fractions import Fraction

from ..errors import InvalidInputError
from .models import SizeDistribution

logger = logging.getLogger(__name__)


def binom(a: int, b: int) -> int:
    """Binomial coefficient, 0 outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def subperm_size_law(n: int, k: int) -> SizeDistribution:
    """Prob(|g(k)| = m) = k m C(n-m-1, k-2) / (n C(n-1, k-1)) for m = 1..n-k+1.

    k = 1 is the point mass at n since g(1) is the whole permutation.
    """
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    if not 1 <= k <= n:
        raise InvalidInputError(f"k={k} is outside 1..{n}")
    if k == 1:
        return SizeDistribution(n, k, {n: Fraction(1)})
    denominator = n * binom(n - 1, k - 1)
    masses = {
        m: Fraction(k * m * binom(n - m - 1, k - 2), denominator)
        for m in range(1, n - k + 2)
    }
    return SizeDistribution(n, k, masses)


def expected_size(n: int, k: int) -> Fraction:
    """(2n - k + 1) / (k + 1)."""
    return Fraction(2 * n - k + 1, k + 1)


def size_variance(n: int, k: int) -> Fraction:
    """2 (n+1)(k-1)(n-k) / ((k+1)^2 (k+2))."""
    return Fraction(2 * (n + 1) * (k - 1) * (n - k), (k + 1) ** 2 * (k + 2))
