"""Seeded uniform permutations.

Stream-split rule: the samples of a run are cut into chunks of fixed size and
chunk c of a run at size n draws from PCG64 seeded by
``SeedSequence(seed, spawn_key=(n, c))``. The draws therefore depend only on
(seed, n, chunk size, sample index), never on the number of workers.
"""

import logging
from collections import Counter
from typing import Dict

import numpy as np

from ..errors import InvalidInputError
from ..permutations import Permutation, sub_permutation

logger = logging.getLogger(__name__)


def chunk_rng(seed: int, n: int, chunk_index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(n, chunk_index)))


def random_permutation(n: int, rng: np.random.Generator) -> Permutation:
    """Uniform over S_n (Fisher-Yates shuffle in numpy)."""
    if n < 1:
        raise InvalidInputError(f"n must be positive, got {n}")
    return Permutation(tuple(int(x) + 1 for x in rng.permutation(n)))


def chunk_sizes(samples: int, chunk_size: int):
    """Number of samples in each chunk, in chunk order."""
    full, rest = divmod(samples, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def sample_sub_permutation_sizes(
    n: int, k: int, samples: int, seed: int, chunk_size: int = 1000
) -> Dict[int, int]:
    """Empirical counts of |g(k)| over ``samples`` uniform permutations."""
    if not 1 <= k <= n:
        raise InvalidInputError(f"k={k} is outside 1..{n}")
    counts: Counter = Counter()
    for chunk_index, count in enumerate(chunk_sizes(samples, chunk_size)):
        rng = chunk_rng(seed, n, chunk_index)
        for _ in range(count):
            counts[sub_permutation(random_permutation(n, rng), k).size] += 1
    return dict(counts)
