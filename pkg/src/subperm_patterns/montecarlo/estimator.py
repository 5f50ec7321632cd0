"""Monte Carlo estimation of Prob(pattern in pi and pattern not in g(k))."""

import logging
from dataclasses import replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from ..errors import InvalidInputError, SearchBudgetExceeded
from ..permutations import SearchBudget, contains_pattern, sub_permutation
from .models import McConfig, McEstimate
from .sampler import chunk_rng, chunk_sizes, random_permutation

logger = logging.getLogger(__name__)

# k -> [hits, capped]
Tally = Dict[int, List[int]]

ESTIMATE_COLUMNS = ["n", "k", "estimate", "stderr", "samples", "capped", "seed"]


def _run_chunk(cfg: McConfig, chunk_index: int, count: int) -> Tally:
    """Tallies one chunk; every k is evaluated on the same sampled permutations.

    All searches on one sample draw on a single budget of ``cfg.work_cap`` expansions.
    """
    rng = chunk_rng(cfg.seed, cfg.n, chunk_index)
    tally: Tally = {k: [0, 0] for k in cfg.ks}
    for _ in range(count):
        p = random_permutation(cfg.n, rng)
        budget = SearchBudget(cfg.work_cap)
        try:
            present = contains_pattern(p, cfg.pattern, budget=budget)
        except SearchBudgetExceeded:
            for k in cfg.ks:
                tally[k][1] += 1
            continue
        if not present:
            continue
        for k in cfg.ks:
            # g(1) is the whole permutation
            if k == 1:
                continue
            try:
                if not contains_pattern(sub_permutation(p, k).pattern, cfg.pattern, budget=budget):
                    tally[k][0] += 1
            except SearchBudgetExceeded:
                tally[k][1] += 1
    return tally


def _tally(cfg: McConfig) -> Tally:
    sizes = chunk_sizes(cfg.samples, cfg.chunk_size)
    logger.info(
        f"Sampling {cfg.samples} permutations of size {cfg.n} for pattern {cfg.pattern} "
        f"in {len(sizes)} chunks on {cfg.workers} worker(s)"
    )
    if cfg.workers > 1:
        chunks = Parallel(n_jobs=cfg.workers, backend="loky")(
            delayed(_run_chunk)(cfg, index, count) for index, count in enumerate(sizes)
        )
    else:
        chunks = [_run_chunk(cfg, index, count) for index, count in enumerate(sizes)]

    total: Tally = {k: [0, 0] for k in cfg.ks}
    for chunk in chunks:
        for k, (hits, capped) in chunk.items():
            total[k][0] += hits
            total[k][1] += capped
    return total


def _estimates(cfg: McConfig, tally: Tally) -> List[McEstimate]:
    estimates = []
    for k in cfg.ks:
        hits, capped = tally[k]
        if capped:
            logger.warning(
                f"{capped} of {cfg.samples} samples hit the search cap at n={cfg.n}, k={k}"
            )
        estimates.append(
            McEstimate(
                n=cfg.n,
                k=k,
                pattern=str(cfg.pattern),
                hits=hits,
                samples=cfg.samples,
                capped=capped,
                seed=cfg.seed,
            )
        )
    return estimates


def estimate_not_avsk(cfg: McConfig) -> McEstimate:
    """Single-k estimate; ``cfg.ks`` must hold exactly one value."""
    if len(cfg.ks) != 1:
        raise InvalidInputError(f"estimate_not_avsk takes one k, got {len(cfg.ks)}")
    return _estimates(cfg, _tally(cfg))[0]


def sweep(cfg: McConfig) -> List[McEstimate]:
    """One estimate per k in ``cfg.ks``, all from the same samples."""
    return _estimates(cfg, _tally(cfg))


def sweep_grid(cfg: McConfig, ns: Iterable[int]) -> List[McEstimate]:
    """Repeats ``sweep`` at every n in ``ns``; ks larger than n are skipped."""
    estimates: List[McEstimate] = []
    for n in ns:
        ks = tuple(k for k in cfg.ks if k <= n)
        if not ks:
            logger.warning(f"No k fits n={n}; skipping")
            continue
        estimates.extend(sweep(replace(cfg, n=n, ks=ks)))
    return estimates


def estimates_frame(estimates: Sequence[McEstimate]) -> pd.DataFrame:
    return pd.DataFrame([e.to_dict() for e in estimates], columns=ESTIMATE_COLUMNS)


def linear_trend(ks: Sequence[float], values: Sequence[float]) -> Tuple[float, float]:
    """Least-squares (slope, intercept) of values against ks."""
    if len(ks) != len(values) or len(ks) < 2:
        raise InvalidInputError("linear_trend needs two or more paired points")
    slope, intercept = np.polyfit(np.asarray(ks, dtype=float), np.asarray(values, dtype=float), 1)
    return float(slope), float(intercept)


def within_standard_errors(
    estimate: McEstimate, expected: float, width: float = 3.0, floor: Optional[float] = None
) -> bool:
    """|estimate - expected| <= width * stderr (or ``floor`` when stderr is 0)."""
    radius = width * estimate.stderr
    if floor is not None:
        radius = max(radius, floor)
    return abs(estimate.estimate - expected) <= radius
