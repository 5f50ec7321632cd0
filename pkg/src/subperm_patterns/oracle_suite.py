"""Cross-checks of the closed forms, recurrences and bijections against exhaustive enumeration."""

import json
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional

import pandas as pd

from .config_manager import oracle_ceiling
from .enumeration import (
    catalan,
    dyck_avoiding_count,
    gamma_u_bounded_count,
    lj_coefficients,
    m2_count,
    m2_count_by_generating_tree,
    motzkin,
    pj_coefficients,
)
from .enumeration import oracles
from .errors import InvalidInputError, ResourceLimitError
from .permutations import (
    Permutation,
    all_sub_permutations,
    avoids,
    enumerate_class,
    is_odd_alternating,
    sub_permutation,
)
from .probability import not_av_213_2_cases, not_av_213_2_count, subperm_size_law
from .trees import (
    all_planar_binary_trees,
    descendant_count,
    has_strictly_binary_shape,
    is_caterpillar,
    phi,
    phi_inverse,
    psi,
    psi_inverse,
    subtree_at,
)

logger = logging.getLogger(__name__)

SUITES = ("bijections", "tables", "probability")

# table oracles use these parameter ranges
PJ_INDICES = range(1, 6)
LJ_INDICES = range(0, 3)
GAMMA_U_BOUNDS = range(1, 5)


@dataclass
class OracleCheck:
    suite: str
    name: str
    n: int
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "name": self.name,
            "n": self.n,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class OracleReport:
    ceiling: int
    suites: List[str]
    checks: List[OracleCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[OracleCheck]:
        return [check for check in self.checks if not check.passed]

    def counts(self) -> Dict[str, Dict[str, int]]:
        """Per-suite pass and total counts."""
        result = {suite: {"passed": 0, "total": 0} for suite in self.suites}
        for check in self.checks:
            result[check.suite]["total"] += 1
            result[check.suite]["passed"] += int(check.passed)
        return result

    def summary(self) -> str:
        status = "OK" if self.passed else "FAILED"
        parts = [f"{suite} {c['passed']}/{c['total']}" for suite, c in self.counts().items()]
        lines = [f"{status} (n <= {self.ceiling}): " + ", ".join(parts)]
        for check in self.failures:
            lines.append(f"  FAIL {check.suite}/{check.name} n={check.n}: {check.detail}")
        return "\n".join(lines)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [check.to_dict() for check in self.checks],
            columns=["suite", "name", "n", "passed", "detail"],
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ceiling": self.ceiling,
            "passed": self.passed,
            "counts": self.counts(),
            "checks": [check.to_dict() for check in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


def _check(suite: str, name: str, n: int, expected: Any, found: Any) -> OracleCheck:
    if expected == found:
        return OracleCheck(suite, name, n, True)
    return OracleCheck(suite, name, n, False, f"expected {expected}, found {found}")


# --- bijections ---


def _phi_checks(n: int, ceiling: int) -> List[OracleCheck]:
    round_trip = 0
    descendants = 0
    subtrees = 0
    total = 0
    for p in enumerate_class(n, ceiling=ceiling):
        t = phi_inverse(p)
        total += 1
        round_trip += phi(t) == p
        for k in range(1, n + 1):
            record = sub_permutation(p, k)
            descendants += descendant_count(t, k) == record.size
            subtrees += phi(subtree_at(t, k)) == record.pattern
    return [
        _check("bijections", "phi_round_trip", n, total, round_trip),
        _check("bijections", "descendants_are_sub_permutation_sizes", n, total * n, descendants),
        _check("bijections", "subtrees_map_to_sub_permutations", n, total * n, subtrees),
    ]


def _psi_checks(n: int, ceiling: int) -> List[OracleCheck]:
    avoiders = list(enumerate_class(n, "312", ceiling))
    round_trip = sum(psi(psi_inverse(p)) == p for p in avoiders)
    trees = all_planar_binary_trees(n)
    images = {psi(t) for t in trees}
    caterpillars = sum(is_caterpillar(t) == avoids(psi(t), "213") for t in trees)
    strict = sum(
        has_strictly_binary_shape(t) == (n % 2 == 1 and is_odd_alternating(psi(t))) for t in trees
    )
    return [
        _check("bijections", "psi_round_trip", n, len(avoiders), round_trip),
        _check("bijections", "psi_image_is_av312", n, set(avoiders), images),
        _check("bijections", "av312_is_catalan", n, catalan(n), len(avoiders)),
        _check("bijections", "caterpillar_iff_avoids_213", n, len(trees), caterpillars),
        _check("bijections", "strictly_binary_iff_odd_alternating", n, len(trees), strict),
    ]


def bijection_checks(ceiling: int) -> List[OracleCheck]:
    checks = []
    for n in range(1, ceiling + 1):
        logger.info(f"Bijection checks at n={n}")
        checks.extend(_phi_checks(n, ceiling))
        checks.extend(_psi_checks(n, ceiling))
    return checks


# --- coefficient tables ---


def _odd_alternating_sizes(p: Permutation) -> set:
    return {r.size for r in all_sub_permutations(p) if r.size % 2 == 1 and is_odd_alternating(r.pattern)}


def table_checks(ceiling: int) -> List[OracleCheck]:
    checks = []
    pj_tables = {j: pj_coefficients(j, ceiling) for j in PJ_INDICES}
    lj_tables = {m: lj_coefficients(m, ceiling) for m in LJ_INDICES}
    for n in range(1, ceiling + 1):
        logger.info(f"Table checks at n={n}")
        distribution = oracles.gamma_distribution(n, ceiling)
        for j in PJ_INDICES:
            found = sum(count for value, count in distribution.items() if value <= j)
            checks.append(_check("tables", f"pj({j})", n, pj_tables[j][n], found))

        sizes = Counter()
        for p in enumerate_class(n, "312", ceiling):
            for size in _odd_alternating_sizes(p):
                sizes[size] += 1
        for m in LJ_INDICES:
            checks.append(_check("tables", f"lj({m})", n, lj_tables[m][n], sizes[2 * m + 1]))

        gamma_u = oracles.gamma_u_distribution(n, ceiling)
        for j in GAMMA_U_BOUNDS:
            found = sum(count for value, count in gamma_u.items() if value <= j)
            checks.append(_check("tables", f"gamma_u_bounded({j})", n, gamma_u_bounded_count(n, j), found))
            checks.append(_check("tables", f"dyck_avoiding({j})", n, dyck_avoiding_count(n, j), found))
        checks.append(_check("tables", "motzkin", n, motzkin(n), gamma_u_bounded_count(n, 1)))

        if n >= 3:
            increasing = oracles.largest_increasing_distribution(n, ceiling)
            checks.append(_check("tables", "m2", n, m2_count(n), oracles.m2_oracle(n, ceiling)))
            checks.append(_check("tables", "m2_largest_increasing", n, m2_count(n), increasing.get(2, 0)))
            checks.append(_check("tables", "m2_generating_tree", n, m2_count(n), m2_count_by_generating_tree(n)))
    return checks


# --- probability ---


def probability_checks(ceiling: int) -> List[OracleCheck]:
    checks = []
    for n in range(1, ceiling + 1):
        logger.info(f"Probability checks at n={n}")
        sizes = {k: Counter() for k in range(1, n + 1)}
        not_av = 0
        for p in enumerate_class(n, ceiling=ceiling):
            for k in range(1, n + 1):
                sizes[k][sub_permutation(p, k).size] += 1
            if n >= 3 and not avoids(p, "213") and avoids(sub_permutation(p, 2).pattern, "213"):
                not_av += 1
        total = math.factorial(n)
        for k in range(1, n + 1):
            law = subperm_size_law(n, k)
            expected = {m: mass * total for m, mass in law.masses.items() if mass}
            checks.append(_check("probability", f"size_law(k={k})", n, expected, dict(sizes[k])))
        if n >= 3:
            checks.append(_check("probability", "not_av_213_2", n, not_av_213_2_count(n), not_av))
            checks.append(
                _check("probability", "not_av_213_2_cases", n, not_av_213_2_count(n), not_av_213_2_cases(n).total)
            )
    return checks


SUITE_RUNNERS: Dict[str, Callable[[int], List[OracleCheck]]] = {
    "bijections": bijection_checks,
    "tables": table_checks,
    "probability": probability_checks,
}


def run_oracle_suite(
    ceiling: int,
    suites: Iterable[str] = SUITES,
    config: Optional[Dict[str, Any]] = None,
) -> OracleReport:
    """Runs the named suites for every size 1..ceiling.

    ``ceiling`` 0 gives an empty, passing report. A ceiling above the configured
    oracle ceiling raises ResourceLimitError before any work is done.
    """
    suites = list(suites)
    unknown = [s for s in suites if s not in SUITE_RUNNERS]
    if unknown:
        raise InvalidInputError(f"unknown oracle suite(s): {', '.join(unknown)}")
    if ceiling < 0:
        raise InvalidInputError(f"ceiling must be non-negative, got {ceiling}")
    limit = oracle_ceiling(config)
    if ceiling > limit:
        raise ResourceLimitError(f"ceiling {ceiling} exceeds the configured oracle ceiling {limit}")

    report = OracleReport(ceiling, suites)
    for suite in suites:
        logger.info(f"Running oracle suite '{suite}' up to n={ceiling}")
        report.checks.extend(SUITE_RUNNERS[suite](ceiling))
    return report
