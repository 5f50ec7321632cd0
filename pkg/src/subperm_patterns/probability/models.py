"""
|g(k)| の分布・回避数列・確率推定値のデータモデル定義
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

import pandas as pd

from ..errors import InvalidInputError
from ..permutations import Permutation


class Provenance(Enum):
    """回避数列の各項の出どころ"""

    ORACLE = "oracle"
    USER_SUPPLIED = "user_supplied"
    CLOSED_FORM = "closed_form"


class EstimateMethod(Enum):
    EXACT = "exact"
    ASYMPTOTIC = "asymptotic"
    TRUNCATED_SERIES = "series"


class DenominatorMethod(Enum):
    """条件付き確率の分母 Prob(sigma not in g(k)) の近似方法

    MEAN_SIZE: g(k) をサイズ K = round(E|g(k)|) の一様乱数置換とみなす。
    SIZE_LAW: g(k) のサイズの厳密な分布で平均する。
    """

    MEAN_SIZE = "mean_size"
    SIZE_LAW = "size_law"


@dataclass(frozen=True)
class SizeDistribution:
    """サイズ n の一様乱数置換における |g(k)| の厳密な分布"""

    n: int
    k: int
    masses: Dict[int, Fraction]

    def total(self) -> Fraction:
        return sum(self.masses.values(), Fraction(0))

    def mean(self) -> Fraction:
        return sum((m * p for m, p in self.masses.items()), Fraction(0))

    def variance(self) -> Fraction:
        mean = self.mean()
        return sum((p * (m - mean) ** 2 for m, p in self.masses.items()), Fraction(0))

    def to_frame(self) -> pd.DataFrame:
        sizes = sorted(self.masses)
        return pd.DataFrame(
            {
                "m": sizes,
                "probability": [str(self.masses[m]) for m in sizes],
                "value": [float(self.masses[m]) for m in sizes],
            }
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "masses": {str(m): str(p) for m, p in sorted(self.masses.items())},
            "mean": str(self.mean()),
            "variance": str(self.variance()),
        }


@dataclass(frozen=True)
class AvoidanceSequence:
    """i = 1..len(terms) に対する |Av_i(pattern)|（各項に出どころのタグ付き）"""

    pattern: Permutation
    terms: Tuple[int, ...]
    provenance: Tuple[Provenance, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        object.__setattr__(self, "provenance", tuple(self.provenance))
        if len(self.terms) != len(self.provenance):
            raise InvalidInputError("every term needs a provenance tag")
        if self.terms and self.terms[0] != 1:
            raise InvalidInputError(f"|Av_1| must be 1, got {self.terms[0]}")
        for i, term in enumerate(self.terms, start=1):
            if term <= 0:
                raise InvalidInputError(f"|Av_{i}| must be positive, got {term}")

    def __len__(self) -> int:
        return len(self.terms)

    def term(self, i: int) -> int:
        """|Av_i| を返す（|Av_0| = 1）"""
        if i == 0:
            return 1
        if not 1 <= i <= len(self.terms):
            raise InvalidInputError(f"|Av_{i}({self.pattern})| is not available")
        return self.terms[i - 1]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pattern": str(self.pattern),
            "terms": [str(t) for t in self.terms],
            "provenance": [p.value for p in self.provenance],
        }


@dataclass(frozen=True)
class ProbEstimate:
    """確率の値と、それを求めた方法

    入力がすべて厳密なときは ``exact`` に有理数の値を持つ。
    値を [0, 1] に切り詰めたときは ``raw_value`` に元の値を残す。
    """

    value: float
    method: EstimateMethod
    truncation: Optional[int] = None
    exact: Optional[Fraction] = None
    raw_value: Optional[float] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise InvalidInputError(f"probability {self.value} is outside [0, 1]")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "method": self.method.value,
            "truncation": self.truncation,
            "exact": str(self.exact) if self.exact is not None else None,
            "raw_value": self.raw_value,
            "details": self.details,
        }

    def to_json(self) -> str:
        """JSON文字列に変換"""
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


@dataclass(frozen=True)
class Not213Cases:
    """213 を含み g(2) が 213 を避ける置換の、3 つの場合ごとの個数

    i) 2 が 1 の左にあり、値 m が存在する。ii) 2 が 1 の右にあり、g(m) が 213 を含む。
    iii) 2 が 1 の右にあり、g(m) は 213 を避け、m は g(2) の最大値より小さい。
    """

    n: int
    left_of_one: int
    right_containing: int
    right_avoiding: int

    @property
    def total(self) -> int:
        return self.left_of_one + self.right_containing + self.right_avoiding

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "case_i": self.left_of_one,
            "case_ii": self.right_containing,
            "case_iii": self.right_avoiding,
            "total": self.total,
        }
