"""
モンテカルロ推定用のデータモデル定義
"""

import json
import math
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from ..config_manager import get_setting
from ..errors import InvalidInputError
from ..permutations import Permutation, PatternLike, as_permutation


@dataclass(frozen=True)
class McConfig:
    """1 回のサンプリング実験の設定

    サイズ ``n`` の一様乱数置換を ``samples`` 個生成し、``ks`` のすべての k を同じ標本で評価する。
    ``work_cap`` は 1 標本あたりのパターン検索の展開ノード数の上限。
    """

    n: int
    pattern: Permutation
    ks: Tuple[int, ...]
    samples: int
    seed: int
    workers: int = 1
    chunk_size: int = 1000
    work_cap: Optional[int] = 10_000_000
    max_pattern_length: int = 5

    def __post_init__(self):
        object.__setattr__(self, "pattern", as_permutation(self.pattern))
        object.__setattr__(self, "ks", tuple(self.ks))
        if self.n < 1:
            raise InvalidInputError(f"n must be positive, got {self.n}")
        if self.samples < 1:
            raise InvalidInputError(f"samples must be positive, got {self.samples}")
        if not self.ks:
            raise InvalidInputError("at least one k is required")
        for k in self.ks:
            if not 1 <= k <= self.n:
                raise InvalidInputError(f"k={k} is outside 1..{self.n}")
        if not 1 <= len(self.pattern) <= self.max_pattern_length:
            raise InvalidInputError(
                f"pattern length {len(self.pattern)} is outside 1..{self.max_pattern_length}"
            )
        if self.workers < 1:
            raise InvalidInputError(f"workers must be positive, got {self.workers}")
        if self.chunk_size < 1:
            raise InvalidInputError(f"chunk_size must be positive, got {self.chunk_size}")

    @classmethod
    def from_config(
        cls,
        config: Dict[str, Any],
        n: int,
        pattern: PatternLike,
        ks: Sequence[int],
        **overrides: Any,
    ) -> "McConfig":
        """設定ファイルの ``montecarlo`` セクションから未指定の項目を補う（``None`` の上書きは無視）"""
        values = {
            "samples": get_setting(config, "montecarlo.samples", 100_000),
            "seed": get_setting(config, "montecarlo.seed", 20240601),
            "workers": get_setting(config, "montecarlo.workers", 1),
            "chunk_size": get_setting(config, "montecarlo.chunk_size", 1000),
            "work_cap": get_setting(config, "montecarlo.work_cap", 10_000_000),
            "max_pattern_length": get_setting(config, "montecarlo.max_pattern_length", 5),
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(n=n, pattern=as_permutation(pattern), ks=tuple(ks), **values)

    @property
    def chunk_count(self) -> int:
        return math.ceil(self.samples / self.chunk_size)


@dataclass(frozen=True)
class McEstimate:
    """パターンを含み、かつ g(k) がパターンを避ける標本の割合

    検索上限に達した標本 (capped) は推定値から除き、件数だけを別に報告する。
    """

    n: int
    k: int
    pattern: str
    hits: int
    samples: int
    capped: int
    seed: int

    @property
    def effective_samples(self) -> int:
        """上限に達した標本を除いた標本数"""
        return self.samples - self.capped

    @property
    def estimate(self) -> float:
        if self.effective_samples == 0:
            return 0.0
        return self.hits / self.effective_samples

    @property
    def stderr(self) -> float:
        if self.effective_samples == 0:
            return 0.0
        p = self.estimate
        return math.sqrt(p * (1.0 - p) / self.effective_samples)

    def to_dict(self) -> Dict[str, Any]:
        """辞書形式に変換"""
        return {
            "n": self.n,
            "k": self.k,
            "pattern": self.pattern,
            "estimate": self.estimate,
            "stderr": self.stderr,
            "samples": self.samples,
            "capped": self.capped,
            "seed": self.seed,
        }

    def to_json(self) -> str:
        """JSON文字列に変換"""
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)
