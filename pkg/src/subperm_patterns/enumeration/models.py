"""Data models for coefficient tables, asymptotic parameters, generating trees and Dyck paths."""

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple

import pandas as pd

from ..errors import InvalidInputError, NumericFailureError


class Family(Enum):
    """Named generating functions with exact coefficient tables."""

    CATALAN = "catalan"
    PJ = "pj"
    LJ = "lj"
    LJ_COMPLEMENT = "lj_complement"
    M2 = "m2"
    DYCK_AVOID = "dyck_avoid"
    GAMMA_U_BOUNDED = "gamma_u_bounded"
    MOTZKIN = "motzkin"


class RecurrenceMethod(Enum):
    """How a table is computed.

    CONVOLUTION: quadratic recurrence read off the functional equation.
    RADICAL: linear recurrence for the square root, for long tables.
    """

    CONVOLUTION = "convolution"
    RADICAL = "radical"


@dataclass(frozen=True)
class CoefficientTable:
    """Exact coefficients a_0..a_{n_max} of a generating function."""

    family: Family
    index: Optional[int]
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        negative = [n for n, a in enumerate(self.coefficients) if a < 0]
        if negative:
            raise NumericFailureError(
                f"{self.label()} has a negative coefficient at n={negative[0]}"
            )

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, n: int) -> int:
        return self.coefficients[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    @property
    def n_max(self) -> int:
        return len(self.coefficients) - 1

    def label(self) -> str:
        if self.index is None:
            return self.family.value
        return f"{self.family.value}({self.index})"

    def to_frame(self) -> pd.DataFrame:
        # values as strings keep arbitrary precision through CSV
        return pd.DataFrame(
            {
                "n": list(range(len(self.coefficients))),
                "value": [str(a) for a in self.coefficients],
            }
        )

    def to_bfile_lines(self) -> List[str]:
        return [f"{n} {a}" for n, a in enumerate(self.coefficients)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "index": self.index,
            "coefficients": [str(a) for a in self.coefficients],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


@dataclass(frozen=True)
class AsymptoticParams:
    """Smallest positive root of a family's radicand.

    ``root`` and ``growth_constant`` are mpmath numbers at the working precision.
    """

    family: Family
    index: int
    root: Any
    growth_constant: Any
    residual: float

    def to_dict(self) -> Dict[str, Any]:
        return {
            "family": self.family.value,
            "index": self.index,
            "root": str(self.root),
            "growth_constant": str(self.growth_constant),
            "residual": self.residual,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


@dataclass(frozen=True)
class GeneratingTreeState:
    """Label ``l`` plus the number of consecutive children taken with label <= parent label."""

    label: int
    streak: int = 0

    def children(self, bound: Optional[int] = None) -> List["GeneratingTreeState"]:
        """Successors under (l) -> (1),...,(l+1); ``bound`` limits the streak."""
        result = [GeneratingTreeState(self.label + 1, 0)]
        if bound is None or self.streak + 1 <= bound:
            result.extend(
                GeneratingTreeState(child, self.streak + 1)
                for child in range(1, self.label + 1)
            )
        return result


@dataclass(frozen=True)
class DyckPath:
    """A word over U/D that never dips below height 0 and ends at height 0."""

    steps: str

    def __post_init__(self):
        height = 0
        for step in self.steps:
            if step == "U":
                height += 1
            elif step == "D":
                height -= 1
            else:
                raise InvalidInputError(f"unknown step {step!r} in {self.steps!r}")
            if height < 0:
                raise InvalidInputError(f"{self.steps!r} goes below height 0")
        if height != 0:
            raise InvalidInputError(f"{self.steps!r} ends at height {height}")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps
