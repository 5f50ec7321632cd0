"""Data models for permutations and their sub-permutations."""

import json
from dataclasses import dataclass
from typing import Any, Dict, Iterator, Tuple

from ..errors import InvalidInputError


@dataclass(frozen=True)
class Permutation:
    """A rearrangement of 1..n; n = 0 is the empty permutation."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        if sorted(entries) != list(range(1, n + 1)):
            raise InvalidInputError(f"not a permutation of 1..{n}: {entries}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parses the one-line format ``"4 5 3 1 2"`` (commas are tolerated)."""
        tokens = text.replace(",", " ").split()
        try:
            return cls(tuple(int(token) for token in tokens))
        except ValueError as e:
            raise InvalidInputError(f"cannot parse permutation {text!r}") from e

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.entries)

    def position(self, value: int) -> int:
        """0-based position of ``value``."""
        try:
            return self.entries.index(value)
        except ValueError as e:
            raise InvalidInputError(f"value {value} is not an entry of {self}") from e


@dataclass(frozen=True)
class SubPermutation:
    """The sub-permutation generated by ``generator_value``.

    ``window`` is the 1-based inclusive position interval of the host; ``pattern``
    is the window rescaled onto 1..size.
    """

    generator_value: int
    window: Tuple[int, int]
    pattern: Permutation

    @property
    def size(self) -> int:
        return len(self.pattern)

    @property
    def is_prefix(self) -> bool:
        return self.window[0] == 1

    def to_dict(self) -> Dict[str, Any]:
        return {
            "generator": self.generator_value,
            "window": list(self.window),
            "pattern": str(self.pattern),
            "size": self.size,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


@dataclass(frozen=True)
class TwoLineRepr:
    """Two-line drawing of a 123-avoider.

    ``upper[i]`` is True when position i lies on line U. ``l`` counts the D-entries
    below the rightmost U-entry (all D-entries when U is empty); ``v`` counts the
    U-entries covering the rightmost D-entry.
    """

    host: Permutation
    upper: Tuple[bool, ...]
    l: int
    v: int

    @property
    def upper_entries(self) -> Tuple[int, ...]:
        return tuple(x for x, up in zip(self.host, self.upper) if up)

    @property
    def lower_entries(self) -> Tuple[int, ...]:
        return tuple(x for x, up in zip(self.host, self.upper) if not up)

    def line_string(self) -> str:
        """One letter per position, e.g. ``"DDDDUDDUUDD"``."""
        return "".join("U" if up else "D" for up in self.upper)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "host": str(self.host),
            "lines": self.line_string(),
            "l": self.l,
            "v": self.v,
        }


def parse_permutation(text: str) -> Permutation:
    return Permutation.parse(text)


def format_permutation(p: Permutation) -> str:
    return str(p)
