"""Integer-alphabet sequences and the expectation/deviation word model.

A word ``w`` with ``|w| > 2`` is scored from four occurrence counts in the
text: its own, and those of its longest proper prefix, longest proper
suffix and longest infix. The expected count is ``f_p * f_s / f_i`` and
the deviation is ``(f_w - E) / max(sqrt(E), 1)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput

SENTINEL = "$"


@dataclass(frozen=True, eq=False)
class Sequence:
    """A text over ranks ``0..sigma-1`` plus the table mapping ranks back to symbols."""

    data: np.ndarray
    decode: tuple

    def __post_init__(self):
        data = np.ascontiguousarray(self.data, dtype=np.int32)
        data.setflags(write=False)
        object.__setattr__(self, "data", data)
        if len(set(self.decode)) != len(self.decode):
            raise InvalidInput("decode table must be injective")
        if data.size and (data.min() < 0 or data.max() >= len(self.decode)):
            raise InvalidInput("rank outside the decode table")

    @property
    def n(self) -> int:
        return int(self.data.size)

    @property
    def sigma(self) -> int:
        return len(self.decode)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.decode == other.decode and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.decode, self.data.tobytes()))

    def text(self, start: int = 0, stop: int | None = None) -> str:
        return "".join(self.decode[r] for r in self.data[start:stop])

    def __str__(self):
        return self.text()

    def encode_word(self, word) -> list | None:
        """Map a symbol string to ranks; ``None`` if it uses a symbol absent from the text."""
        if not isinstance(word, str):
            return [int(r) for r in word]
        index = {s: r for r, s in enumerate(self.decode)}
        try:
            return [index[s] for s in word]
        except KeyError:
            return None


def rank_encode(text: str) -> Sequence:
    """Replace each symbol by its rank among the sorted distinct symbols of ``text``."""
    if not text:
        raise InvalidInput("empty text")
    if SENTINEL in text:
        raise InvalidInput(f"text contains the reserved sentinel {SENTINEL!r}")
    alphabet = tuple(sorted(set(text)))
    rank = {s: r for r, s in enumerate(alphabet)}
    return Sequence(np.fromiter((rank[s] for s in text), dtype=np.int32, count=len(text)), alphabet)


@dataclass(frozen=True)
class WordStats:
    f_w: int
    f_p: int
    f_s: int
    f_i: int


@dataclass(frozen=True)
class Thresholds:
    rho1: float
    rho2: float

    def __post_init__(self):
        if not self.rho1 < 0 < self.rho2:
            raise InvalidInput(f"need rho1 < 0 < rho2, got {self.rho1}, {self.rho2}")


class WordClass(enum.Enum):
    AVOIDED = "avoided"
    COMMON = "common"
    OVERABUNDANT = "overabundant"


def expected_frequency(stats: WordStats) -> float:
    if stats.f_i == 0:
        return 0.0
    return stats.f_p * stats.f_s / stats.f_i


def deviation(f_w: int, expected: float) -> float:
    return (f_w - expected) / max(math.sqrt(expected), 1.0)


def classify(dev: float, th: Thresholds) -> WordClass:
    # both boundaries are inclusive
    if dev <= th.rho1:
        return WordClass.AVOIDED
    if dev >= th.rho2:
        return WordClass.OVERABUNDANT
    return WordClass.COMMON
