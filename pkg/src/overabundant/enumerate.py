"""All words whose deviation reaches a positive threshold, in linear time.

Only words ``a.y.b`` with ``y`` the label of an explicit node can be
overabundant, so the enumeration visits every explicit node ``v`` as a
candidate longest proper prefix:

* explicit prefixes: follow the suffix link of ``v`` to the infix node
  and score ``L(v).b`` for every outgoing letter ``b``;
* implicit prefixes: for every long edge ``(v, y)``, walk up from the
  suffix-link image of ``y`` to the infix node, scoring each explicit
  node passed on the way.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import _scan
from .errors import DevUndefined, InvalidInput
from .seqcore import (
    Sequence,
    Thresholds,
    WordClass,
    WordStats,
    classify,
    deviation,
    expected_frequency,
)
from .suffixtree import SuffixTree


@dataclass(frozen=True)
class OverabundantRecord:
    start: int
    length: int
    f_w: int
    f_p: int
    f_s: int
    f_i: int
    E: float
    dev: float
    seq: Sequence = field(repr=False, compare=False)

    @property
    def word(self) -> str:
        return self.seq.text(self.start, self.start + self.length)

    @property
    def stats(self) -> WordStats:
        return WordStats(self.f_w, self.f_p, self.f_s, self.f_i)


@dataclass(frozen=True)
class ScanResult:
    """Raw enumeration output, one row per reported word, in discovery order."""

    tree: SuffixTree
    rho: float
    start: np.ndarray
    length: np.ndarray
    f_w: np.ndarray
    f_p: np.ndarray
    f_s: np.ndarray
    f_i: np.ndarray
    expected: np.ndarray
    dev: np.ndarray
    source: np.ndarray  # 0: explicit w_p, 1: implicit w_p
    walk_steps: int

    def __len__(self):
        return int(self.start.size)

    def words(self) -> list:
        seq = self.tree.seq
        return [seq.text(s, s + k) for s, k in zip(self.start.tolist(), self.length.tolist())]


def _check_rho(rho):
    if not rho > 0:
        raise InvalidInput(f"rho must be positive, got {rho}")


def scan(tree: SuffixTree, rho: float) -> ScanResult:
    _check_rho(rho)
    ints, reals, steps = _scan.scan(
        tree.packed, tree.label_starts, tree.child_offsets, tree.child_ids,
        tree.root, float(rho),
    )
    return ScanResult(
        tree=tree,
        rho=float(rho),
        start=ints[:, 0],
        length=ints[:, 1],
        f_w=ints[:, 2],
        f_p=ints[:, 3],
        f_s=ints[:, 4],
        f_i=ints[:, 5],
        expected=reals[:, 0],
        dev=reals[:, 1],
        source=ints[:, 6],
        walk_steps=int(steps),
    )


def overabundant_words(tree: SuffixTree, rho: float) -> list[OverabundantRecord]:
    """Every word with deviation >= rho, sorted by word."""
    res = scan(tree, rho)
    seq = tree.seq
    rows = zip(res.start.tolist(), res.length.tolist(), res.f_w.tolist(), res.f_p.tolist(),
               res.f_s.tolist(), res.f_i.tolist(), res.expected.tolist(), res.dev.tolist())
    records = [OverabundantRecord(*row, seq=seq) for row in rows]
    records.sort(key=lambda r: r.word)
    return records


def count_overabundant(tree: SuffixTree, rho: float) -> int:
    return len(scan(tree, rho))


class Classification(NamedTuple):
    word_class: WordClass
    stats: WordStats
    E: float
    dev: float


def classify_word(tree: SuffixTree, word, th: Thresholds) -> Classification:
    """Score a single word from four occurrence counts."""
    if len(word) < 3:
        raise InvalidInput(f"words shorter than 3 letters have no deviation: {word!r}")
    f_i = tree.count_of(word[1:-1])
    if f_i == 0:
        raise DevUndefined(f"longest infix of {word!r} does not occur")
    stats = WordStats(tree.count_of(word), tree.count_of(word[:-1]), tree.count_of(word[1:]), f_i)
    e = expected_frequency(stats)
    dev = deviation(stats.f_w, e)
    return Classification(classify(dev, th), stats, e, dev)
