"""Suffix tree of ``x$`` stored as flat arrays.

The tree is assembled from the suffix array and LCP array of ``x$``
(both linear time over an integer alphabet). Node ids:

* ``0..n``   leaves, leaf ``k`` being the suffix of lexicographic rank ``k``
* ``n+1``    the root
* ``n+2..``  the other internal nodes

The sentinel is the rank ``sigma`` (one past the largest letter), so it
sorts last among the children of any node.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _kernels
from .errors import InvalidInput
from .seqcore import SENTINEL, Sequence


class Node(NamedTuple):
    id: int
    parent: int
    depth: int
    count: int
    suffix_link: int
    edge: tuple
    children: dict
    leaf_label: int | None


@dataclass(frozen=True)
class Locus:
    """Where a word ends in the tree.

    ``node`` is the explicit node at or just below the end of the word,
    so ``count`` (its leaf count) is the number of occurrences.
    """

    node: int
    depth: int
    count: int
    explicit: bool


class SuffixTree:
    def __init__(self, seq: Sequence):
        if seq.n < 1:
            raise InvalidInput("cannot build a suffix tree of an empty sequence")
        self.seq = seq
        self.n = seq.n
        self.sigma_x = seq.sigma
        self.sentinel = seq.sigma
        # one byte per letter whenever the sentinel fits
        text = np.empty(seq.n + 1, dtype=np.uint8 if self.sentinel < 256 else np.int32)
        text[:-1] = seq.data
        text[-1] = self.sentinel
        self.text = text

        sa = _kernels.suffix_array(text, self.sentinel)
        isa = _kernels.inverse(sa)
        lcp = _kernels.lcp_array(text, sa)
        N = text.size
        self.root = N
        parent, depth, lb, rb, order = _kernels.build_topology(sa, lcp)
        del lcp
        offsets, kids = _kernels.children_csr(parent, order)
        del order
        slink = _kernels.suffix_links(sa, isa, depth, lb, self.root)
        packed, starts = _kernels.node_table(sa, parent, depth, lb, rb, slink)

        self.sa = sa
        self.leaf_for_suffix = isa
        self.lb = lb
        # one row per node: (parent, depth, count, suffix link)
        self.packed = packed
        self.parent = packed[:, 0]
        self.depth = packed[:, 1]
        self.count = packed[:, 2]
        self.suffix_link = packed[:, 3]
        self.label_starts = starts
        self.child_offsets = offsets
        self.child_ids = kids
        self._child_letters = None
        for arr in (text, sa, isa, lb, packed, starts, offsets, kids):
            arr.setflags(write=False)

    # -- node queries ---------------------------------------------------

    @property
    def child_letters(self) -> np.ndarray:
        """First letter of every incoming edge, aligned with ``child_ids``."""
        if self._child_letters is None:
            letters = _kernels.edge_letters(self.text, self.label_starts, self.parent,
                                            self.depth, self.child_ids)
            letters.setflags(write=False)
            self._child_letters = letters
        return self._child_letters

    @property
    def num_nodes(self) -> int:
        return int(self.parent.size)

    def is_leaf(self, v: int) -> bool:
        return v <= self.n

    def children(self, v: int):
        return self.child_ids[self.child_offsets[v]:self.child_offsets[v + 1]]

    def child(self, v: int, letter):
        """Child of ``v`` whose edge starts with ``letter`` (rank or symbol), else ``None``."""
        if isinstance(letter, str):
            if letter == SENTINEL:
                letter = self.sentinel
            else:
                ranks = self.seq.encode_word(letter)
                if ranks is None or len(ranks) != 1:
                    return None
                letter = ranks[0]
        lo, hi = int(self.child_offsets[v]), int(self.child_offsets[v + 1])
        i = bisect_left(self.child_letters, letter, lo, hi)
        if i < hi and self.child_letters[i] == letter:
            return int(self.child_ids[i])
        return None

    def label_start(self, v: int) -> int:
        """A position of ``x$`` where the path label of ``v`` occurs."""
        return int(self.label_starts[v])

    def edge(self, v: int) -> tuple:
        start = self.label_start(v)
        return start + int(self.depth[self.parent[v]]), start + int(self.depth[v])

    def path_label(self, v: int) -> str:
        start = self.label_start(v)
        return self._decode(self.text[start:start + self.depth[v]])

    def leaf_label(self, v: int):
        return int(self.sa[v]) if self.is_leaf(v) else None

    def node(self, v: int) -> Node:
        kids = self.children(v)
        letters = self.child_letters[self.child_offsets[v]:self.child_offsets[v + 1]]
        return Node(
            id=v,
            parent=int(self.parent[v]),
            depth=int(self.depth[v]),
            count=int(self.count[v]),
            suffix_link=int(self.suffix_link[v]),
            edge=self.edge(v) if v != self.root else (0, 0),
            children={int(a): int(c) for a, c in zip(letters, kids)},
            leaf_label=self.leaf_label(v),
        )

    def locate(self, word):
        """Locus of ``word`` (symbol string or ranks), or ``None`` if it does not occur."""
        ranks = self.seq.encode_word(word)
        if ranks is None:
            return None
        if not ranks:
            raise InvalidInput("empty word")
        if any(r < 0 or r >= self.sentinel for r in ranks):
            return None
        v = self.root
        matched = 0
        m = len(ranks)
        while matched < m:
            c = self.child(v, ranks[matched])
            if c is None:
                return None
            start, end = self.edge(c)
            stop = min(end, start + m - matched)
            if list(self.text[start:stop]) != ranks[matched:matched + stop - start]:
                return None
            matched += stop - start
            v = c
        return Locus(node=v, depth=m, count=int(self.count[v]), explicit=m == int(self.depth[v]))

    def count_of(self, word) -> int:
        locus = self.locate(word)
        return 0 if locus is None else locus.count

    def _decode(self, ranks) -> str:
        dec = self.seq.decode
        return "".join(SENTINEL if r == self.sentinel else dec[r] for r in ranks)

    def dump(self) -> str:
        """Preorder text rendering, children in letter order; used by golden tests."""
        lines = []
        stack = [(self.root, 0)]
        while stack:
            v, level = stack.pop()
            if v == self.root:
                head = "root"
            else:
                s, e = self.edge(v)
                head = self._decode(self.text[s:e])
            line = f"{'  ' * level}{head} D={self.depth[v]} C={self.count[v]}"
            if self.is_leaf(v):
                line += f" leaf={self.sa[v]}"
            lines.append(line)
            stack.extend((int(c), level + 1) for c in reversed(self.children(v)))
        return "\n".join(lines) + "\n"


def build(seq: Sequence) -> SuffixTree:
    return SuffixTree(seq)


def child(tree: SuffixTree, v: int, letter):
    return tree.child(v, letter)


def locate(tree: SuffixTree, word):
    return tree.locate(word)
