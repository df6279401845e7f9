"""Brute-force reference implementations.

Nothing here touches the suffix tree: counts come from sliding-window
comparison over plain Python lists, so these functions can check the
fast path independently. Quadratic or worse; meant for short inputs.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .errors import InvalidInput, TooLarge
from .seqcore import Sequence, WordStats, deviation, expected_frequency

SEARCH_LIMIT = 10**7
LETTERS = "abcdefghijklmnopqrstuvwxyz"


def _symbols(x) -> list:
    if isinstance(x, Sequence):
        return [x.decode[r] for r in x.data]
    return list(x)


def naive_frequency(x, w) -> int:
    """Number of (possibly overlapping) occurrences of ``w`` in ``x``."""
    xs, ws = _symbols(x), list(w)
    if not ws:
        raise InvalidInput("empty word")
    m = len(ws)
    return sum(1 for i in range(len(xs) - m + 1) if xs[i:i + m] == ws)


def naive_stats(x, w) -> WordStats:
    return WordStats(
        naive_frequency(x, w),
        naive_frequency(x, w[:-1]),
        naive_frequency(x, w[1:]),
        naive_frequency(x, w[1:-1]),
    )


def naive_deviations(x) -> dict:
    """Deviation of every distinct factor of length >= 3.

    Counts come from tallying all ``n(n+1)/2`` windows, which gives the
    same numbers as calling ``naive_frequency`` per word, only faster.
    """
    xs = "".join(_symbols(x))
    n = len(xs)
    counts = Counter(xs[i:j] for i in range(n) for j in range(i + 1, n + 1))
    out = {}
    for w, f_w in counts.items():
        if len(w) < 3:
            continue
        stats = WordStats(f_w, counts[w[:-1]], counts[w[1:]], counts[w[1:-1]])
        out[w] = deviation(stats.f_w, expected_frequency(stats))
    return out


def naive_overabundant(x, rho: float, devs: dict | None = None) -> dict:
    """Map each factor with dev >= rho to its deviation.

    Absent words never qualify (their deviation is at most zero), so
    only factors of ``x`` are scored. ``devs`` may carry a precomputed
    ``naive_deviations(x)``.
    """
    if not rho > 0:
        raise InvalidInput(f"rho must be positive, got {rho}")
    if devs is None:
        devs = naive_deviations(x)
    return {w: d for w, d in devs.items() if d >= rho}


@dataclass
class ExtremalReport:
    n: int
    sigma: int
    rho: float
    best_count: int
    witnesses: list = field(default_factory=list)
    examined: int = 0


def _canonical_sequences(n, sigma):
    """Sequences of length n over ``sigma`` letters, one per letter-renaming class.

    Letters are introduced in order of first appearance, so the first
    letter is always ``a``.
    """
    def extend(prefix, used):
        if len(prefix) == n:
            yield prefix
            return
        for c in range(min(used + 1, sigma)):
            yield from extend(prefix + [c], max(used, c + 1))

    yield from extend([0], 1)


def extremal_search(n: int, sigma: int, rho: float | None = None) -> ExtremalReport:
    """Exhaustively find the sequences with the most rho-overabundant words.

    Witnesses are listed over the full alphabet (every renaming of each
    best class), sorted.
    """
    if n < 1 or sigma < 1:
        raise InvalidInput("need n >= 1 and sigma >= 1")
    if sigma > len(LETTERS):
        raise InvalidInput(f"sigma is limited to {len(LETTERS)}")
    if sigma ** n > SEARCH_LIMIT:
        raise TooLarge(f"{sigma}^{n} sequences exceed the search limit {SEARCH_LIMIT}")
    if rho is None:
        rho = 1 / (2 * n)
    best, classes, examined = -1, [], 0
    for ranks in _canonical_sequences(n, sigma):
        examined += 1
        word = "".join(LETTERS[r] for r in ranks)
        c = len(naive_overabundant(word, rho))
        if c > best:
            best, classes = c, [ranks]
        elif c == best:
            classes.append(ranks)
    witnesses = set()
    for ranks in classes:
        for perm in itertools.permutations(LETTERS[:sigma]):
            witnesses.add("".join(perm[r] for r in ranks))
    return ExtremalReport(n, sigma, rho, best, sorted(witnesses), examined)
