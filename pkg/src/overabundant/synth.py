"""Synthetic workloads: planted-word effectiveness trials and scaling runs.

All randomness comes from ``numpy.random.Generator(PCG64(seed))``.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass

import numpy as np

from .enumerate import classify_word, overabundant_words, scan
from .errors import InvalidInput, PlacementFailed
from .seqcore import Sequence, Thresholds
from .suffixtree import build

DNA = "ACGT"
PROTEIN = "ACDEFGHIKLMNPQRSTVWY"
_GENERIC = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"


def alphabet(sigma: int) -> str:
    if sigma == 4:
        return DNA
    if sigma == 20:
        return PROTEIN
    if 2 <= sigma <= len(_GENERIC):
        return _GENERIC[:sigma]
    raise InvalidInput(f"no built-in alphabet of size {sigma}")


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _from_letters(letters: np.ndarray, symbols: str) -> Sequence:
    """Sequence over the letters actually used, ranks in symbol order."""
    used = np.flatnonzero(np.bincount(letters, minlength=len(symbols)))
    remap = np.full(len(symbols), -1, dtype=np.int32)
    remap[used] = np.arange(used.size, dtype=np.int32)
    return Sequence(remap[letters], tuple(symbols[i] for i in used))


def random_sequence(n: int, sigma: int, seed: int) -> Sequence:
    """``n`` i.i.d. uniform letters over a ``sigma``-letter alphabet."""
    if n < 1 or sigma < 2:
        raise InvalidInput("need n >= 1 and sigma >= 2")
    symbols = alphabet(sigma)
    return _from_letters(rng_for(seed).integers(0, sigma, n), symbols)


def plant_word(x: Sequence, word: str, t: int, seed: int) -> Sequence:
    """Overwrite ``t`` non-overlapping windows of ``x``, chosen uniformly, with ``word``.

    Start positions come from picking ``t`` of the ``n - t(m-1)`` slots
    and spreading them apart by ``m - 1``, which is uniform over all
    non-overlapping placements and needs no retries.
    """
    m = len(word)
    if t < 0 or m < 1:
        raise InvalidInput("need t >= 0 and a non-empty word")
    if t * m > x.n:
        raise PlacementFailed(f"{t} copies of a length-{m} word do not fit in {x.n} letters")
    symbols = "".join(x.decode)
    for s in word:
        if s not in symbols:
            symbols += s
    symbols = "".join(sorted(symbols))
    index = {s: i for i, s in enumerate(symbols)}
    host = np.fromiter((index[x.decode[r]] for r in x.data), dtype=np.int64, count=x.n)
    if t:
        starts = planted_windows(x.n, m, t, seed)
        host[starts[:, None] + np.arange(m)] = [index[s] for s in word]
    return _from_letters(host, symbols)


def planted_windows(n: int, m: int, t: int, seed: int) -> np.ndarray:
    """Window starts ``plant_word`` uses for a host of length ``n``."""
    if t == 0:
        return np.empty(0, dtype=np.int64)
    slots = np.sort(rng_for(seed).choice(n - t * (m - 1), size=t, replace=False))
    return slots + np.arange(t) * (m - 1)


@dataclass(frozen=True)
class PlantSpec:
    n: int
    m: int
    t: int
    seed: int
    sigma: int = 4

    def __post_init__(self):
        if self.m < 3:
            raise InvalidInput("planted words need at least 3 letters")
        if self.t * self.m > self.n:
            raise InvalidInput("t * m exceeds n")

    @property
    def r(self) -> float:
        """Expected occurrences of a fixed m-letter word in a uniform host."""
        return self.n / self.sigma ** self.m


@dataclass(frozen=True)
class TrialReport:
    planted: str
    dev_planted: float | None
    reported: bool
    w_max: str | None
    dev_max: float | None


def effectiveness_trial(spec: PlantSpec, rho: float) -> TrialReport:
    """Plant a random word into a random host and check what the enumeration finds."""
    host = random_sequence(spec.n, spec.sigma, spec.seed)
    symbols = alphabet(spec.sigma)
    word_rng = rng_for(spec.seed + 1_000_003)
    planted = "".join(symbols[i] for i in word_rng.integers(0, spec.sigma, spec.m))
    x = plant_word(host, planted, spec.t, spec.seed + 2_000_003)
    tree = build(x)
    res = scan(tree, rho)

    target = x.encode_word(planted)
    hits = np.flatnonzero(res.length == spec.m)
    text = x.data
    reported = any(text[s:s + spec.m].tolist() == target for s in res.start[hits].tolist())

    w_max = dev_max = None
    if len(res):
        top = np.flatnonzero(res.dev == res.dev.max())
        w_max = min(x.text(int(res.start[i]), int(res.start[i] + res.length[i])) for i in top)
        dev_max = float(res.dev.max())
    # Thresholds only matter for the class label, which is not reported here
    dev_planted = classify_word(tree, planted, Thresholds(-rho, rho)).dev
    return TrialReport(planted, dev_planted, reported, w_max, dev_max)


def time_enumeration(x: Sequence, rho: float) -> float:
    """Wall-clock seconds for tree construction plus enumeration."""
    t0 = time.perf_counter()
    overabundant_words(build(x), rho)
    return time.perf_counter() - t0


def warm_up():
    """Trigger JIT compilation so it is not billed to the first timed run."""
    time_enumeration(random_sequence(64, 4, 0), 1.0)


def scaling_benchmark(lengths, sigma: int, rho: float, seed: int, repeats: int = 3) -> list[dict]:
    """Median-of-``repeats`` end-to-end timing for each length."""
    lengths = list(lengths)
    if lengths != sorted(lengths):
        raise InvalidInput("lengths must be ascending")
    warm_up()
    rows = []
    for n in lengths:
        x = random_sequence(n, sigma, seed)
        times = [time_enumeration(x, rho) for _ in range(repeats)]
        rows.append({"n": n, "sigma": sigma, "rho": rho, "seed": seed,
                     "millis": round(statistics.median(times) * 1000, 3)})
    return rows


BENCH_COLUMNS = ("n", "sigma", "rho", "seed", "millis")


def write_benchmark_tsv(rows, stream):
    writer = csv.DictWriter(stream, fieldnames=BENCH_COLUMNS, delimiter="\t", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
