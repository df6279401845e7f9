import io
import math

import numpy as np
import pytest

from overabundant import InvalidInput, PlacementFailed, rank_encode
from overabundant.oracle import naive_frequency
from overabundant.synth import (
    PlantSpec,
    effectiveness_trial,
    planted_windows,
    plant_word,
    random_sequence,
    scaling_benchmark,
    write_benchmark_tsv,
)


def test_random_sequence_deterministic():
    assert random_sequence(10, 4, 1) == random_sequence(10, 4, 1)
    assert random_sequence(10, 4, 1) != random_sequence(10, 4, 2)


def test_random_sequence_single_letter():
    x = random_sequence(1, 2, 0)
    assert x.n == 1 and x.sigma == 1


def test_random_sequence_uniform():
    n = 10**5
    x = random_sequence(n, 4, 7)
    counts = np.bincount(x.data, minlength=4)
    sd = math.sqrt(n * 0.25 * 0.75)
    assert np.all(np.abs(counts - n / 4) <= 5 * sd)


@pytest.mark.parametrize("n, sigma", [(0, 4), (5, 1)])
def test_random_sequence_rejects(n, sigma):
    with pytest.raises(InvalidInput):
        random_sequence(n, sigma, 0)


def test_plant_zero_copies_is_identity():
    x = random_sequence(20, 4, 3)
    assert plant_word(x, "aaa", 0, 1).text() == x.text()


def test_plant_one_copy_changes_one_window():
    x = random_sequence(50, 4, 3)
    y = plant_word(x, "TTTTT", 1, 9)
    (s,) = planted_windows(50, 5, 1, 9)
    assert y.text()[s:s + 5] == "TTTTT"
    assert y.text()[:s] == x.text()[:s]
    assert y.text()[s + 5:] == x.text()[s + 5:]


@pytest.mark.parametrize("seed", range(20))
def test_planted_windows_disjoint(seed):
    starts = planted_windows(100, 7, 14, seed)
    assert len(starts) == 14
    assert np.all(np.diff(starts) >= 7)
    assert starts[0] >= 0 and starts[-1] + 7 <= 100


def test_plant_many_copies_counted():
    x = random_sequence(80000, 4, 0)
    y = plant_word(x, "ACGTTG", 320, 1)
    assert y.n == x.n
    assert naive_frequency(y, "ACGTTG") >= 320


def test_plant_word_new_letter():
    y = plant_word(rank_encode("aaaaaa"), "bcb", 1, 0)
    assert sorted(y.decode) == ["a", "b", "c"]
    assert "bcb" in y.text()


def test_placement_failed():
    with pytest.raises(PlacementFailed):
        plant_word(random_sequence(10, 4, 0), "ACG", 4, 0)


def test_plant_spec_validation():
    assert PlantSpec(80000, 6, 20, 0).r == pytest.approx(80000 / 4096)
    with pytest.raises(InvalidInput):
        PlantSpec(100, 2, 1, 0)
    with pytest.raises(InvalidInput):
        PlantSpec(10, 5, 3, 0)


def test_effectiveness_trial_strong_signal():
    spec = PlantSpec(80000, 6, 320, 3)
    rep = effectiveness_trial(spec, 1e-6)
    assert rep.reported
    assert rep.dev_planted > 0
    assert rep.dev_max >= rep.dev_planted
    assert rep.w_max in rep.planted
    assert effectiveness_trial(spec, 1e-6) == rep


def test_effectiveness_trial_no_signal():
    rep = effectiveness_trial(PlantSpec(2000, 6, 0, 1), 1e-6)
    assert len(rep.planted) == 6


def test_scaling_benchmark_small():
    rows = scaling_benchmark([1000, 2000], 4, 1.0, 0)
    assert [r["n"] for r in rows] == [1000, 2000]
    assert rows[0]["millis"] < 1000
    buf = io.StringIO()
    write_benchmark_tsv(rows, buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == "n\tsigma\trho\tseed\tmillis"
    assert lines[1].startswith("1000\t4\t1.0\t0\t")


def test_scaling_benchmark_needs_ascending():
    with pytest.raises(InvalidInput):
        scaling_benchmark([2000, 1000], 4, 1.0, 0)
