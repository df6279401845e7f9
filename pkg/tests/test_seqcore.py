import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from overabundant import (
    InvalidInput,
    Sequence,
    Thresholds,
    WordClass,
    WordStats,
    classify,
    deviation,
    expected_frequency,
    rank_encode,
)


@pytest.mark.parametrize("text, ranks, sigma", [
    ("baab", [1, 0, 0, 1], 2),
    ("a", [0], 1),
    ("ACGT", [0, 1, 2, 3], 4),
])
def test_rank_encode(text, ranks, sigma):
    seq = rank_encode(text)
    assert seq.data.tolist() == ranks
    assert seq.sigma == sigma
    assert seq.text() == text


@pytest.mark.parametrize("bad", ["", "ab$c"])
def test_rank_encode_rejects(bad):
    with pytest.raises(InvalidInput):
        rank_encode(bad)


@given(st.text(alphabet="ACGTNxyz", min_size=1, max_size=50))
def test_rank_encode_round_trip(text):
    seq = rank_encode(text)
    assert seq.text() == text
    assert seq.n == len(text)
    assert list(seq.decode) == sorted(set(text))


def test_sequence_validation():
    with pytest.raises(InvalidInput):
        Sequence(np.array([0, 2]), ("a", "b"))
    with pytest.raises(InvalidInput):
        Sequence(np.array([0, 1]), ("a", "a"))
    seq = Sequence(np.array([1, 0]), ("a", "b"))
    assert not seq.data.flags.writeable
    assert seq == rank_encode("ba")
    assert hash(seq) == hash(rank_encode("ba"))


def test_encode_word():
    seq = rank_encode("baab")
    assert seq.encode_word("ab") == [0, 1]
    assert seq.encode_word("ac") is None
    assert seq.encode_word([1, 1]) == [1, 1]


@pytest.mark.parametrize("stats, expected", [
    (WordStats(1, 1, 1, 1), 1.0),
    (WordStats(0, 3, 2, 0), 0.0),
    (WordStats(1, 1, 5, 6), 5 / 6),
])
def test_expected_frequency(stats, expected):
    assert expected_frequency(stats) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("f_w, e, dev", [
    (1, 1.0, 0.0),
    (1, 4.0, -1.5),
    (1, 5 / 6, 1 / 6),
])
def test_deviation(f_w, e, dev):
    assert deviation(f_w, e) == pytest.approx(dev, abs=1e-12)


@pytest.mark.parametrize("dev, cls", [
    (0.5, WordClass.OVERABUNDANT),
    (0.0, WordClass.COMMON),
    (-0.1, WordClass.AVOIDED),
    (0.3, WordClass.OVERABUNDANT),
])
def test_classify(dev, cls):
    assert classify(dev, Thresholds(-0.1, 0.3)) is cls


@pytest.mark.parametrize("rho1, rho2", [(0.0, 1.0), (-1.0, 0.0), (0.5, 0.2)])
def test_thresholds_need_zero_between(rho1, rho2):
    with pytest.raises(InvalidInput):
        Thresholds(rho1, rho2)


counts = st.integers(min_value=0, max_value=10**6)


@given(counts, counts, counts)
def test_expected_frequency_symmetric(f_p, f_s, f_i):
    a = expected_frequency(WordStats(0, f_p, f_s, f_i))
    b = expected_frequency(WordStats(0, f_s, f_p, f_i))
    assert a == b


@given(st.floats(min_value=0, max_value=1e9, allow_nan=False))
def test_deviation_zero_when_observed_matches(e):
    assert deviation(e, e) == 0.0


@given(st.integers(0, 10**6), st.floats(min_value=0, max_value=1e6, allow_nan=False))
def test_deviation_increasing_in_count(f_w, e):
    assert deviation(f_w + 1, e) > deviation(f_w, e)


@given(st.floats(min_value=0, max_value=1e9, allow_nan=False))
def test_absent_word_never_positive(e):
    assert deviation(0, e) <= 0


@given(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
def test_classify_total(dev):
    th = Thresholds(-0.5, 0.5)
    cls = classify(dev, th)
    assert (cls is WordClass.AVOIDED) == (dev <= th.rho1)
    assert (cls is WordClass.OVERABUNDANT) == (dev >= th.rho2)
    assert math.isfinite(dev)
