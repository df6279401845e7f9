"""Linear-time enumeration of overabundant words in integer-alphabet sequences."""

from .errors import (
    DevUndefined,
    InvalidInput,
    OverabundantError,
    ParseError,
    PlacementFailed,
    TooLarge,
)
from .seqcore import (
    Sequence,
    Thresholds,
    WordClass,
    WordStats,
    classify,
    deviation,
    expected_frequency,
    rank_encode,
)
from .suffixtree import SuffixTree, build
