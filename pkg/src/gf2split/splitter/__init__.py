"""Square-zero + diagonalizable (or potent) splits of matrices over GF(2^m)."""

from .companion import BlockSplit, ConstructionError, SplitError, pick_a, split_companion
from .dispatch import (
    TOO_SMALL,
    SplitOptions,
    normalize_and_split,
    split_any,
    split_block,
    split_f2,
    split_subfield,
)
from .f2 import QUARTIC_TABLE, quartic_table, split_f2_block

__all__ = [
    "QUARTIC_TABLE",
    "TOO_SMALL",
    "BlockSplit",
    "ConstructionError",
    "SplitError",
    "SplitOptions",
    "normalize_and_split",
    "pick_a",
    "quartic_table",
    "split_any",
    "split_block",
    "split_companion",
    "split_f2",
    "split_f2_block",
    "split_subfield",
]
