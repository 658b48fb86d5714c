"""Exact additive complements of thin sequences.

Big integers cross the boundary as Python ints, exact ratios as
fractions.Fraction.
"""

from ._core import (
    AddcompError,
    ComplementBlocks,
    Sequence,
    build_blocks,
    build_sequence,
    build_terms,
    count,
    cover,
    cover_validate,
    criterion,
    criterion_sweep,
    default_sweep_points,
    growth_ratios,
    largest_le,
    lemma_check,
    lemma_exhaustive,
    lemma_random,
    level_ladder,
    q_of,
    sumset_coverage,
)

__all__ = [
    "AddcompError",
    "ComplementBlocks",
    "Sequence",
    "build_blocks",
    "build_sequence",
    "build_terms",
    "count",
    "cover",
    "cover_validate",
    "criterion",
    "criterion_sweep",
    "default_sweep_points",
    "growth_ratios",
    "largest_le",
    "lemma_check",
    "lemma_exhaustive",
    "lemma_random",
    "level_ladder",
    "q_of",
    "sumset_coverage",
]
