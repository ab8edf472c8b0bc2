"""Atomic measures, the moment map and its derivative."""

from momentcone.momentmap.measure import AtomicMeasure, MomentSequence, as_sequence
from momentcone.momentmap.moment_map import (
    NAEstimate,
    Regularity,
    atom_columns,
    classify,
    estimate_NA,
    jacobian,
    moments,
    na_formula,
)

__all__ = [
    "AtomicMeasure",
    "MomentSequence",
    "NAEstimate",
    "Regularity",
    "as_sequence",
    "atom_columns",
    "classify",
    "estimate_NA",
    "jacobian",
    "moments",
    "na_formula",
]
