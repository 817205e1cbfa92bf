from .decomposition import (
    DecompositionError,
    NiceTreeDecomposition,
    TreeDecomposition,
    ValidationReport,
    heuristic_decomposition,
    make_nice,
    validate,
    validate_nice,
)
from .dp import DPTable, backtrack, dp_solve, min_spread_tw, solve_tw, table_bound

__all__ = [
    "DecompositionError",
    "NiceTreeDecomposition",
    "TreeDecomposition",
    "ValidationReport",
    "heuristic_decomposition",
    "make_nice",
    "validate",
    "validate_nice",
    "DPTable",
    "backtrack",
    "dp_solve",
    "min_spread_tw",
    "solve_tw",
    "table_bound",
]
