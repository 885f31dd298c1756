from .search import (
    APWitness,
    EdgeColoring,
    FSWitness,
    IntervalColoring,
    LineWitness,
    SearchBudget,
    ThresholdResult,
    WordColoring,
    coloring_from_index,
    combinatorial_lines,
    edge_index,
    edge_list,
    find_mono_ap,
    find_mono_clique,
    find_mono_fs,
    find_mono_line,
    finite_combinations,
    fs_multiple_window,
    ipstar_probe,
    line_points,
    partition_harness,
    pattern_configs,
    threshold_number,
    universal_check,
)
from . import checkers
from .kernels import backend_name, first_uncovered_coloring

__all__ = [
    "APWitness",
    "EdgeColoring",
    "FSWitness",
    "IntervalColoring",
    "LineWitness",
    "SearchBudget",
    "ThresholdResult",
    "WordColoring",
    "backend_name",
    "checkers",
    "coloring_from_index",
    "combinatorial_lines",
    "edge_index",
    "edge_list",
    "find_mono_ap",
    "find_mono_clique",
    "find_mono_fs",
    "find_mono_line",
    "finite_combinations",
    "first_uncovered_coloring",
    "fs_multiple_window",
    "ipstar_probe",
    "line_points",
    "partition_harness",
    "pattern_configs",
    "threshold_number",
    "universal_check",
]
