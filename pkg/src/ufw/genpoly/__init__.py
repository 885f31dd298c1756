"""Generalized polynomials: certified evaluation with floor/nearest nodes,
digit systems (base, mixed-radix, Zeckendorf), automatic functions via
finite automata with output, return-time sets, Weyl-sum diagnostics, and
generating-function fitting."""

from .analysis import (
    empirical_sym_degree,
    fit_generating_function,
    return_times,
    weyl_sum,
)
from .dfao import Dfao, dfao_eval, digit_sum_dfao, identity_dfao, validate_bijective
from .digits import DigitSystem, base_change, digit_map, zeckendorf_indices
from .expr import GPExpr, eval_exact, eval_interval, parse_gpexpr
from .reals import Interval, RealConst

__all__ = [
    "Dfao",
    "DigitSystem",
    "GPExpr",
    "Interval",
    "RealConst",
    "base_change",
    "dfao_eval",
    "digit_map",
    "digit_sum_dfao",
    "empirical_sym_degree",
    "eval_exact",
    "eval_interval",
    "fit_generating_function",
    "identity_dfao",
    "parse_gpexpr",
    "return_times",
    "validate_bijective",
    "weyl_sum",
    "zeckendorf_indices",
]
