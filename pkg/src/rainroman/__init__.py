"""Exact 2-rainbow and Roman domination: solvers, extremal families, bound checks."""

from .constructions import (
    GFamilySpec,
    TkSpec,
    build_cycle,
    build_G_family,
    build_spider,
    build_Tk,
    canonical_fk,
    canonical_gk,
    is_in_G,
    is_in_T,
)
from .domination import (
    BudgetExceeded,
    RainbowAssignment,
    RomanAssignment,
    gamma_R_exact,
    gamma_r2_exact,
    is_valid_rainbow,
    is_valid_roman,
    rainbow_to_roman,
    rainbow_weight,
    roman_to_rainbow,
    roman_weight,
)
from .graph import Graph, SpiderProfile, parse_graph6, write_graph6
from .harness import BoundReport, SweepSummary, check_bounds, selftest_families, sweep
from .reductions import Reduction, contract_p5, extend_rainbow, extend_roman

__version__ = "0.1.0"
