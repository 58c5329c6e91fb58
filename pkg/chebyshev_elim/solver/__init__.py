#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Solveur par élimination de paramètres
=====================================

Élimination arrière (X_n, Y_n -> X_{n-1}, Y_{n-1}), puis substitution
avant dans des contraintes de boîte.
"""

from .problem import ProblemInstance, chebyshev_residual, validate, zero_heavy_column_order
from .elimination import (
    EliminationOptions,
    EliminationResult,
    EliminationStage,
    backward_eliminate,
    check_budget,
    complexity_bound,
    count_entries,
    eliminate_step,
    enumerate_pairs,
    pair_position,
)
from .boxes import BoxSpec, Selector, Solution, box_bounds, box_spec, forward_substitute, solve
from .closed_form import solve_location, solve_one_param, solve_two_param

__all__ = [
    "ProblemInstance",
    "chebyshev_residual",
    "validate",
    "zero_heavy_column_order",
    "EliminationOptions",
    "EliminationResult",
    "EliminationStage",
    "backward_eliminate",
    "check_budget",
    "complexity_bound",
    "count_entries",
    "eliminate_step",
    "enumerate_pairs",
    "pair_position",
    "BoxSpec",
    "Selector",
    "Solution",
    "box_bounds",
    "box_spec",
    "forward_substitute",
    "solve",
    "solve_location",
    "solve_one_param",
    "solve_two_param",
]
