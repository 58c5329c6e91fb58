#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
chebyshev-elim - Approximation de Tchebychev exacte
===================================================

Résolution directe du problème min_theta max_i |x_i^T theta - Y_i| par
élimination arrière des paramètres puis substitution avant dans des
contraintes de boîte, en arithmétique rationnelle exacte.
"""

__version__ = "0.1.0"
__author__ = "Équipe chebyshev-elim"
__license__ = "MIT"

from .core import config, errors, numeric
from .core.errors import (
    BudgetExceededError,
    ChebyshevError,
    ConfigurationError,
    DegenerateStageError,
    DimensionMismatchError,
    EmptyBoxError,
    GuardExceededError,
    InputFileError,
    InternalSolverError,
    RationalParseError,
    ZeroColumnError,
)
from .core.numeric import EXACT, FloatField, get_field, rational_parse, rational_render
from .solver import (
    EliminationOptions,
    ProblemInstance,
    Selector,
    Solution,
    backward_eliminate,
    complexity_bound,
    forward_substitute,
    solve,
    solve_location,
    solve_one_param,
    solve_two_param,
)
from .oracle import oracle_minimax, verify


def initialize(config_path=None):
    """Charge la configuration du solveur (valeurs par défaut puis fichier INI)"""
    from .core.config import initialize as init_config

    return init_config(config_path)
