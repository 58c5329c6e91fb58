#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests unitaires pour les solutions directes à un et deux paramètres
"""

import os
import sys
from fractions import Fraction as F

import pytest

# Ajouter le répertoire parent au PYTHONPATH
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from chebyshev_elim.core.errors import ChebyshevError, DimensionMismatchError, ZeroColumnError
from chebyshev_elim.solver.boxes import solve
from chebyshev_elim.solver.closed_form import solve_location, solve_one_param, solve_two_param
from chebyshev_elim.solver.problem import ProblemInstance

pytestmark = pytest.mark.unit


def test_location():
    """Test le centre de l'étendue"""
    result = solve_location([1, 5, 2])
    assert result.mu == 2
    assert result.theta == 3
    assert solve_location(["1/2"]) == (0, F(1, 2))


def test_location_empty():
    """Test le rejet d'un échantillon vide"""
    with pytest.raises(DimensionMismatchError):
        solve_location([])


def test_one_param():
    """Test le cas à un paramètre avec solution unique"""
    result = solve_one_param([1, 2], [1, 1])
    assert result.mu == F(1, 3)
    assert result.theta_lower == result.theta_upper == F(2, 3)


def test_one_param_with_zero_abscissa():
    """Test une observation sans influence sur theta"""
    result = solve_one_param([0, 1], [1, 0])
    assert result.mu == 1
    assert (result.theta_lower, result.theta_upper) == (-1, 1)


def test_one_param_errors():
    """Test les erreurs du cas à un paramètre"""
    with pytest.raises(ZeroColumnError):
        solve_one_param([0, 0], [1, 2])
    with pytest.raises(DimensionMismatchError):
        solve_one_param([1, 2], [1])


def test_one_param_matches_general_solver():
    """Test l'accord avec le solveur général"""
    x, y = [3, -1, 2, 5], [1, 0, 4, -2]
    closed = solve_one_param(x, y)
    general = solve(ProblemInstance.from_rows([(v,) for v in x], y))
    assert general.mu == closed.mu
    assert general.bounds[0] == (closed.theta_lower, closed.theta_upper)


def test_two_param_unique_solution():
    """Test la régression affine X = (0, 1, 2), Y = (0, 1, 0)"""
    result = solve_two_param([0, 1, 2], [0, 1, 0])
    assert result.mu == F(1, 2)
    assert result.theta1_bounds == (F(1, 2), F(1, 2))
    assert result.theta2_bounds(F(1, 2)) == (0, 0)


def test_two_param_interpolation():
    """Test deux points : ajustement exact"""
    result = solve_two_param([0, 1], [0, 1])
    assert result.mu == 0
    assert result.theta1_bounds == (0, 0)
    assert result.theta2_bounds(0) == (1, 1)


def test_two_param_equal_abscissae():
    """Test le rejet d'abscisses toutes égales"""
    with pytest.raises(ChebyshevError):
        solve_two_param([2, 2, 2], [1, 2, 3])


def test_two_param_matches_general_solver(example1):
    """Test l'accord avec le solveur général sur les colonnes (1, X)"""
    x = [row[1] for row in example1.x]
    y = list(example1.y)
    closed = solve_two_param(x, y)
    general = solve(ProblemInstance.from_rows([(1, v) for v in x], y))
    assert general.mu == closed.mu
    assert general.bounds[0] == closed.theta1_bounds
    assert general.bounds[1] == closed.theta2_bounds(general.theta[0])
