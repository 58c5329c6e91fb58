#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests unitaires pour l'oracle par énumération de sommets et la vérification
"""

import os
import sys
from dataclasses import replace
from fractions import Fraction as F

import pytest

# Ajouter le répertoire parent au PYTHONPATH
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from chebyshev_elim.core.errors import GuardExceededError
from chebyshev_elim.oracle.epigraph import Constraint, build_epigraph, column_basis, oracle_minimax, vertex
from chebyshev_elim.oracle.verify import FAIL, PASS, SKIPPED, verify
from chebyshev_elim.solver.boxes import solve
from chebyshev_elim.solver.problem import ProblemInstance

pytestmark = pytest.mark.unit


def test_build_epigraph(example1):
    """Test la transcription en 2M demi-espaces"""
    lp = build_epigraph(example1)
    assert lp.n_variables == 4
    assert len(lp.constraints) == 8
    first, second = lp.constraints[:2]
    assert first.coefficients == (3, -1, 2, 1) and first.rhs == 2
    assert second.coefficients == (-3, 1, -2, 1) and second.rhs == -2
    assert (first.row, first.sign, second.sign) == (0, 1, -1)


def test_vertex_solves_saturated_subset():
    """Test la résolution exacte d'un sous-système carré et le rejet d'un système singulier"""
    subset = [Constraint((F(2), F(1)), F(3), 0, 1), Constraint((F(1), F(3)), F(5), 1, 1)]
    point = vertex(subset)
    assert point == (F(4, 5), F(7, 5))
    assert all(isinstance(v, F) for v in point)
    singular = [Constraint((F(1), F(2)), F(1), 0, 1), Constraint((F(2), F(4)), F(2), 1, 1)]
    assert vertex(singular) is None
    inconsistent = [Constraint((F(1), F(2)), F(1), 0, 1), Constraint((F(2), F(4)), F(3), 1, 1)]
    assert vertex(inconsistent) is None


def test_column_basis():
    """Test la détection des colonnes indépendantes de X"""
    problem = ProblemInstance.from_rows([(1, 2, 1), (2, 4, 0), (0, 0, 1)], [0, 0, 0])
    assert column_basis(problem) == [0, 2]
    assert column_basis(ProblemInstance.from_rows([(1, "1/2")], [1])) == [0]


def test_oracle_example1(example1):
    """Test l'oracle sur l'exemple 1"""
    result = oracle_minimax(example1)
    assert result.mu == F(2, 7)
    assert result.theta == (F(1, 3), F(5, 21), F(16, 21))


def test_oracle_two_param_instance():
    """Test l'oracle sur la régression affine X = (0, 1, 2), Y = (0, 1, 0)"""
    problem = ProblemInstance.from_rows([(1, 0), (1, 1), (1, 2)], [0, 1, 0])
    result = oracle_minimax(problem)
    assert result.mu == F(1, 2)
    assert result.theta == (F(1, 2), F(0))


def test_oracle_rank_deficient():
    """Test une matrice X de rang inférieur à N"""
    problem = ProblemInstance.from_rows([(1, 1), (1, 1), (2, 2)], [0, 1, 1])
    result = oracle_minimax(problem)
    assert result.mu == F(1, 2)
    assert result.theta == (F(1, 2), F(0))


def test_oracle_guard(example1):
    """Test la garde de taille de l'oracle"""
    with pytest.raises(GuardExceededError):
        oracle_minimax(example1, max_unknowns=3)
    with pytest.raises(GuardExceededError):
        oracle_minimax(example1, max_rows=3)


def test_verify_pass(example1):
    """Test la vérification complète d'une solution correcte"""
    report = verify(example1, solve(example1))
    assert report.passed
    assert [c.status for c in report.checks] == [PASS, PASS, PASS]
    assert report.to_dict()['passed'] is True


def test_verify_skips_oracle_outside_guard(example1):
    """Test que l'oracle est ignoré hors garde sans faire échouer le rapport"""
    report = verify(example1, solve(example1), max_rows=2)
    assert report.check('oracle').status == SKIPPED
    assert 'oracle skipped' in report.check('oracle').detail
    assert report.passed


def test_verify_detects_wrong_mu(example1):
    """Test qu'un mu falsifié est détecté"""
    solution = solve(example1)
    forged = replace(solution, mu=F(1, 7))
    report = verify(example1, forged)
    assert not report.passed
    assert report.check('residual').status == FAIL
    assert report.check('oracle').status == FAIL
