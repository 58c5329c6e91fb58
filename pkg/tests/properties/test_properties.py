#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests de propriétés sur des instances entières aléatoires
"""

import os
import sys
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

# Ajouter le répertoire parent au PYTHONPATH
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from chebyshev_elim.oracle.epigraph import oracle_minimax
from chebyshev_elim.solver.boxes import Selector, solve
from chebyshev_elim.solver.closed_form import solve_location, solve_one_param, solve_two_param
from chebyshev_elim.solver.elimination import EliminationOptions
from chebyshev_elim.solver.problem import ProblemInstance, chebyshev_residual

pytestmark = pytest.mark.properties

VALUES = st.integers(-3, 3)
WIDE_VALUES = st.integers(-5, 5)
SCALES = st.sampled_from([F(-3), F(-2), F(-1, 2), F(1, 3), F(2)])


@st.composite
def instances(draw, max_params=3, max_rows=6, min_rows=1, values=VALUES):
    """Instance (X, Y) à petits entiers, sans colonne nulle"""
    n = draw(st.integers(1, max_params))
    m = draw(st.integers(min_rows, max_rows))
    rows = draw(st.lists(st.lists(values, min_size=n, max_size=n), min_size=m, max_size=m))
    assume(all(any(row[j] for row in rows) for j in range(n)))
    y = draw(st.lists(values, min_size=m, max_size=m))
    return ProblemInstance.from_rows(rows, y)


def _rows(problem):
    return [list(row) for row in problem.x]


def _scaled(bounds, c):
    lower, upper = bounds
    if lower is None:
        return bounds
    lower, upper = lower / c, upper / c
    return (lower, upper) if c > 0 else (upper, lower)


@pytest.mark.timeout(600)
@settings(max_examples=100, deadline=None)
@given(instances(min_rows=2, values=WIDE_VALUES))
def test_oracle_equivalence(problem):
    """mu du solveur = mu de l'oracle (entrées dans [-5, 5], M de 2 à 6)"""
    assert solve(problem).mu == oracle_minimax(problem).mu


@settings(max_examples=50, deadline=None)
@given(instances(), st.sampled_from(["lower", "midpoint", "upper"]))
def test_residual_certificate(problem, kind):
    """Le résidu de theta égale mu pour chaque sélecteur"""
    solution = solve(problem, Selector(kind))
    assert chebyshev_residual(problem, solution.theta) == solution.mu


@settings(max_examples=50, deadline=None)
@given(instances(), st.data())
def test_box_soundness(problem, data):
    """Tout point des boîtes successives est optimal ; theta_1 hors de sa boîte ne l'est pas"""
    solution = solve(problem)
    prefix = []
    for _ in range(problem.n_params):
        lower, upper = solution.box_at(prefix)
        if lower is None:
            value = F(data.draw(st.integers(-2, 2)))
        else:
            value = lower + F(data.draw(st.integers(0, 4)), 4) * (upper - lower)
        prefix.append(value)
    assert chebyshev_residual(problem, prefix) == solution.mu

    lower, upper = solution.box_at([])
    if lower is not None:
        outside = [upper + F(1, 2)] + [F(0)] * (problem.n_params - 1)
        assert chebyshev_residual(problem, outside) > solution.mu


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(VALUES, VALUES), min_size=1, max_size=8))
def test_one_param_agreement(points):
    """Formule fermée à un paramètre = solveur général"""
    x = [p[0] for p in points]
    y = [p[1] for p in points]
    assume(any(x))
    closed = solve_one_param(x, y)
    general = solve(ProblemInstance.from_rows([(v,) for v in x], y))
    assert general.mu == closed.mu
    assert general.bounds[0] == (closed.theta_lower, closed.theta_upper)


@settings(max_examples=100, deadline=None)
@given(st.lists(VALUES, min_size=1, max_size=8))
def test_location_agreement(y):
    """Centre de l'étendue = solveur général sur une colonne de 1"""
    closed = solve_location(y)
    general = solve(ProblemInstance.from_rows([(1,)] * len(y), y))
    assert general.mu == closed.mu
    assert general.theta == (closed.theta,)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.tuples(VALUES, VALUES), min_size=2, max_size=6))
def test_two_param_agreement(points):
    """Régression affine fermée = solveur général sur les colonnes (1, X)"""
    x = [p[0] for p in points]
    y = [p[1] for p in points]
    assume(len(set(x)) >= 2)
    closed = solve_two_param(x, y)
    general = solve(ProblemInstance.from_rows([(1, v) for v in x], y))
    assert general.mu == closed.mu
    assert general.bounds[0] == closed.theta1_bounds
    assert general.bounds[1] == closed.theta2_bounds(general.theta[0])


@settings(max_examples=50, deadline=None)
@given(instances(), st.data())
def test_row_permutation_invariance(problem, data):
    """Permuter les lignes ne change ni mu ni la boîte de theta_1"""
    order = data.draw(st.permutations(range(problem.n_rows)))
    rows = _rows(problem)
    permuted = ProblemInstance.from_rows([rows[i] for i in order], [problem.y[i] for i in order])
    first, second = solve(problem), solve(permuted)
    assert second.mu == first.mu
    assert second.box_at([]) == first.box_at([])


@settings(max_examples=50, deadline=None)
@given(instances(), SCALES)
def test_output_scaling(problem, c):
    """Y -> cY : mu -> |c| mu et theta (milieux) -> c theta"""
    first = solve(problem)
    scaled = solve(problem.with_y([c * v for v in problem.y]))
    assert scaled.mu == abs(c) * first.mu
    assert scaled.theta == tuple(c * v for v in first.theta)


@settings(max_examples=50, deadline=None)
@given(instances(), SCALES, st.data())
def test_column_scaling(problem, c, data):
    """X_j -> c X_j : mu inchangé, bornes de theta_j divisées par c"""
    j = data.draw(st.integers(0, problem.n_params - 1))
    rows = [[v * c if col == j else v for col, v in enumerate(row)] for row in _rows(problem)]
    first = solve(problem)
    scaled = solve(ProblemInstance.from_rows(rows, list(problem.y)))
    assert scaled.mu == first.mu
    assert scaled.bounds[j] == _scaled(first.bounds[j], c)


@settings(max_examples=50, deadline=None)
@given(instances())
def test_compaction_invariance(problem):
    """Doublons et lignes nulles retirés : même mu et même theta"""
    first = solve(problem)
    compact = solve(problem, options=EliminationOptions(dedupe=True, prune_zero_rows=True))
    assert compact.mu == first.mu
    assert compact.theta == first.theta
    assert compact.entries <= first.entries
