#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Oracle par énumération de sommets
=================================

Le problème minimax s'écrit comme un programme linéaire en (theta, lambda) :

    min lambda   s.c.   lambda + x_i^T theta >= Y_i,   lambda - x_i^T theta >= -Y_i

L'oracle énumère tous les sous-systèmes de N+1 contraintes saturées, les
résout exactement avec sympy (forme échelonnée réduite), garde les sommets
admissibles et renvoie le plus petit lambda. Il ne partage avec le solveur
aucune routine d'algèbre linéaire et ne sert qu'à la vérification de
petites instances.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Any, List, NamedTuple, Optional, Sequence, Tuple

import sympy

from ..core.errors import GuardExceededError, InternalSolverError
from ..core.numeric import EXACT
from ..solver.problem import ProblemInstance, validate

logger = logging.getLogger(__name__)

DEFAULT_MAX_UNKNOWNS = 5
DEFAULT_MAX_ROWS = 10


class Constraint(NamedTuple):
    """Demi-espace a . (theta, lambda) >= b"""

    coefficients: Tuple[Fraction, ...]
    rhs: Fraction
    row: int
    sign: int

    def holds(self, point: Sequence[Fraction]) -> bool:
        return sum((a * v for a, v in zip(self.coefficients, point)), Fraction(0)) >= self.rhs


@dataclass(frozen=True)
class EpigraphLP:
    """Programme linéaire épigraphe : 2M contraintes en N+1 variables, objectif lambda"""

    constraints: Tuple[Constraint, ...]
    n_variables: int

    def feasible(self, point: Sequence[Fraction]) -> bool:
        return all(c.holds(point) for c in self.constraints)


class OracleResult(NamedTuple):
    mu: Fraction
    theta: Tuple[Fraction, ...]


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def column_basis(problem: ProblemInstance) -> List[int]:
    """Colonnes pivots (base 0) de X : une base de l'image de X"""
    exact = problem.to_field(EXACT)
    _, pivots = sympy.Matrix([[_to_sympy(v) for v in row] for row in exact.x]).rref()
    return list(pivots)


def vertex(subset: Sequence[Constraint]) -> Optional[Tuple[Fraction, ...]]:
    """Point où toutes les contraintes du sous-ensemble sont saturées, None si le système est singulier"""
    n = len(subset)
    augmented = sympy.Matrix([[_to_sympy(a) for a in c.coefficients] + [_to_sympy(c.rhs)] for c in subset])
    reduced, pivots = augmented.rref()
    if tuple(pivots) != tuple(range(n)):
        return None
    return tuple(_to_fraction(reduced[i, n]) for i in range(n))


def build_epigraph(problem: ProblemInstance) -> EpigraphLP:
    """Transcrit l'instance en 2M demi-espaces, par paires +/- pour chaque ligne"""
    exact = problem.to_field(EXACT)
    constraints: List[Constraint] = []
    for i in range(exact.n_rows):
        row = tuple(exact.x[i])
        y = exact.y[i]
        constraints.append(Constraint(row + (Fraction(1),), y, i, +1))
        constraints.append(Constraint(tuple(-v for v in row) + (Fraction(1),), -y, i, -1))
    return EpigraphLP(tuple(constraints), exact.n_params + 1)


def oracle_minimax(
    problem: ProblemInstance,
    max_unknowns: int = DEFAULT_MAX_UNKNOWNS,
    max_rows: int = DEFAULT_MAX_ROWS,
) -> OracleResult:
    """
    Minimum exact par énumération des sommets du programme épigraphe.

    Si X n'est pas de rang plein en colonnes, le polyèdre n'a pas de sommet :
    on résout sur une base de colonnes (même image, donc même mu) et les
    composantes retirées de theta valent 0. Entre sommets de même lambda,
    le theta lexicographiquement minimal est retenu.

    Raises:
        GuardExceededError: N + 1 > max_unknowns ou M > max_rows
        InternalSolverError: aucun sommet admissible
    """
    validate(problem)
    if problem.n_params + 1 > max_unknowns or problem.n_rows > max_rows:
        raise GuardExceededError(
            f"Instance trop grande pour l'oracle : N+1={problem.n_params + 1} (max {max_unknowns}), "
            f"M={problem.n_rows} (max {max_rows})"
        )
    exact = problem.to_field(EXACT)
    basis = column_basis(exact)
    reduced = exact if len(basis) == exact.n_params else exact.permute_columns(basis)
    if reduced is not exact:
        logger.debug(f"Oracle : X de rang {len(basis)}, colonnes retenues {[j + 1 for j in basis]}")

    lp = build_epigraph(reduced)
    best: Optional[Tuple[Fraction, Tuple[Fraction, ...]]] = None
    visited = 0
    for subset in combinations(lp.constraints, lp.n_variables):
        point = vertex(subset)
        if point is None or not lp.feasible(point):
            continue
        visited += 1
        candidate = (point[-1], tuple(point[:-1]))
        if best is None or candidate < best:
            best = candidate
    if best is None:
        raise InternalSolverError("Aucun sommet admissible dans le programme épigraphe")

    mu, reduced_theta = best
    theta = [Fraction(0)] * exact.n_params
    for value, j in zip(reduced_theta, basis):
        theta[j] = value
    logger.debug(f"Oracle : {visited} sommets admissibles, mu={mu}")
    return OracleResult(mu, tuple(theta))
