#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Instances du problème minimax
=============================

Une instance est la donnée (X, Y) d'un système surdéterminé X theta ~ Y,
où l'on cherche theta minimisant max_i |x_i^T theta - Y_i|.
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import DimensionMismatchError, ZeroColumnError
from ..core.numeric import EXACT, NumericField

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ProblemInstance:
    """Données X (M x N) et Y (M) d'un problème d'approximation de Tchebychev"""

    x: np.ndarray
    y: np.ndarray
    field: NumericField = EXACT
    column_names: Optional[Tuple[str, ...]] = None

    @classmethod
    def from_rows(
        cls,
        rows: Sequence[Sequence[Any]],
        y: Sequence[Any],
        field: NumericField = EXACT,
        column_names: Optional[Sequence[str]] = None,
    ) -> "ProblemInstance":
        """Construit une instance depuis des lignes (entiers, Fraction ou textes)"""
        n_cols = len(rows[0]) if len(rows) else 0
        names = tuple(column_names) if column_names is not None else None
        return cls(field.matrix(rows, n_cols), field.vector(y), field, names)

    @property
    def n_rows(self) -> int:
        return self.x.shape[0]

    @property
    def n_params(self) -> int:
        return self.x.shape[1]

    def column_name(self, j: int) -> Optional[str]:
        if self.column_names and j < len(self.column_names):
            return self.column_names[j]
        return None

    def with_y(self, y: Sequence[Any]) -> "ProblemInstance":
        return ProblemInstance(self.x, self.field.vector(y), self.field, self.column_names)

    def permute_columns(self, order: Sequence[int]) -> "ProblemInstance":
        """Instance dont la colonne j est la colonne order[j] de l'original"""
        x = self.x[:, list(order)].copy()
        x.setflags(write=False)
        names = tuple(self.column_names[j] for j in order) if self.column_names else None
        return ProblemInstance(x, self.y, self.field, names)

    def to_field(self, field: NumericField) -> "ProblemInstance":
        if field is self.field:
            return self
        return ProblemInstance(field.convert(self.x), field.convert(self.y), field, self.column_names)


def validate(problem: ProblemInstance) -> ProblemInstance:
    """
    Vérifie qu'une instance est admissible.

    Chaque colonne de X doit contenir au moins une valeur non nulle et le
    nombre de lignes de X doit égaler la taille de Y.

    Raises:
        DimensionMismatchError: dimensions incohérentes ou instance vide
        ZeroColumnError: colonne entièrement nulle (index base 1)
    """
    x, y = problem.x, problem.y
    if x.ndim != 2 or y.ndim != 1:
        raise DimensionMismatchError("X doit être une matrice et Y un vecteur")
    if x.shape[0] != y.shape[0]:
        raise DimensionMismatchError(
            f"X a {x.shape[0]} lignes mais Y a {y.shape[0]} entrées"
        )
    if x.shape[0] < 1 or x.shape[1] < 1:
        raise DimensionMismatchError(f"Instance vide : X de taille {x.shape[0]}x{x.shape[1]}")
    for j in range(x.shape[1]):
        if not problem.field.nonzero_mask(x[:, j]).any():
            raise ZeroColumnError(j + 1, problem.column_name(j))
    logger.debug(f"Instance validée : M={problem.n_rows}, N={problem.n_params}")
    return problem


def chebyshev_residual(problem: ProblemInstance, theta: Sequence[Any]) -> Any:
    """Norme de Tchebychev du résidu : max_i |sum_j X_ij theta_j - Y_i|"""
    field = problem.field
    if len(theta) != problem.n_params:
        raise DimensionMismatchError(
            f"theta a {len(theta)} composantes, {problem.n_params} attendues"
        )
    if problem.n_rows == 0:
        return field.zero
    residuals = field.matvec(problem.x, field.vector(theta)) - problem.y
    return np.abs(residuals).max()


def zero_heavy_column_order(problem: ProblemInstance) -> List[int]:
    """
    Ordre des colonnes pour l'heuristique de réordonnancement.

    Tri stable par nombre croissant de zéros : la colonne la plus creuse
    passe en dernier et est éliminée la première.
    """
    zeros = [
        int((~problem.field.nonzero_mask(problem.x[:, j])).sum())
        for j in range(problem.n_params)
    ]
    return sorted(range(problem.n_params), key=lambda j: zeros[j])
