#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Contraintes de boîte et substitution avant
==========================================

Pour chaque niveau n, les lignes i de X_n telles que X_in != 0 donnent

    T_ij = X_ij / X_in,   L_i = Y_i / X_in - mu / |X_in|,   U_i = Y_i / X_in + mu / |X_in|

et les valeurs optimales de theta_n, une fois theta_1..theta_{n-1} fixés,
forment l'intervalle

    max(L_n - T_n theta_{n-1}) <= theta_n <= min(U_n - T_n theta_{n-1}).

La substitution avant parcourt n = 1..N et choisit theta_n dans sa boîte
au moyen d'un sélecteur (borne inférieure, milieu, borne supérieure ou
valeurs imposées).
"""

import logging
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from ..core.errors import ConfigurationError, DimensionMismatchError, EmptyBoxError, InternalSolverError
from ..core.numeric import NumericField, freeze
from .elimination import (
    DEFAULT_OPTIONS,
    EliminationOptions,
    EliminationResult,
    EliminationStage,
    backward_eliminate,
    check_budget,
    count_entries,
)
from .problem import ProblemInstance, chebyshev_residual, validate, zero_heavy_column_order

logger = logging.getLogger(__name__)

Bounds = Tuple[Optional[Any], Optional[Any]]


@dataclass(frozen=True, eq=False)
class BoxSpec:
    """Données T_n, L_n, U_n de la contrainte de boîte du paramètre theta_n"""

    level: int
    t: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    field: NumericField

    @property
    def rows(self) -> int:
        return self.lower.shape[0]

    @property
    def free(self) -> bool:
        """Aucune ligne : theta_n n'est pas contraint"""
        return self.rows == 0


@dataclass(frozen=True)
class Selector:
    """Règle de choix de theta_n dans sa boîte"""

    kind: str = "midpoint"
    values: Optional[Tuple[Any, ...]] = None

    @classmethod
    def custom(cls, values: Sequence[Any]) -> "Selector":
        return cls("custom", tuple(values))

    @classmethod
    def parse(cls, text: str) -> "Selector":
        """lower | midpoint | upper | liste de valeurs séparées par des virgules"""
        text = text.strip()
        if text in ("lower", "midpoint", "upper"):
            return cls(text)
        if text.startswith("custom:"):
            text = text[len("custom:"):]
        values = tuple(v.strip() for v in text.split(",") if v.strip())
        if not values:
            raise ConfigurationError(f"Sélecteur invalide : {text!r}")
        return cls.custom(values)

    def permuted(self, order: Sequence[int]) -> "Selector":
        """Valeurs imposées réordonnées dans l'ordre d'élimination"""
        if self.values is None:
            return self
        return Selector(self.kind, tuple(self.values[j] for j in order))

    def pick(self, level: int, bounds: Bounds, field: NumericField) -> Any:
        lower, upper = bounds
        if self.kind == "custom":
            if self.values is None or level > len(self.values):
                raise ConfigurationError(f"Aucune valeur imposée pour theta_{level}")
            value = field.scalar(self.values[level - 1])
            if lower is not None and not (field.le(lower, value) and field.le(value, upper)):
                raise EmptyBoxError(level, lower, upper, f"valeur imposée {field.render(value)} hors de la boîte")
            return value
        if lower is None:
            # boîte libre
            return field.zero
        if self.kind == "lower":
            return lower
        if self.kind == "upper":
            return upper
        if self.kind == "midpoint":
            return (lower + upper) / 2
        raise ConfigurationError(f"Sélecteur inconnu : {self.kind}")


@dataclass(frozen=True, eq=False)
class Solution:
    """
    Solution du problème minimax.

    theta et bounds sont exprimés dans l'ordre des colonnes de l'instance ;
    boxes suit l'ordre d'élimination (colonne j <- colonne column_order[j]).
    """

    mu: Any
    theta: Tuple[Any, ...]
    boxes: Tuple[BoxSpec, ...]
    selector: Selector
    bounds: Tuple[Bounds, ...]
    column_order: Tuple[int, ...]
    entries: int
    field: NumericField

    def box_at(self, prefix: Sequence[Any]) -> Bounds:
        """Bornes de theta_{len(prefix)+1} pour un préfixe donné (ordre d'élimination)"""
        return box_bounds(self.boxes[len(prefix)], prefix)

    def elimination_theta(self) -> Tuple[Any, ...]:
        return tuple(self.theta[j] for j in self.column_order)


def box_spec(stage: EliminationStage, mu: Any) -> BoxSpec:
    """Construit T_n, L_n, U_n pour l'étape n (lignes avec X_in != 0, renumérotées)"""
    n = stage.level
    field = stage.field
    if n < 1:
        raise DimensionMismatchError("Pas de contrainte de boîte au niveau 0")
    last = stage.x[:, n - 1]
    keep = field.nonzero_mask(last)
    x, y, a = stage.x[keep], stage.y[keep], last[keep]
    if stage.rows and not len(a):
        logger.debug(f"Boîte de theta_{n} sans ligne : paramètre libre")
    t = field.divide(x[:, : n - 1], a[:, None])
    centre = field.divide(y, a)
    half = field.divide(mu, np.abs(a))
    return BoxSpec(
        level=n,
        t=freeze(t.reshape(len(a), n - 1)),
        lower=freeze(np.asarray(centre - half)),
        upper=freeze(np.asarray(centre + half)),
        field=field,
    )


def box_bounds(box: BoxSpec, theta_prefix: Sequence[Any]) -> Bounds:
    """
    Bornes (inférieure, supérieure) de theta_n une fois theta_1..theta_{n-1} fixés.

    Renvoie (None, None) pour une boîte libre.

    Raises:
        EmptyBoxError: borne inférieure > borne supérieure
    """
    field = box.field
    if len(theta_prefix) != box.level - 1:
        raise DimensionMismatchError(
            f"theta_{box.level} attend un préfixe de {box.level - 1} valeurs, {len(theta_prefix)} reçues"
        )
    if box.free:
        return None, None
    shift = field.matvec(box.t, field.vector(theta_prefix))
    lower = (box.lower - shift).max()
    upper = (box.upper - shift).min()
    if not field.le(lower, upper):
        raise EmptyBoxError(box.level, field.render(lower), field.render(upper))
    if lower > upper:
        # écart dans la tolérance du mode flottant
        lower = upper = (lower + upper) / 2
    return lower, upper


def forward_substitute(result: EliminationResult, selector: Selector = Selector()) -> Solution:
    """
    Phase avant : fixe theta_1, puis theta_2, ..., theta_N dans leurs boîtes.

    Raises:
        EmptyBoxError: préfixe hors boîte (valeur imposée) ou incohérence interne
    """
    field = result.field
    theta: List[Any] = []
    boxes: List[BoxSpec] = []
    bounds: List[Bounds] = []
    for n in range(1, result.n_params + 1):
        box = box_spec(result.stage(n), result.mu)
        lim = box_bounds(box, theta)
        value = selector.pick(n, lim, field)
        logger.debug(
            f"theta_{n} dans [{_render(field, lim[0])}, {_render(field, lim[1])}] -> {field.render(value)}"
        )
        theta.append(value)
        boxes.append(box)
        bounds.append(lim)
    order = tuple(range(result.n_params))
    return Solution(result.mu, tuple(theta), tuple(boxes), selector, tuple(bounds), order, count_entries(result), field)


def _render(field: NumericField, value: Optional[Any]) -> str:
    return "libre" if value is None else field.render(value)


def solve(
    problem: ProblemInstance,
    selector: Selector = Selector(),
    options: EliminationOptions = DEFAULT_OPTIONS,
    reorder_columns: bool = False,
    budget: Optional[int] = None,
) -> Solution:
    """
    Résout le problème minimax : élimination arrière puis substitution avant.

    Le résultat est certifié : le résidu de Tchebychev de theta doit égaler mu.

    Raises:
        ZeroColumnError, DimensionMismatchError: instance invalide
        BudgetExceededError: C(N, M) dépasse le budget
        InternalSolverError: certificat de résidu invalide
    """
    validate(problem)
    if budget is not None:
        check_budget(problem.n_params, problem.n_rows, budget)
    if selector.values is not None and len(selector.values) != problem.n_params:
        raise ConfigurationError(
            f"Le sélecteur custom attend {problem.n_params} valeurs, {len(selector.values)} fournies"
        )

    order = list(range(problem.n_params))
    work = problem
    if reorder_columns:
        order = zero_heavy_column_order(problem)
        if order != sorted(order):
            logger.info(f"Colonnes réordonnées pour l'élimination : {[j + 1 for j in order]}")
            work = problem.permute_columns(order)

    result = backward_eliminate(work, options)
    partial = forward_substitute(result, selector.permuted(order))

    theta: List[Any] = [None] * problem.n_params
    bounds: List[Bounds] = [(None, None)] * problem.n_params
    for j, original in enumerate(order):
        theta[original] = partial.theta[j]
        bounds[original] = partial.bounds[j]

    field = problem.field
    residual = chebyshev_residual(problem, theta)
    if not field.equal(residual, result.mu):
        raise InternalSolverError(
            f"Certificat invalide : résidu {field.render(residual)} != mu {field.render(result.mu)}"
        )
    return Solution(
        mu=result.mu,
        theta=tuple(theta),
        boxes=partial.boxes,
        selector=selector,
        bounds=tuple(bounds),
        column_order=tuple(order),
        entries=partial.entries,
        field=field,
    )
