#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Élimination arrière des paramètres
==================================

À chaque étape n, le paramètre theta_n est éliminé : chaque paire de lignes
(i, k), i < k, de (X_n | Y_n) produit une ligne de (X_{n-1} | Y_{n-1}) :

    X^{n-1}_j = (X_ij X_kn - X_kj X_in) / (|X_in| + |X_kn|)
    Y^{n-1}   = (Y_i  X_kn - Y_k  X_in) / (|X_in| + |X_kn|)

Les paires dont le dénominateur est nul sont retirées, puis les lignes
restantes sont renumérotées dans l'ordre des paires. Le minimum de
l'objectif est mu = max |Y_0|.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional, Tuple

import numpy as np

from ..core.errors import BudgetExceededError, ChebyshevError, DegenerateStageError
from ..core.numeric import NumericField, freeze
from .problem import ProblemInstance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EliminationOptions:
    """Options de l'élimination arrière"""

    dedupe: bool = False
    prune_zero_rows: bool = False
    strict_degenerate: bool = False
    workers: int = 1


DEFAULT_OPTIONS = EliminationOptions()


@dataclass(frozen=True, eq=False)
class EliminationStage:
    """Étape n de l'élimination : X_n (M_n x n) et Y_n (M_n)"""

    level: int
    x: np.ndarray
    y: np.ndarray
    field: NumericField
    degenerate_pairs: int = 0

    @property
    def rows(self) -> int:
        return self.y.shape[0]

    @property
    def entries(self) -> int:
        return self.rows * (self.level + 1)

    @property
    def decoupled(self) -> bool:
        """Dernière colonne entièrement nulle : theta_n n'intervient plus"""
        if self.level < 1 or self.rows == 0:
            return False
        return not self.field.nonzero_mask(self.x[:, self.level - 1]).any()


@dataclass(frozen=True, eq=False)
class EliminationResult:
    """Résultat de la phase arrière : étapes N..1, Y_0 et mu"""

    stages: Tuple[EliminationStage, ...]
    final: EliminationStage
    mu: Any

    @property
    def y0(self) -> np.ndarray:
        return self.final.y

    @property
    def field(self) -> NumericField:
        return self.final.field

    @property
    def n_params(self) -> int:
        return self.stages[0].level

    def stage(self, level: int) -> EliminationStage:
        """Étape de niveau donné (1..N)"""
        return self.stages[self.n_params - level]

    @property
    def row_counts(self) -> List[int]:
        """M_N, ..., M_1, M_0"""
        return [stage.rows for stage in self.stages] + [self.final.rows]


def pair_position(i: int, k: int, m: int) -> int:
    """Rang (base 1) de la paire (i, k), 1 <= i < k <= m, dans l'énumération"""
    return m * (i - 1) - i * (i - 1) // 2 + k - 1


def enumerate_pairs(m: int) -> Tuple[np.ndarray, np.ndarray]:
    """Indices (base 0) des paires i < k dans l'ordre ligne par ligne"""
    return np.triu_indices(m, k=1)


def _combine(stage: EliminationStage, ii: np.ndarray, kk: np.ndarray, den: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    n = stage.level
    last = stage.x[:, n - 1]
    a_i, a_k = last[ii], last[kk]
    combined = stage.x[ii, : n - 1] * a_k[:, None] - stage.x[kk, : n - 1] * a_i[:, None]
    x_new = stage.field.divide(combined, den[:, None])
    y_new = stage.field.divide(stage.y[ii] * a_k - stage.y[kk] * a_i, den)
    return x_new, y_new


def _combine_pairs(stage: EliminationStage, ii: np.ndarray, kk: np.ndarray, den: np.ndarray, workers: int) -> Tuple[np.ndarray, np.ndarray]:
    if workers <= 1 or len(ii) < 2 * workers:
        return _combine(stage, ii, kk, den)
    chunks = list(zip(np.array_split(ii, workers), np.array_split(kk, workers), np.array_split(den, workers)))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        # map conserve l'ordre des blocs
        parts = list(executor.map(lambda c: _combine(stage, *c), chunks))
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


def _sign_key(field: NumericField, row: Tuple[Any, ...]) -> Tuple[Any, ...]:
    for value in row:
        if not field.is_zero(value):
            return tuple(-v for v in row) if value < 0 else row
    return row


def _compact(field: NumericField, x: np.ndarray, y: np.ndarray, options: EliminationOptions) -> Tuple[np.ndarray, np.ndarray, int, int]:
    """Retire les lignes nulles et les doublons selon les options"""
    pruned = deduped = 0
    if options.prune_zero_rows and len(y):
        keep = field.nonzero_mask(y)
        if x.shape[1]:
            keep = keep | field.nonzero_mask(x).any(axis=1)
        pruned = int(len(y) - keep.sum())
        x, y = x[keep], y[keep]
    if options.dedupe and len(y):
        seen = set()
        keep_idx = []
        for r in range(len(y)):
            key = _sign_key(field, tuple(x[r]) + (y[r],))
            if key not in seen:
                seen.add(key)
                keep_idx.append(r)
        deduped = len(y) - len(keep_idx)
        x, y = x[keep_idx], y[keep_idx]
    return x, y, pruned, deduped


def eliminate_step(stage: EliminationStage, options: EliminationOptions = DEFAULT_OPTIONS) -> EliminationStage:
    """
    Élimine theta_n et renvoie l'étape n-1.

    Les lignes issues de paires dégénérées (|X_in| + |X_kn| = 0) sont
    retirées en conservant l'ordre des paires. Si la dernière colonne de
    X_n est entièrement nulle, theta_n est découplé : l'étape suivante
    garde les mêmes lignes sans cette colonne (la borne M_n (M_n - 1) / 2
    ne vaut alors pas).

    Raises:
        DegenerateStageError: colonne découplée en mode strict
    """
    n = stage.level
    if n < 1:
        raise ChebyshevError("Aucun paramètre à éliminer à l'étape 0")
    field = stage.field
    m = stage.rows

    if stage.decoupled:
        if options.strict_degenerate:
            raise DegenerateStageError(n)
        logger.warning(
            f"Dernière colonne de X_{n} nulle : theta_{n} est libre, "
            f"l'étape {n - 1} reprend les {m} lignes sans cette colonne"
        )
        x_new, y_new, degenerate = stage.x[:, : n - 1].copy(), stage.y.copy(), 0
    else:
        ii, kk = enumerate_pairs(m)
        last = stage.x[:, n - 1]
        den = np.abs(last[ii]) + np.abs(last[kk])
        keep = field.nonzero_mask(den)
        degenerate = int(len(den) - keep.sum())
        x_new, y_new = _combine_pairs(stage, ii[keep], kk[keep], den[keep], options.workers)

    x_new, y_new, pruned, deduped = _compact(field, x_new, y_new, options)
    logger.debug(
        f"Étape {n} -> {n - 1} : M={m} -> {len(y_new)} "
        f"(paires dégénérées {degenerate}, lignes nulles {pruned}, doublons {deduped})"
    )
    return EliminationStage(
        level=n - 1,
        x=freeze(x_new.reshape(len(y_new), n - 1)),
        y=freeze(y_new),
        field=field,
        degenerate_pairs=degenerate,
    )


def backward_eliminate(problem: ProblemInstance, options: EliminationOptions = DEFAULT_OPTIONS) -> EliminationResult:
    """
    Phase arrière : calcule X_n, Y_n pour n = N..1, puis Y_0 et mu = max |Y_0|.

    mu vaut 0 lorsque Y_0 est vide (système résoluble exactement).
    """
    start = time.perf_counter()
    stage = EliminationStage(problem.n_params, problem.x, problem.y, problem.field)
    stages = [stage]
    logger.info(f"Élimination arrière : N={problem.n_params}, M={problem.n_rows}")
    while stage.level > 0:
        stage = eliminate_step(stage, options)
        if stage.level > 0:
            stages.append(stage)
    field = problem.field
    mu = np.abs(stage.y).max() if stage.rows else field.zero
    result = EliminationResult(tuple(stages), stage, mu)
    logger.info(
        f"Élimination terminée en {(time.perf_counter() - start) * 1000:.1f} ms : "
        f"mu={field.render(mu)}, |Y_0|={stage.rows}, entrées={count_entries(result)}"
    )
    return result


def count_entries(result: EliminationResult) -> int:
    """Nombre d'entrées calculées : X_{N-1}..X_1, Y_{N-1}..Y_1 et Y_0"""
    return sum(stage.entries for stage in result.stages[1:]) + result.final.entries


def complexity_bound(n_params: int, n_rows: int) -> Fraction:
    """Majorant C(N, M) = sum_{l=1..N} 2 (N-l+1) (M/2)^(2^l) du nombre d'entrées"""
    if n_params < 1 or n_rows < 2:
        raise ChebyshevError(f"C(N, M) exige N >= 1 et M >= 2 (reçu N={n_params}, M={n_rows})")
    half = Fraction(n_rows, 2)
    return sum(
        (2 * (n_params - l + 1) * half ** (2 ** l) for l in range(1, n_params + 1)),
        Fraction(0),
    )


def check_budget(n_params: int, n_rows: int, budget: int) -> Optional[Fraction]:
    """
    Refuse une instance dont le majorant C(N, M) dépasse le budget.

    Renvoie le majorant (None si M < 2, aucun calcul de paire).

    Raises:
        BudgetExceededError: C(N, M) > budget
    """
    if n_rows < 2:
        return None
    bound = complexity_bound(n_params, n_rows)
    if bound > budget:
        raise BudgetExceededError(n_params, n_rows, bound, budget)
    return bound
