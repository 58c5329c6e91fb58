#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Vérification d'une solution
===========================

Trois contrôles indépendants : résidu égal à mu, comparaison avec l'oracle
(si l'instance est dans la garde) et appartenance de theta à ses boîtes.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from ..core.errors import EmptyBoxError
from ..solver.boxes import Solution, box_bounds
from ..solver.problem import ProblemInstance, chebyshev_residual
from .epigraph import DEFAULT_MAX_ROWS, DEFAULT_MAX_UNKNOWNS, oracle_minimax

logger = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL


@dataclass(frozen=True)
class VerificationReport:
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        """Vrai si tous les contrôles exécutés ont réussi"""
        return all(check.passed for check in self.checks)

    def check(self, name: str) -> CheckResult:
        return next(c for c in self.checks if c.name == name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks],
        }


def _residual_check(problem: ProblemInstance, solution: Solution) -> CheckResult:
    field = problem.field
    residual = chebyshev_residual(problem, solution.theta)
    detail = f"résidu {field.render(residual)}, mu {field.render(solution.mu)}"
    return CheckResult("residual", PASS if field.equal(residual, solution.mu) else FAIL, detail)


def _oracle_check(problem: ProblemInstance, solution: Solution, max_unknowns: int, max_rows: int) -> CheckResult:
    field = problem.field
    if problem.n_params + 1 > max_unknowns or problem.n_rows > max_rows:
        return CheckResult("oracle", SKIPPED, "oracle skipped : instance hors garde")
    result = oracle_minimax(problem, max_unknowns, max_rows)
    oracle_mu = field.scalar(result.mu)
    detail = f"oracle {field.render(oracle_mu)}, solveur {field.render(solution.mu)}"
    return CheckResult("oracle", PASS if field.equal(oracle_mu, solution.mu) else FAIL, detail)


def _box_check(solution: Solution) -> CheckResult:
    field = solution.field
    theta = solution.elimination_theta()
    failures: List[str] = []
    for n, box in enumerate(solution.boxes, start=1):
        try:
            lower, upper = box_bounds(box, theta[: n - 1])
        except EmptyBoxError as e:
            failures.append(str(e))
            continue
        if lower is None:
            continue
        value = theta[n - 1]
        if not (field.le(lower, value) and field.le(value, upper)):
            failures.append(
                f"theta_{n}={field.render(value)} hors de [{field.render(lower)}, {field.render(upper)}]"
            )
    if failures:
        return CheckResult("boxes", FAIL, "; ".join(failures))
    return CheckResult("boxes", PASS, f"{len(solution.boxes)} boîtes respectées")


def verify(
    problem: ProblemInstance,
    solution: Solution,
    max_unknowns: int = DEFAULT_MAX_UNKNOWNS,
    max_rows: int = DEFAULT_MAX_ROWS,
) -> VerificationReport:
    """Vérifie une solution ; le rapport porte un statut par contrôle"""
    checks = (
        _residual_check(problem, solution),
        _oracle_check(problem, solution, max_unknowns, max_rows),
        _box_check(solution),
    )
    for check in checks:
        log = logger.info if check.passed else logger.error
        log(f"Contrôle {check.name} : {check.status} ({check.detail})")
    return VerificationReport(checks)
