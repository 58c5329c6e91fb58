#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Mise en forme des résultats (JSON ou texte)
===========================================

Les rationnels sont toujours rendus sous forme de chaînes "p" ou "p/q".
"""

import json
from typing import Any, Dict, List, Optional

from ..oracle.verify import VerificationReport
from ..solver.boxes import Solution


def _value(solution: Solution, value: Optional[Any]) -> Optional[str]:
    return None if value is None else solution.field.render(value)


def solution_payload(solution: Solution, elapsed_ms: float) -> Dict[str, Any]:
    """Dictionnaire du schéma de sortie de la commande solve"""
    return {
        "mu": solution.field.render(solution.mu),
        "theta": [solution.field.render(v) for v in solution.theta],
        "boxes": [
            {"lower": _value(solution, lower), "upper": _value(solution, upper)}
            for lower, upper in solution.bounds
        ],
        "entries": solution.entries,
        "elapsed_ms": round(elapsed_ms, 3),
    }


def to_json(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def solution_text(payload: Dict[str, Any]) -> str:
    lines = [f"mu = {payload['mu']}"]
    for j, (value, box) in enumerate(zip(payload["theta"], payload["boxes"]), start=1):
        lower = box["lower"] if box["lower"] is not None else "-inf"
        upper = box["upper"] if box["upper"] is not None else "+inf"
        lines.append(f"theta_{j} = {value}    boîte [{lower}, {upper}]")
    lines.append(f"entrées calculées : {payload['entries']}")
    lines.append(f"durée : {payload['elapsed_ms']} ms")
    return "\n".join(lines)


def verification_text(report: VerificationReport) -> str:
    lines = [f"{c.name:<10} {c.status.upper():<8} {c.detail}" for c in report.checks]
    lines.append("PASS" if report.passed else "FAIL")
    return "\n".join(lines)


def demo_text(rows: List[Dict[str, Any]]) -> str:
    lines = []
    for row in rows:
        status = "PASS" if row["passed"] else "FAIL"
        lines.append(f"{status} {row['name']}")
        lines.append(f"    mu       attendu {row['expected']['mu']:<12} calculé {row['computed']['mu']}")
        lines.append(
            f"    theta    attendu {', '.join(row['expected']['theta']):<24} "
            f"calculé {', '.join(row['computed']['theta'])}"
        )
        note = "" if row["entries_checked"] else " (informatif)"
        lines.append(
            f"    entrées  attendu {row['expected']['entries']:<12} calculé {row['computed']['entries']}{note}"
        )
    return "\n".join(lines)
