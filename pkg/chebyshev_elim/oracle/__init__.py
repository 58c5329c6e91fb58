#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Oracle de vérification indépendant (petites instances)"""

from .epigraph import Constraint, EpigraphLP, OracleResult, build_epigraph, oracle_minimax
from .verify import CheckResult, VerificationReport, verify

__all__ = [
    "Constraint",
    "EpigraphLP",
    "OracleResult",
    "build_epigraph",
    "oracle_minimax",
    "CheckResult",
    "VerificationReport",
    "verify",
]
