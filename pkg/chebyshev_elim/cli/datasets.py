#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Jeux de données de référence
============================

Deux problèmes à trois paramètres dont la solution exacte est connue,
utilisés par la commande demo et par les tests.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from ..core.numeric import EXACT, NumericField
from ..solver.problem import ProblemInstance

F = Fraction


@dataclass(frozen=True)
class ReferenceCase:
    """Instance de référence et résultats attendus"""

    name: str
    x: Tuple[Tuple[int, ...], ...]
    y: Tuple[int, ...]
    mu: Fraction
    theta: Tuple[Fraction, ...]
    entries: int

    def problem(self, field: NumericField = EXACT) -> ProblemInstance:
        return ProblemInstance.from_rows(self.x, self.y, field)


EXAMPLE_1 = ReferenceCase(
    name="example-1",
    x=(
        (3, -1, 2),
        (-1, -2, 2),
        (-2, 3, -1),
        (0, 2, -1),
    ),
    y=(2, 1, -1, 0),
    mu=F(2, 7),
    theta=(F(1, 3), F(5, 21), F(16, 21)),
    entries=153,
)

EXAMPLE_2 = ReferenceCase(
    name="example-2",
    x=(
        (3, -1, 2),
        (-1, -2, 2),
        (-2, 3, -1),
        (0, 2, -1),
        (1, 2, -1),
        (3, 1, 0),
        (1, 1, -1),
        (-1, -1, 2),
        (0, 3, 1),
        (2, 1, 0),
    ),
    y=(2, 1, -1, 0, 1, -1, 2, 0, 1, 3),
    mu=F(37, 18),
    theta=(F(1, 9), F(13, 18), F(8, 9)),
    entries=444_280,
)

REFERENCE_CASES = (EXAMPLE_1, EXAMPLE_2)
