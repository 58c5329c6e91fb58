#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Lecture des données CSV
=======================

Chaque ligne de données porte N valeurs de X puis la valeur de Y (dernière
colonne). Une première ligne entièrement non numérique est un en-tête.
"""

import csv
import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..core.errors import InputFileError, RationalParseError
from ..core.numeric import EXACT, NumericField, rational_parse
from ..solver.problem import ProblemInstance, validate

logger = logging.getLogger(__name__)


def _is_header(cells: List[str]) -> bool:
    for cell in cells:
        try:
            rational_parse(cell)
            return False
        except RationalParseError:
            continue
    return True


def ingest_csv(path: Union[str, Path], field: NumericField = EXACT) -> ProblemInstance:
    """
    Charge une instance depuis un fichier CSV.

    Raises:
        InputFileError: fichier illisible, cellule invalide (ligne, colonne en base 1),
            ou nombre de colonnes incohérent
        ZeroColumnError: colonne de X entièrement nulle (nommée d'après l'en-tête)
    """
    path = Path(path)
    if not path.exists():
        raise InputFileError(f"Fichier introuvable : {path}")

    header: Optional[List[str]] = None
    rows: List[Tuple[int, List[str]]] = []
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        for cells in reader:
            cells = [c.strip() for c in cells]
            if not any(cells):
                continue
            if header is None and not rows and _is_header(cells):
                header = cells
                logger.debug(f"En-tête détecté : {header}")
                continue
            rows.append((reader.line_num, cells))

    if not rows:
        raise InputFileError(f"Aucune ligne de données dans {path}")
    width = len(header) if header is not None else len(rows[0][1])
    if width < 2:
        raise InputFileError(f"Au moins deux colonnes sont attendues (X puis Y) dans {path}")

    x_rows: List[List[str]] = []
    y_values: List[str] = []
    for line, cells in rows:
        if len(cells) != width:
            raise InputFileError(f"{len(cells)} colonnes au lieu de {width}", row=line)
        for col, cell in enumerate(cells, start=1):
            try:
                rational_parse(cell)
            except RationalParseError as e:
                raise InputFileError(f"Valeur invalide {cell!r} : {e.reason}", row=line, column=col) from None
        x_rows.append(cells[:-1])
        y_values.append(cells[-1])

    names = header[:-1] if header is not None else None
    problem = validate(ProblemInstance.from_rows(x_rows, y_values, field, names))
    logger.info(f"Instance chargée depuis {path} : M={problem.n_rows}, N={problem.n_params}")
    return problem
