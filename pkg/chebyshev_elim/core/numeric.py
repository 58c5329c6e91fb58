#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Noyau numérique de chebyshev-elim
=================================

Rationnels exacts (fractions.Fraction), lecture/rendu texte, et corps
numériques utilisés par tous les autres modules :

- ExactField : tableaux numpy d'objets Fraction, arithmétique exacte
- FloatField : tableaux numpy float64, tests de nullité à epsilon près

Le code des algorithmes est écrit une seule fois et ne dépend que de
l'interface NumericField.
"""

import re
import logging
from fractions import Fraction
from numbers import Rational
from typing import Any, Iterable, Optional, Sequence

import numpy as np

from .errors import ChebyshevError, DimensionMismatchError, InternalSolverError, RationalParseError

logger = logging.getLogger(__name__)

# Grammaire acceptée : entier, fraction p/q, décimal fini
_INTEGER_RE = re.compile(r"[-+]?[0-9]+")
_FRACTION_RE = re.compile(r"[-+]?[0-9]+/[0-9]+")
_DECIMAL_RE = re.compile(r"[-+]?(?:[0-9]+\.[0-9]*|\.[0-9]+)")

DEFAULT_EPSILON = 1e-9


def rational_parse(text: str) -> Fraction:
    """Convertit un texte en rationnel canonique, sans passer par les flottants"""
    if not isinstance(text, str):
        raise RationalParseError(repr(text), "une chaîne est attendue")
    stripped = text.strip()
    if not (
        _INTEGER_RE.fullmatch(stripped)
        or _FRACTION_RE.fullmatch(stripped)
        or _DECIMAL_RE.fullmatch(stripped)
    ):
        raise RationalParseError(text)
    try:
        return Fraction(stripped)
    except ZeroDivisionError:
        raise RationalParseError(text, "dénominateur nul") from None


def rational_render(value: Fraction) -> str:
    """Rendu canonique : "p" si q = 1, sinon "p/q" """
    return str(Fraction(value))


class NumericField:
    """Interface commune des corps numériques"""

    name = "abstract"
    dtype: Any = object
    epsilon = 0.0

    def scalar(self, value: Any) -> Any:
        raise NotImplementedError

    def render(self, value: Any) -> str:
        raise NotImplementedError

    def is_zero(self, value: Any) -> bool:
        raise NotImplementedError

    def nonzero_mask(self, values: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def le(self, a: Any, b: Any) -> bool:
        """a <= b (à epsilon près en mode flottant)"""
        raise NotImplementedError

    def equal(self, a: Any, b: Any) -> bool:
        return self.le(a, b) and self.le(b, a)

    def divide(self, numerator: Any, denominator: Any) -> Any:
        """
        Quotient (scalaire ou tableau) dont les diviseurs sont non nuls par construction.

        Raises:
            InternalSolverError: un diviseur est nul (filtre de lignes violé)
        """
        if not np.all(self.nonzero_mask(np.asarray(denominator, dtype=self.dtype))):
            raise InternalSolverError("Division par zéro : un dénominateur aurait dû être filtré")
        return numerator / denominator

    @property
    def zero(self) -> Any:
        return self.scalar(0)

    def vector(self, values: Iterable[Any]) -> np.ndarray:
        items = [self.scalar(v) for v in values]
        arr = np.empty(len(items), dtype=self.dtype)
        for i, item in enumerate(items):
            arr[i] = item
        return freeze(arr)

    def matrix(self, rows: Sequence[Sequence[Any]], n_cols: Optional[int] = None) -> np.ndarray:
        if n_cols is None:
            n_cols = len(rows[0]) if len(rows) else 0
        arr = np.empty((len(rows), n_cols), dtype=self.dtype)
        for i, row in enumerate(rows):
            if len(row) != n_cols:
                raise DimensionMismatchError(
                    f"Ligne {i + 1} : {len(row)} colonnes au lieu de {n_cols}"
                )
            for j, value in enumerate(row):
                arr[i, j] = self.scalar(value)
        return freeze(arr)

    def zeros(self, length: int) -> np.ndarray:
        return self.vector([0] * length)

    def convert(self, values: np.ndarray) -> np.ndarray:
        """Convertit un tableau quelconque dans ce corps"""
        if values.ndim == 1:
            return self.vector(values.tolist())
        return self.matrix(values.tolist(), values.shape[1])

    def matvec(self, matrix: np.ndarray, vector: np.ndarray) -> np.ndarray:
        if matrix.shape[1] != len(vector):
            raise DimensionMismatchError(
                f"Produit impossible : {matrix.shape[1]} colonnes pour un vecteur de taille {len(vector)}"
            )
        if matrix.shape[1] == 0:
            return self.zeros(matrix.shape[0])
        return matrix.dot(vector)


class ExactField(NumericField):
    """Arithmétique rationnelle exacte (mode par défaut)"""

    name = "exact"
    dtype = object

    def scalar(self, value: Any) -> Fraction:
        if isinstance(value, str):
            return rational_parse(value)
        if isinstance(value, bool):
            raise ChebyshevError(f"Valeur non numérique : {value!r}")
        if isinstance(value, (Rational, float, np.integer)):
            return Fraction(int(value)) if isinstance(value, np.integer) else Fraction(value)
        raise ChebyshevError(f"Valeur non numérique : {value!r}")

    def render(self, value: Any) -> str:
        return rational_render(value)

    def is_zero(self, value: Any) -> bool:
        return value == 0

    def nonzero_mask(self, values: np.ndarray) -> np.ndarray:
        return np.asarray(values != 0, dtype=bool)

    def le(self, a: Any, b: Any) -> bool:
        return a <= b


class FloatField(NumericField):
    """Arithmétique flottante approchée avec tolérance epsilon"""

    name = "float"
    dtype = np.float64

    def __init__(self, epsilon: float = DEFAULT_EPSILON):
        if epsilon < 0:
            raise ChebyshevError(f"Tolérance négative : {epsilon}")
        self.epsilon = epsilon

    def scalar(self, value: Any) -> float:
        if isinstance(value, str):
            return float(rational_parse(value))
        if isinstance(value, bool):
            raise ChebyshevError(f"Valeur non numérique : {value!r}")
        return float(value)

    def render(self, value: Any) -> str:
        return repr(float(value))

    def is_zero(self, value: Any) -> bool:
        return abs(value) <= self.epsilon

    def nonzero_mask(self, values: np.ndarray) -> np.ndarray:
        return np.abs(values) > self.epsilon

    def le(self, a: Any, b: Any) -> bool:
        return a <= b + self.epsilon * max(1.0, abs(a), abs(b))


EXACT = ExactField()


def get_field(mode: str = "exact", epsilon: float = DEFAULT_EPSILON) -> NumericField:
    """Renvoie le corps numérique correspondant au mode demandé"""
    if mode == "exact":
        return EXACT
    if mode == "float":
        return FloatField(epsilon)
    raise ChebyshevError(f"Mode numérique inconnu : {mode}")


def freeze(arr: np.ndarray) -> np.ndarray:
    """Rend un tableau immuable"""
    arr.setflags(write=False)
    return arr

