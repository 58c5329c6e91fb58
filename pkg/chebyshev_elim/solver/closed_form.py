#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Solutions directes des petits cas
=================================

- solve_location : min max |theta - Y_i|
- solve_one_param : min max |X_i theta - Y_i|
- solve_two_param : min max |theta_1 + X_i theta_2 - Y_i| (ordonnée et pente)

Ces formules fermées servent de raccourci et de contrôle croisé du solveur
général.
"""

import logging
from typing import Any, Callable, NamedTuple, Sequence, Tuple

import numpy as np

from ..core.errors import ChebyshevError, DimensionMismatchError, ZeroColumnError
from ..core.numeric import EXACT, NumericField
from .elimination import enumerate_pairs

logger = logging.getLogger(__name__)


class OneParamSolution(NamedTuple):
    mu: Any
    theta_lower: Any
    theta_upper: Any


class LocationSolution(NamedTuple):
    mu: Any
    theta: Any


class TwoParamSolution(NamedTuple):
    mu: Any
    theta1_bounds: Tuple[Any, Any]
    theta2_bounds: Callable[[Any], Tuple[Any, Any]]


def _vectors(x: Sequence[Any], y: Sequence[Any], field: NumericField) -> Tuple[np.ndarray, np.ndarray]:
    xv, yv = field.vector(x), field.vector(y)
    if len(xv) != len(yv):
        raise DimensionMismatchError(f"X a {len(xv)} entrées mais Y en a {len(yv)}")
    if not len(xv):
        raise DimensionMismatchError("Aucune observation")
    return xv, yv


def _max_or_zero(values: np.ndarray, field: NumericField) -> Any:
    return values.max() if len(values) else field.zero


def solve_location(y: Sequence[Any], field: NumericField = EXACT) -> LocationSolution:
    """mu = (max Y - min Y) / 2, theta = (max Y + min Y) / 2 (solution unique)"""
    yv = field.vector(y)
    if not len(yv):
        raise DimensionMismatchError("Aucune observation")
    top, bottom = yv.max(), yv.min()
    return LocationSolution((top - bottom) / 2, (top + bottom) / 2)


def solve_one_param(x: Sequence[Any], y: Sequence[Any], field: NumericField = EXACT) -> OneParamSolution:
    """
    Problème à un paramètre min_theta max_i |X_i theta - Y_i|.

    mu est le maximum, sur les paires i < k avec |X_i| + |X_k| != 0, de
    |Y_i X_k - Y_k X_i| / (|X_i| + |X_k|) ; les solutions forment l'intervalle
    [max(Y_i/X_i - mu/|X_i|), min(Y_i/X_i + mu/|X_i|)] sur les X_i non nuls.
    """
    xv, yv = _vectors(x, y, field)
    nonzero = field.nonzero_mask(xv)
    if not nonzero.any():
        raise ZeroColumnError(1)
    ii, kk = enumerate_pairs(len(xv))
    den = np.abs(xv[ii]) + np.abs(xv[kk])
    keep = field.nonzero_mask(den)
    ii, kk, den = ii[keep], kk[keep], den[keep]
    mu = _max_or_zero(field.divide(np.abs(yv[ii] * xv[kk] - yv[kk] * xv[ii]), den), field)

    a, b = xv[nonzero], yv[nonzero]
    centre, half = field.divide(b, a), field.divide(mu, np.abs(a))
    return OneParamSolution(mu, (centre - half).max(), (centre + half).min())


def solve_two_param(x: Sequence[Any], y: Sequence[Any], field: NumericField = EXACT) -> TwoParamSolution:
    """
    Régression affine min max_i |theta_1 + X_i theta_2 - Y_i|.

    Renvoie mu, l'intervalle des theta_1 optimaux et une fonction donnant
    l'intervalle des theta_2 optimaux pour un theta_1 fixé.

    Raises:
        ChebyshevError: toutes les abscisses X_i sont égales
    """
    xv, yv = _vectors(x, y, field)
    ii, kk = enumerate_pairs(len(xv))
    cross = yv[ii] * xv[kk] - yv[kk] * xv[ii]
    spread = np.abs(xv[ii]) + np.abs(xv[kk])
    slope = xv[kk] - xv[ii]

    distinct = field.nonzero_mask(slope)
    if not distinct.any():
        raise ChebyshevError("Toutes les abscisses sont égales : ordonnée et pente sont indiscernables")
    active = field.nonzero_mask(spread)

    # double maximum sur les paires (i, k) et (p, r)
    c1, s1, d1 = cross[active], spread[active], slope[active]
    c2, s2, d2 = cross[distinct], spread[distinct], slope[distinct]
    numerator = np.abs(np.multiply.outer(c1, d2) - np.multiply.outer(d1, c2))
    denominator = np.multiply.outer(s1, np.abs(d2)) + np.multiply.outer(np.abs(d1), s2)
    mu = field.divide(numerator, denominator).max()

    centre = field.divide(c2, d2)
    width = field.divide(s2, np.abs(d2))
    theta1_bounds = ((centre - width * mu).max(), (centre + width * mu).min())

    nonzero = field.nonzero_mask(xv)
    a, b = xv[nonzero], yv[nonzero]

    def theta2_bounds(theta1: Any) -> Tuple[Any, Any]:
        shifted = field.divide(b - field.scalar(theta1), a)
        half = field.divide(mu, np.abs(a))
        return (shifted - half).max(), (shifted + half).min()

    logger.debug(f"Régression affine : mu={field.render(mu)}")
    return TwoParamSolution(mu, theta1_bounds, theta2_bounds)
