#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests de propriétés du noyau numérique : grammaire, forme canonique et
axiomes de corps sur des rationnels aléatoires
"""

import os
import sys
from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

# Ajouter le répertoire parent au PYTHONPATH
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '../..')))

from chebyshev_elim.core.errors import InternalSolverError
from chebyshev_elim.core.numeric import EXACT, rational_parse, rational_render

pytestmark = pytest.mark.properties

RATIONALS = st.fractions(max_denominator=10**6)
DIGITS = st.text(alphabet="0123456789", min_size=1, max_size=12)


def _canonical(value):
    return isinstance(value, F) and value.denominator > 0 and gcd(value.numerator, value.denominator) == 1


@st.composite
def decimal_texts(draw):
    """Décimal fini "±e.f" et sa valeur exacte"""
    sign = draw(st.sampled_from(["", "+", "-"]))
    whole = draw(DIGITS)
    frac = draw(DIGITS)
    value = F(int(whole + frac), 10 ** len(frac))
    return f"{sign}{whole}.{frac}", -value if sign == "-" else value


@given(RATIONALS)
def test_render_parse_round_trip(r):
    """rational_parse(rational_render(r)) == r, sous forme canonique"""
    text = rational_render(r)
    parsed = rational_parse(text)
    assert parsed == r
    assert _canonical(parsed)
    assert ("/" in text) == (r.denominator != 1)


@given(st.integers(-10**9, 10**9), st.integers(1, 10**9))
def test_fraction_text_is_reduced(p, q):
    """ "p/q" est lu sous forme réduite, quel que soit le facteur commun"""
    value = rational_parse(f"{p}/{q}")
    assert value == F(p, q)
    assert _canonical(value)


@given(decimal_texts())
def test_decimal_parse_is_exact(case):
    """Un décimal fini est converti exactement, sans arrondi"""
    text, expected = case
    value = rational_parse(text)
    assert value == expected
    assert _canonical(value)


@given(RATIONALS, RATIONALS, RATIONALS)
def test_field_axioms(a, b, c):
    """Associativité, commutativité et distributivité sur les tableaux du corps exact"""
    u, v, w = EXACT.vector([a, b]), EXACT.vector([b, c]), EXACT.vector([c, a])
    assert list((u + v) + w) == list(u + (v + w))
    assert list((u * v) * w) == list(u * (v * w))
    assert list(u * v) == list(v * u)
    assert list(u * (v + w)) == list(u * v + u * w)
    assert all(_canonical(x) for x in (u * (v + w)))


@given(RATIONALS)
def test_inverses(a):
    """Opposé et inverse ; la division par zéro est refusée"""
    u = EXACT.vector([a])
    assert list(u + (-u)) == [0]
    if a == 0:
        with pytest.raises(InternalSolverError):
            EXACT.divide(u, u)
    else:
        assert list(EXACT.divide(u, u)) == [1]
        assert EXACT.divide(F(1), a) * a == 1


@given(RATIONALS, RATIONALS, RATIONALS)
def test_total_order(a, b, c):
    """L'ordre des rationnels est total et transitif, compatible avec abs"""
    assert (a < b) + (a == b) + (a > b) == 1
    if a <= b and b <= c:
        assert a <= c
    assert abs(-a) == abs(a) >= 0


@given(RATIONALS, RATIONALS)
def test_matvec_stays_exact(a, b):
    """Le produit matrice-vecteur reste dans les rationnels canoniques"""
    product = EXACT.matvec(EXACT.matrix([[a, b], [b, a]]), EXACT.vector([b, a]))
    assert list(product) == [2 * a * b, b * b + a * a]
    assert all(_canonical(x) for x in product)
