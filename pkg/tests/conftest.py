#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Configuration globale des tests
Contient les fixtures partagées entre tous les tests
"""

import os
import sys
import logging
from pathlib import Path

import pytest

# Ajouter le répertoire parent au PYTHONPATH
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from chebyshev_elim.core import config
from chebyshev_elim.cli.datasets import EXAMPLE_1, EXAMPLE_2
from chebyshev_elim.solver.problem import ProblemInstance

# Configuration du logging pour les tests
logging.basicConfig(
    level=logging.DEBUG,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.StreamHandler(sys.stdout)
    ]
)


@pytest.fixture(autouse=True)
def reset_config():
    """Remet la configuration globale aux valeurs par défaut après chaque test"""
    yield
    config.reset()


@pytest.fixture(scope="session")
def test_logger():
    """Fixture fournissant un logger configuré pour les tests"""
    logger = logging.getLogger('test')
    logger.setLevel(logging.DEBUG)
    return logger


@pytest.fixture(scope="session")
def example1() -> ProblemInstance:
    """Instance à trois paramètres et quatre observations"""
    return EXAMPLE_1.problem()


@pytest.fixture(scope="session")
def example2() -> ProblemInstance:
    """Instance à trois paramètres et dix observations"""
    return EXAMPLE_2.problem()


@pytest.fixture
def test_config(tmp_path) -> Path:
    """Fichier INI de test qui modifie quelques réglages"""
    path = tmp_path / 'chebyshev.ini'
    path.write_text(
        "[solver]\n"
        "selector = lower\n"
        "workers = 2\n"
        "[budget]\n"
        "max_entries = 5000\n"
        "[output]\n"
        "format = json\n",
        encoding='utf-8',
    )
    return path


@pytest.fixture
def write_csv(tmp_path):
    """Fabrique de fichiers CSV : write_csv(lignes, en_tete=None)"""
    counter = {'n': 0}

    def _write(rows, header=None):
        counter['n'] += 1
        path = tmp_path / f"instance_{counter['n']}.csv"
        lines = []
        if header is not None:
            lines.append(",".join(header))
        lines.extend(",".join(str(v) for v in row) for row in rows)
        path.write_text("\n".join(lines) + "\n", encoding='utf-8')
        return path

    return _write
