#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exceptions de chebyshev-elim
============================

Toutes les erreurs du solveur dérivent de ChebyshevError, elle-même une
ValueError. Les commandes de la CLI les interceptent et les traduisent en
codes de sortie.
"""

from typing import Any, Optional


class ChebyshevError(ValueError):
    """Erreur de base du solveur"""


class RationalParseError(ChebyshevError):
    """Texte qui ne respecte pas la grammaire des rationnels"""

    def __init__(self, text: str, reason: str = "format invalide"):
        self.text = text
        self.reason = reason
        super().__init__(f"Rationnel invalide {text!r}: {reason}")


class DimensionMismatchError(ChebyshevError):
    """Dimensions incompatibles"""


class ZeroColumnError(ChebyshevError):
    """Colonne de X entièrement nulle : le paramètre associé doit être retiré"""

    def __init__(self, column: int, name: Optional[str] = None):
        self.column = column
        self.name = name
        label = f"{column} ({name})" if name else str(column)
        super().__init__(
            f"La colonne {label} de X est entièrement nulle ; "
            f"le paramètre correspondant n'influe pas sur l'objectif et doit être retiré"
        )


class EmptyBoxError(ChebyshevError):
    """Contrainte de boîte vide (borne inférieure > borne supérieure)"""

    def __init__(self, level: int, lower: Any, upper: Any, detail: str = ""):
        self.level = level
        self.lower = lower
        self.upper = upper
        message = f"Boîte vide pour theta_{level}: [{lower}, {upper}]"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class DegenerateStageError(ChebyshevError):
    """Dernière colonne d'une étape réduite entièrement nulle (mode strict)"""

    def __init__(self, level: int):
        self.level = level
        super().__init__(
            f"La dernière colonne de X_{level} est entièrement nulle : "
            f"theta_{level} n'intervient plus dans le problème réduit"
        )


class BudgetExceededError(ChebyshevError):
    """Borne a priori C(N, M) supérieure au budget d'entrées"""

    def __init__(self, n_params: int, n_rows: int, bound: Any, budget: int):
        self.n_params = n_params
        self.n_rows = n_rows
        self.bound = bound
        self.budget = budget
        super().__init__(
            f"Budget dépassé : C({n_params},{n_rows}) = {bound} > {budget} entrées"
        )


class GuardExceededError(ChebyshevError):
    """Instance trop grande pour l'oracle par énumération de sommets"""


class InternalSolverError(ChebyshevError, RuntimeError):
    """Incohérence interne (certificat, dénominateur nul, oracle sans sommet)"""


class InputFileError(ChebyshevError):
    """Erreur de lecture d'un fichier de données"""

    def __init__(self, message: str, row: Optional[int] = None, column: Optional[int] = None):
        self.row = row
        self.column = column
        if row is not None and column is not None:
            message = f"{message} (ligne {row}, colonne {column})"
        elif row is not None:
            message = f"{message} (ligne {row})"
        super().__init__(message)


class ConfigurationError(ChebyshevError):
    """Configuration d'exécution invalide"""
