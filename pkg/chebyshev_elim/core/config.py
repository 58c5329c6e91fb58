#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Module de configuration pour chebyshev-elim
===========================================

Gère le chargement et la sauvegarde des réglages du solveur (sélecteur,
mode numérique, budget d'entrées, garde de l'oracle, format de sortie),
et construit la configuration d'exécution RunConfig.
"""

import os
import logging
import configparser
from dataclasses import dataclass, replace
from typing import Any, Dict, Optional, Tuple

from .errors import ConfigurationError

logger = logging.getLogger(__name__)

# Configuration par défaut
DEFAULT_CONFIG = {
    "general": {
        "log_level": "INFO"
    },
    "solver": {
        "selector": "midpoint",  # lower, midpoint, upper
        "dedupe": False,
        "reorder_columns": False,
        "prune_zero_rows": False,
        "strict_degenerate": False,
        "workers": 1
    },
    "numeric": {
        "mode": "exact",  # exact, float
        "epsilon": 1e-9
    },
    "budget": {
        "max_entries": 10_000_000,
        "override": False
    },
    "oracle": {
        "max_unknowns": 5,  # N + 1
        "max_rows": 10
    },
    "output": {
        "format": "text"  # json, text
    }
}

SELECTOR_KINDS = ("lower", "midpoint", "upper", "custom")
NUMERIC_MODES = ("exact", "float")
OUTPUT_FORMATS = ("json", "text")

# Champ de RunConfig -> (section, option) du fichier INI
RUN_SETTINGS = {
    "selector": ("solver", "selector"),
    "dedupe": ("solver", "dedupe"),
    "reorder_columns": ("solver", "reorder_columns"),
    "prune_zero_rows": ("solver", "prune_zero_rows"),
    "strict_degenerate": ("solver", "strict_degenerate"),
    "workers": ("solver", "workers"),
    "mode": ("numeric", "mode"),
    "epsilon": ("numeric", "epsilon"),
    "budget": ("budget", "max_entries"),
    "override_budget": ("budget", "override"),
    "output_format": ("output", "format"),
    "oracle_max_unknowns": ("oracle", "max_unknowns"),
    "oracle_max_rows": ("oracle", "max_rows"),
}

# Instance du parser de configuration
_config = configparser.ConfigParser()


def initialize(config_path: Optional[str] = None) -> bool:
    """Charge les réglages par défaut du solveur, puis le fichier INI éventuel"""
    try:
        # Définit les valeurs par défaut
        for section, options in DEFAULT_CONFIG.items():
            if not _config.has_section(section):
                _config.add_section(section)
            for option, value in options.items():
                _config.set(section, option, str(value))

        # Charge la configuration si un chemin est fourni
        if config_path:
            if os.path.exists(config_path):
                _config.read(config_path)
                logger.info(f"Configuration chargée depuis {config_path}")
            else:
                logger.warning(f"Fichier de configuration introuvable : {config_path}")
                return False

        logger.debug("Configuration initialisée avec succès")
        return True
    except Exception as e:
        logger.error(f"Erreur lors de l'initialisation de la configuration: {str(e)}")
        return False


def get(section: str, option: str, default: Any = None) -> Any:
    """Récupère une valeur de configuration, typée d'après la valeur par défaut"""
    if default is None:
        default = DEFAULT_CONFIG.get(section, {}).get(option)
    try:
        if isinstance(default, bool):
            return _config.getboolean(section, option, fallback=default)
        elif isinstance(default, int):
            return _config.getint(section, option, fallback=default)
        elif isinstance(default, float):
            return _config.getfloat(section, option, fallback=default)
        else:
            return _config.get(section, option, fallback=default)
    except Exception as e:
        logger.error(f"Erreur lors de la récupération de la configuration {section}.{option}: {str(e)}")
        return default


def set(section: str, option: str, value: Any) -> bool:
    """Modifie un réglage (section solver, numeric, budget, oracle ou output)"""
    try:
        if not _config.has_section(section):
            _config.add_section(section)
        _config.set(section, option, str(value))
        return True
    except Exception as e:
        logger.error(f"Erreur lors de la définition de la configuration {section}.{option}: {str(e)}")
        return False


def save(config_path: str) -> bool:
    """Écrit les réglages courants dans un fichier INI"""
    try:
        with open(config_path, 'w') as f:
            _config.write(f)
        logger.info(f"Configuration sauvegardée dans {config_path}")
        return True
    except Exception as e:
        logger.error(f"Erreur lors de la sauvegarde de la configuration: {str(e)}")
        return False


def get_all() -> Dict[str, Dict[str, Any]]:
    """Réglages courants, typés, par section"""
    config_dict: Dict[str, Dict[str, Any]] = {}
    for section in _config.sections():
        config_dict[section] = {}
        for option in _config.options(section):
            config_dict[section][option] = get(section, option)
    return config_dict


def reset() -> bool:
    """Revient aux réglages par défaut (utilisé entre deux tests)"""
    global _config
    _config = configparser.ConfigParser()
    return initialize()


def save_run(run: "RunConfig", config_path: str) -> bool:
    """Enregistre les réglages effectifs d'une exécution (fichier puis ligne de commande)"""
    for field_name, (section, option) in RUN_SETTINGS.items():
        if field_name == "selector" and run.selector == "custom":
            logger.warning("Valeurs imposées du sélecteur non enregistrées")
            continue
        if not set(section, option, getattr(run, field_name)):
            return False
    return save(config_path)


@dataclass(frozen=True)
class RunConfig:
    """Configuration d'une exécution du solveur"""

    input_path: Optional[str] = None
    selector: str = "midpoint"
    custom_values: Optional[Tuple[str, ...]] = None
    dedupe: bool = False
    reorder_columns: bool = False
    prune_zero_rows: bool = False
    strict_degenerate: bool = False
    workers: int = 1
    mode: str = "exact"
    epsilon: float = 1e-9
    budget: int = 10_000_000
    override_budget: bool = False
    output_format: str = "text"
    oracle_max_unknowns: int = 5
    oracle_max_rows: int = 10

    @classmethod
    def from_settings(cls, **overrides: Any) -> "RunConfig":
        """Construit la configuration depuis le parser, puis applique les surcharges"""
        if not _config.sections():
            initialize()
        base = cls(**{name: get(section, option) for name, (section, option) in RUN_SETTINGS.items()})
        # Les options absentes de la ligne de commande valent None
        overrides = {k: v for k, v in overrides.items() if v is not None}
        config = replace(base, **overrides)
        config.validate()
        return config

    def validate(self, n_params: Optional[int] = None) -> "RunConfig":
        """Vérifie les invariants de la configuration"""
        if self.selector not in SELECTOR_KINDS:
            raise ConfigurationError(f"Sélecteur inconnu : {self.selector}")
        if self.selector == "custom" and not self.custom_values:
            raise ConfigurationError("Le sélecteur custom exige une liste de valeurs")
        if self.selector != "custom" and self.custom_values:
            raise ConfigurationError("Des valeurs ne sont admises qu'avec le sélecteur custom")
        if n_params is not None and self.custom_values is not None and len(self.custom_values) != n_params:
            raise ConfigurationError(
                f"Le sélecteur custom attend {n_params} valeurs, {len(self.custom_values)} fournies"
            )
        if self.budget <= 0:
            raise ConfigurationError(f"Le budget d'entrées doit être positif : {self.budget}")
        if self.workers < 1:
            raise ConfigurationError(f"Nombre de workers invalide : {self.workers}")
        if self.mode not in NUMERIC_MODES:
            raise ConfigurationError(f"Mode numérique inconnu : {self.mode}")
        if self.epsilon < 0:
            raise ConfigurationError(f"Tolérance négative : {self.epsilon}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigurationError(f"Format de sortie inconnu : {self.output_format}")
        return self


# Valeurs par défaut chargées à l'import
initialize()
