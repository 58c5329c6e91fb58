#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Noyau commun : configuration, erreurs et arithmétique"""

from . import config, errors, numeric

__all__ = ["config", "errors", "numeric"]
