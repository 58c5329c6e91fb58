#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Interface en ligne de commande : lecture CSV, rapports et commandes"""

from . import main

__all__ = ["main"]
