#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Lanceur de chebyshev-elim
Équivalent à la commande chebyshev-elim installée par le paquet
"""

import sys

from chebyshev_elim.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
