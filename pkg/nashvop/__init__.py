# -*- coding: utf-8 -*-

"""Top-level package for nashvop."""

__author__ = """nashvop developers"""
__email__ = 'nashvop@users.noreply.github.com'
__version__ = '0.1.0'


__all__ = [
    "geometry",
    "lp",
    "game",
    "cones",
    "molp",
    "equilibrium",
    "oracle",
    "gamefile",
    "nashvop",
]

import logging
import os

logging.basicConfig(level=os.environ.get("LOGLEVEL", "WARNING"))

logger = logging.getLogger(__name__)
