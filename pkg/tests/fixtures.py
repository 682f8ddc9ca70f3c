# -*- coding: utf-8 -*-

"""Bundled games, their known extremal points and small helpers shared by the suites."""

import os
from fractions import Fraction as Q

from nashvop.gamefile import GAMES_DIR, bundled_game, component_vertices, load_game, load_result

X1 = (Q(0), Q(0), Q(0), Q(0))
X2 = (Q(0), Q(2), Q(0), Q(6))
X3 = (Q(1), Q(2), Q(1), Q(2))
X4 = (Q(785, 661), Q(1260, 661), Q(825, 661), Q(0))
X5 = (Q(0), Q(5, 2), Q(1, 8), Q(11, 2))
X6 = (Q(47, 40), Q(153, 80), Q(3, 2), Q(0))
X7 = (Q(0), Q(5, 2), Q(3, 2), Q(0))
X8 = (Q(8, 55), Q(78, 55), Q(0), Q(6))

# four-decimal approximations of X4 and X6
X4_DECIMAL = (1.1876, 1.9062, 1.2481, 0.0)
X6_DECIMAL = (1.175, 1.9125, 1.5, 0.0)


def game(name: str):
    return load_game(bundled_game(name))


def expected(name: str) -> dict:
    return load_result(os.path.join(GAMES_DIR, 'expected', name + '.json'))


def expected_vertices(name: str, key: str = 'components'):
    return component_vertices(expected(name), key)


def vertex_sets(components):
    """Sorted list of the sorted vertex lists of **components**."""
    return sorted(list(c.vertices) for c in components)


def midpoint(p, q):
    return tuple((a + b) / 2 for a, b in zip(p, q))
