# -*- coding: utf-8 -*-

"""Per-player ordering cones and their reduction to componentwise-ordered problems.

Player ``i``'s cone fixes the opponents' coordinates and orders its own payoff
block by ``K_i``. The columns of ``Z_i`` generate the dual of that cone, so
``Z_i^T B`` turns the cone-ordered problem into one ordered componentwise.
"""

from typing import Optional, Sequence

import numpy as np

from .data_objects import DualGenerators
from .exceptions import DimensionMismatch
from .game import LinearGame, stacked_objective
from .helpers.rational import ONE, as_point, dot, zeros


def dual_generators(game: LinearGame, i: int) -> DualGenerators:
    """``Z_i`` with ``n + sum(d_j)`` rows.

    Columns: a ``(+e_j, -e_j)`` pair for every opponent coordinate ``j`` in ascending order,
    then the generators of ``K_i^+`` placed in the rows of ``f_i``.
    """
    n = game.n
    rows = n + sum(game.payoff_dims)
    others = game.others(i)
    W = game.dual_generators[i]
    Z = zeros(rows, 2 * len(others) + W.shape[1])
    for k, j in enumerate(others):
        Z[j, 2 * k] = ONE
        Z[j, 2 * k + 1] = -ONE
    start = n + sum(game.payoff_dims[:i])
    for q in range(W.shape[1]):
        for r in range(W.shape[0]):
            Z[start + r, 2 * len(others) + q] = W[r, q]
    return DualGenerators(i, Z)


def scalarized_objective(game: LinearGame, i: int) -> np.ndarray:
    """``G_i = Z_i^T B``, minimized componentwise."""
    return dual_generators(game, i).Z.T @ stacked_objective(game)


def cone_member(game: LinearGame, i: Optional[int], z: Sequence) -> bool:
    """Whether **z** (a vector of length ``n + sum(d_j)``) lies in player **i**'s cone, or in
    the union of all players' cones when **i** is ``None``."""
    z = as_point(z)
    if len(z) != game.n + sum(game.payoff_dims):
        raise DimensionMismatch('vector of length {} for a cone in dimension {}'.format(
            len(z), game.n + sum(game.payoff_dims)))
    if i is None:
        return any(cone_member(game, k, z) for k in range(game.N))
    if any(z[j] != 0 for j in game.others(i)):
        return False
    start = game.n + sum(game.payoff_dims[:i])
    block = z[start:start + game.payoff_dims[i]]
    W = game.dual_generators[i]
    return all(dot(W[:, q], block) >= 0 for q in range(W.shape[1]))


def image(game: LinearGame, x: Sequence) -> tuple:
    """``B x``: the strategy followed by every player's cost vector."""
    B = stacked_objective(game)
    return tuple(dot(B[r], x) for r in range(B.shape[0]))


def scalarized_image(G: np.ndarray, x: Sequence) -> tuple:
    return tuple(dot(G[r], x) for r in range(G.shape[0]))


def dominates(G: np.ndarray, x: Sequence, y: Sequence) -> bool:
    """``G x <= G y`` componentwise with at least one strict component."""
    gx, gy = scalarized_image(G, x), scalarized_image(G, y)
    return all(a <= b for a, b in zip(gx, gy)) and gx != gy


def cone_dominates(game: LinearGame, i: Optional[int], x: Sequence, y: Sequence) -> bool:
    """``g(y) - g(x)`` lies in the cone but not in its lineality space."""
    gx, gy = image(game, x), image(game, y)
    diff = tuple(b - a for a, b in zip(gx, gy))
    return cone_member(game, i, diff) and not cone_member(game, i, tuple(-v for v in diff))
