# -*- coding: utf-8 -*-

"""Brute-force Nash checks on a rational grid.

Works for any cost expression, linear or not: every grid point is tested
against every unilateral grid deviation that keeps the deviating player
feasible. Results are exact but only relative to the grid.
"""

from fractions import Fraction
from itertools import product
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from .exceptions import EmptyGrid, InfeasiblePoint, UnsupportedGame
from .geometry import HPolyhedron
from .helpers.expr import BinOp, CostExpr, Num, Var, evaluate, parse_cost
from .helpers.rational import Point, as_point, to_fraction
from . import logger

Constraints = Union[None, HPolyhedron, Sequence[HPolyhedron]]


class GridSpec(NamedTuple):
    """Step per variable; each step must divide its box width."""

    steps: Tuple[Fraction, ...]

    @classmethod
    def uniform(cls, step, n: int) -> 'GridSpec':
        return cls(tuple(to_fraction(step) for _ in range(n)))

    def refine(self, k: int) -> 'GridSpec':
        return GridSpec(tuple(s / k for s in self.steps))


class Deviation(NamedTuple):
    player: int
    point: Point
    current: Fraction
    improved: Fraction


def axis(lo: Fraction, hi: Fraction, step: Fraction) -> List[Fraction]:
    """``lo, lo + step, ..., hi``.

    :raises:    ``EmptyGrid`` for a nonpositive step or one that does not divide ``hi - lo``.
    """
    if step <= 0:
        raise EmptyGrid('grid step must be positive, got {}'.format(step))
    count = (hi - lo) / step
    if count.denominator != 1:
        raise EmptyGrid('step {} does not divide the box [{}, {}]'.format(step, lo, hi))
    return [lo + k * step for k in range(int(count) + 1)]


def axes(boxes: Sequence[Tuple[Fraction, Fraction]], grid: GridSpec) -> List[List[Fraction]]:
    if len(grid.steps) != len(boxes):
        raise EmptyGrid('{} grid steps for {} variables'.format(len(grid.steps), len(boxes)))
    return [axis(Fraction(lo), Fraction(hi), s) for (lo, hi), s in zip(boxes, grid.steps)]


def _ranges(dims: Sequence[int]) -> List[range]:
    out, start = [], 0
    for d in dims:
        out.append(range(start, start + d))
        start += d
    return out


def _nested(x: Point, dims: Sequence[int]) -> List[Point]:
    return [tuple(x[j] for j in r) for r in _ranges(dims)]


def _constraint_of(constraints: Constraints, i: int) -> Optional[HPolyhedron]:
    if constraints is None or isinstance(constraints, HPolyhedron):
        return constraints
    return constraints[i]


def _feasible_for(constraints: Constraints, i: int, x: Point) -> bool:
    c = _constraint_of(constraints, i)
    return c is None or c.contains(x)


def _jointly_feasible(constraints: Constraints, x: Point, players: int) -> bool:
    if constraints is None or isinstance(constraints, HPolyhedron):
        return _feasible_for(constraints, 0, x)
    return all(_feasible_for(constraints, i, x) for i in range(players))


def _in_boxes(boxes, x: Point) -> bool:
    return all(Fraction(lo) <= v <= Fraction(hi) for (lo, hi), v in zip(boxes, x))


def _better_reply(costs, dims, constraints, grid_axes, i: int, x: Point) -> Optional[Deviation]:
    own = _ranges(dims)[i]
    current = evaluate(costs[i], _nested(x, dims))
    for values in product(*(grid_axes[j] for j in own)):
        y = list(x)
        for j, v in zip(own, values):
            y[j] = v
        y = tuple(y)
        if y == x or not _feasible_for(constraints, i, y):
            continue
        value = evaluate(costs[i], _nested(y, dims))
        if value < current:
            return Deviation(i, y, current, value)
    return None


def find_grid_deviation(costs: Sequence[CostExpr], dims: Sequence[int], boxes, constraints: Constraints,
                        x: Sequence, grid: GridSpec, players: Sequence[int] = None) -> Optional[Deviation]:
    """First strictly improving unilateral grid deviation from **x**, trying **players** (all by
    default) in order.

    :raises:    ``InfeasiblePoint`` if **x** is outside the boxes or the constraints.
    """
    x = as_point(x)
    if len(x) != sum(dims) or not _in_boxes(boxes, x) or not _jointly_feasible(constraints, x, len(dims)):
        raise InfeasiblePoint('{} is not feasible'.format(tuple(str(v) for v in x)))
    grid_axes = axes(boxes, grid)
    for i in (range(len(dims)) if players is None else players):
        dev = _better_reply(costs, dims, constraints, grid_axes, i, x)
        if dev is not None:
            return dev
    return None


def check_point(costs: Sequence[CostExpr], dims: Sequence[int], boxes, constraints: Constraints,
                x: Sequence, grid: GridSpec) -> bool:
    """``True`` when no grid deviation strictly improves any player at **x**."""
    return find_grid_deviation(costs, dims, boxes, constraints, x, grid) is None


def _candidates(dims, boxes, grid, constraints) -> Tuple[List[List[Fraction]], List[Point]]:
    grid_axes = axes(boxes, grid)
    points = [p for p in product(*grid_axes) if _jointly_feasible(constraints, p, len(dims))]
    if not points:
        raise EmptyGrid('no grid point satisfies the constraints')
    return grid_axes, points


def grid_nash_oracle(costs: Sequence[CostExpr], dims: Sequence[int], boxes, grid: GridSpec,
                     constraints: Constraints = None) -> List[Point]:
    """All grid points where no player gains by a unilateral grid deviation.

    :param  costs: One cost expression per player, minimized.
    :param  dims: Strategy dimension per player.
    :param  boxes: ``(lo, hi)`` per joint coordinate.
    :param  grid: Grid steps.
    :param  constraints: ``None``, one shared ``HPolyhedron`` or one per player.

    :return:    Accepted grid points, lexicographically sorted.

    :raises:    ``EmptyGrid``
    """
    grid_axes, points = _candidates(dims, boxes, grid, constraints)
    accepted = [p for p in points
                if all(_better_reply(costs, dims, constraints, grid_axes, i, p) is None
                       for i in range(len(dims)))]
    logger.info('grid oracle: %d of %d grid points accepted', len(accepted), len(points))
    return sorted(accepted)


def grid_best_response(costs: Sequence[CostExpr], dims: Sequence[int], boxes, grid: GridSpec, i: int,
                       constraints: Constraints = None) -> List[Point]:
    """Grid points feasible for player **i** where player **i** cannot improve on the grid."""
    grid_axes = axes(boxes, grid)
    points = [p for p in product(*grid_axes) if _feasible_for(constraints, i, p)]
    if not points:
        raise EmptyGrid('no grid point is feasible for player {}'.format(i + 1))
    return sorted(p for p in points if _better_reply(costs, dims, constraints, grid_axes, i, p) is None)


def linear_costs(game) -> List[CostExpr]:
    """Expression form of the scalar linear costs of a ``LinearGame``."""
    if not game.is_scalar:
        raise UnsupportedGame('grid checks need scalar costs')
    out = []
    for F in game.costs:
        terms = []
        for i in range(game.N):
            for k, j in enumerate(game.coords(i)):
                if F[0, j] != 0:
                    terms.append(BinOp('*', Num(Fraction(F[0, j])), Var(i + 1, k + 1)))
        expr = terms[0] if terms else Num(Fraction(0))
        for t in terms[1:]:
            expr = BinOp('+', expr, t)
        out.append(expr)
    return out


def game_costs(game) -> List[CostExpr]:
    """The game's oracle cost strings when present, its linear costs otherwise."""
    if game.oracle_costs:
        return [parse_cost(src, game.dims) for src in game.oracle_costs]
    return linear_costs(game)


def game_constraints(game) -> Constraints:
    if game.per_player is not None:
        return game.per_player
    return game.shared
