# -*- coding: utf-8 -*-

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .data_objects import Diagnostic, FilterReport, NashSet, ParetoDecisionSet, PointVerdict
from .equilibrium import (
    best_response_graph, generalized_ne, intersection_superset, shared_constraint_ne,
    union_subset, vector_point_check)
from .exceptions import UnsupportedGame
from .game import LinearGame, Selector, feasible_set, validate
from .gamefile import load_game
from .helpers.rational import Point, as_point, to_fraction
from .molp import efficient_frontier
from .oracle import GridSpec, find_grid_deviation, game_constraints, game_costs, grid_nash_oracle
from . import logger


class Mode(object):
    __slots__ = ()
    SHARED = 'shared'
    INTERSECTION = 'intersection'
    UNION = 'union'
    GENERALIZED = 'generalized'

    ORDER = [SHARED, INTERSECTION, UNION, GENERALIZED]
    ALL = set(ORDER)

    @classmethod
    def is_valid(cls, s: str):
        return s.lower() in cls.ALL


class NashVop(object):
    """Runs the equilibrium pipeline on one game.

    :param  game: The game to work on.
    :type   game: ``LinearGame``
    """

    def __init__(self, game: LinearGame):
        self.game = game
        self.diagnostics = []  # type: List[Diagnostic]

    @classmethod
    def from_file(cls, path: str) -> 'NashVop':
        return cls(load_game(path))

    def validate(self) -> List[Diagnostic]:
        self.diagnostics = validate(self.game)
        return self.diagnostics

    def _require_linear(self):
        if not self.game.linear:
            raise UnsupportedGame('{} has no linear objectives; only the grid oracle applies'.format(
                self.game.name))

    def solve(self, mode: str = Mode.GENERALIZED) -> Tuple[NashSet, Optional[FilterReport]]:
        """Equilibrium set in the requested mode.

        ``shared`` needs a shared-constraint game; ``intersection`` and ``union`` return the
        outer and inner bounds of a generalized game; ``generalized`` returns the best
        available answer for the game kind.
        """
        self._require_linear()
        mode = mode.lower()
        if not Mode.is_valid(mode):
            raise ValueError('unknown mode {!r}'.format(mode))
        logger.info('solving %r in %s mode', self.game, mode)
        if mode == Mode.SHARED:
            return shared_constraint_ne(self.game), None
        if mode == Mode.INTERSECTION:
            return intersection_superset(self.game), None
        if mode == Mode.UNION:
            return union_subset(self.game), None
        return generalized_ne(self.game)

    def best_response(self, player: int, on: str = Mode.INTERSECTION) -> ParetoDecisionSet:
        """Best-response graph of **player** (zero-based) on the shared or intersection set."""
        self._require_linear()
        if on == Mode.SHARED and not self.game.is_shared:
            raise UnsupportedGame('{} has no shared constraint set'.format(self.game.name))
        if not 0 <= player < self.game.N:
            raise ValueError('player {} does not exist'.format(player + 1))
        X = feasible_set(self.game, Selector.INTERSECTION)
        return best_response_graph(self.game, player, X)

    def frontier(self, player: int, graph: ParetoDecisionSet) -> List[List[Point]]:
        """``(x, f(x))`` images of the vertices of each face of **graph**."""
        X = feasible_set(self.game, Selector.INTERSECTION)
        return efficient_frontier(self.game, player, X, graph)

    def grid(self, step) -> GridSpec:
        return GridSpec.uniform(to_fraction(step), self.game.n)

    def oracle(self, step) -> List[Point]:
        return grid_nash_oracle(game_costs(self.game), self.game.dims, self.game.boxes,
                                self.grid(step), game_constraints(self.game))

    def check(self, point: Sequence, step: Fraction = None) -> Tuple[PointVerdict, ...]:
        """Per-player verdicts at **point**: exact for linear games, on the grid of **step**
        otherwise."""
        point = as_point(point)
        if self.game.linear:
            return vector_point_check(self.game, point)
        if step is None:
            raise ValueError('a grid step is needed to check games without linear objectives')
        costs = game_costs(self.game)
        constraints = game_constraints(self.game)
        grid = self.grid(step)
        verdicts = []
        for i in range(self.game.N):
            dev = find_grid_deviation(costs, self.game.dims, self.game.boxes, constraints, point, grid, [i])
            verdicts.append(PointVerdict(i, dev is None, None if dev is None else dev.point))
        return tuple(verdicts)
