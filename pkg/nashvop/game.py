# -*- coding: utf-8 -*-

"""N-player games with linear costs and polyhedral constraints."""

from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from .data_objects import Diagnostic
from .exceptions import EmptyIntersection, EmptySet, NashVopError
from .geometry import HPolyhedron, Polytope, hull_vrep_to_hrep
from .helpers.rational import identity
from . import logger


class GameKind(object):
    __slots__ = ()
    SHARED_SCALAR = 'SharedScalar'
    GENERALIZED_SCALAR = 'GeneralizedScalar'
    SHARED_VECTOR = 'SharedVector'
    GENERALIZED_VECTOR = 'GeneralizedVector'

    SHARED = {SHARED_SCALAR, SHARED_VECTOR}
    SCALAR = {SHARED_SCALAR, GENERALIZED_SCALAR}

    ALL = {SHARED_SCALAR, GENERALIZED_SCALAR, SHARED_VECTOR, GENERALIZED_VECTOR}

    @classmethod
    def is_valid(cls, s: str):
        return s in cls.ALL


class Selector(object):
    __slots__ = ()
    PLAYER = 'player'
    INTERSECTION = 'intersection'
    UNION_HULL = 'union_hull'

    ALL = {PLAYER, INTERSECTION, UNION_HULL}

    @classmethod
    def is_valid(cls, s: str):
        return s.lower() in cls.ALL


class DiagnosticCode(object):
    __slots__ = ()
    DIMENSION_MISMATCH = 'DimensionMismatch'
    MISSING_BOX = 'MissingBox'
    INVERTED_BOX = 'InvertedBox'
    CONSTRAINTS = 'Constraints'
    EMPTY_SET = 'EmptySet'
    EMPTY_INTERSECTION = 'EmptyIntersection'
    DEGENERATE_CONE = 'DegenerateCone'

    ALL = {DIMENSION_MISMATCH, MISSING_BOX, INVERTED_BOX, CONSTRAINTS, EMPTY_SET,
           EMPTY_INTERSECTION, DEGENERATE_CONE}


class LinearGame(object):
    """A game where player ``i`` minimizes ``f_i(x) = F_i x`` over the joint strategy ``x``.

    Costs are always minimized; ``maximize`` objectives are negated when a game file is loaded.

    :param  dims: Strategy dimension ``n_i`` of every player.
    :type   dims: ``list`` of ``int``

    :param  costs: One ``d_i x n`` exact matrix per player, acting on the full joint vector.
    :type   costs: ``list`` of ``numpy.ndarray``

    :param  boxes: ``(lo, hi)`` per joint coordinate. Every coordinate needs one.
    :type   boxes:  ``list`` of ``tuple``

    :param  shared: Common constraint set over the joint space (exclusive with **per_player**).
    :type   shared: ``HPolyhedron``

    :param  per_player: One constraint set ``X_i`` per player, each over the joint space.
    :type   per_player: ``list`` of ``HPolyhedron``

    :param  dual_generators: Per player, a ``d_i x k_i`` matrix whose columns generate the dual
                             of the payoff ordering cone. Defaults to the identity (``K_i`` the
                             nonnegative orthant).
    :type   dual_generators: ``list`` of ``numpy.ndarray``

    :param  oracle_costs: Optional cost expression strings for the grid oracle.
    :param  name: Label used in logs and reports.
    :param  linear: ``False`` for games known only through **oracle_costs**; their cost
                    matrices are placeholders and only the grid oracle applies.
    """

    def __init__(
        self,
        dims: Sequence[int],
        costs: Sequence[np.ndarray],
        boxes: Sequence[Tuple[Fraction, Fraction]],
        shared: HPolyhedron = None,
        per_player: Sequence[HPolyhedron] = None,
        dual_generators: Sequence[np.ndarray] = None,
        oracle_costs: Sequence[str] = None,
        name: str = None,
        linear: bool = True
    ):
        self.dims = tuple(int(d) for d in dims)
        self.costs = list(costs)
        self.boxes = [tuple(b) if b is not None else None for b in boxes]
        self.shared = shared
        self.per_player = list(per_player) if per_player is not None else None
        self.payoff_dims = tuple(F.shape[0] for F in self.costs)
        if dual_generators is None:
            dual_generators = [identity(d) for d in self.payoff_dims]
        self.dual_generators = list(dual_generators)
        self.oracle_costs = list(oracle_costs) if oracle_costs else []
        self.name = name or 'game'
        self.linear = linear

    @property
    def N(self) -> int:
        return len(self.dims)

    @property
    def n(self) -> int:
        return sum(self.dims)

    @property
    def is_shared(self) -> bool:
        return self.per_player is None

    @property
    def is_scalar(self) -> bool:
        return all(d == 1 for d in self.payoff_dims)

    @property
    def kind(self) -> str:
        if self.is_shared:
            return GameKind.SHARED_SCALAR if self.is_scalar else GameKind.SHARED_VECTOR
        return GameKind.GENERALIZED_SCALAR if self.is_scalar else GameKind.GENERALIZED_VECTOR

    def coords(self, i: int) -> range:
        """Joint-vector indices of player **i**'s strategy."""
        start = sum(self.dims[:i])
        return range(start, start + self.dims[i])

    def others(self, i: int) -> List[int]:
        own = self.coords(i)
        return [j for j in range(self.n) if j not in own]

    def box(self) -> HPolyhedron:
        return HPolyhedron.box(self.boxes)

    def player_constraint(self, i: int) -> HPolyhedron:
        """``X_i`` with the variable boxes appended."""
        base = self.shared if self.is_shared else self.per_player[i]
        return base.stack(self.box())

    def intersection_constraint(self) -> HPolyhedron:
        if self.is_shared:
            return self.shared.stack(self.box())
        out = self.box()
        for X in self.per_player:
            out = X.stack(out)
        return out

    def with_costs(self, costs: Sequence[np.ndarray]) -> 'LinearGame':
        return LinearGame(self.dims, costs, self.boxes, self.shared, self.per_player,
                          self.dual_generators, self.oracle_costs, self.name, self.linear)

    def __repr__(self):
        return '<LinearGame {} ({}, dims={})>'.format(self.name, self.kind, self.dims)


def validate(game: LinearGame) -> List[Diagnostic]:
    """Checks dimensions, boxes, cone generators and nonemptiness of the feasible sets.

    Never raises; every problem found becomes a ``Diagnostic``.
    """
    out = []
    n = game.n
    if game.N == 0:
        return [Diagnostic(DiagnosticCode.DIMENSION_MISMATCH, 'game has no players')]

    if len(game.costs) != game.N:
        out.append(Diagnostic(DiagnosticCode.DIMENSION_MISMATCH,
                              '{} cost matrices for {} players'.format(len(game.costs), game.N)))
    for i, F in enumerate(game.costs):
        if F.ndim != 2 or F.shape[1] != n or F.shape[0] == 0:
            out.append(Diagnostic(DiagnosticCode.DIMENSION_MISMATCH,
                                  'cost matrix has shape {}, expected (d, {})'.format(F.shape, n), i))

    if len(game.boxes) != n or any(b is None for b in game.boxes):
        out.append(Diagnostic(DiagnosticCode.MISSING_BOX,
                              'every one of the {} variables needs a [lo, hi] box'.format(n)))
    else:
        for j, (lo, hi) in enumerate(game.boxes):
            if lo is None or hi is None:
                out.append(Diagnostic(DiagnosticCode.MISSING_BOX, 'variable {} has an open box'.format(j + 1)))
            elif lo > hi:
                out.append(Diagnostic(DiagnosticCode.INVERTED_BOX,
                                      'variable {} has lo {} > hi {}'.format(j + 1, lo, hi)))

    if (game.shared is None) == (game.per_player is None):
        out.append(Diagnostic(DiagnosticCode.CONSTRAINTS, 'give exactly one of shared or per-player constraints'))
    elif game.is_shared:
        if game.shared.n != n:
            out.append(Diagnostic(DiagnosticCode.DIMENSION_MISMATCH,
                                  'shared constraints act on {} variables, not {}'.format(game.shared.n, n)))
    else:
        if len(game.per_player) != game.N:
            out.append(Diagnostic(DiagnosticCode.DIMENSION_MISMATCH,
                                  '{} constraint sets for {} players'.format(len(game.per_player), game.N)))
        for i, X in enumerate(game.per_player):
            if X.n != n:
                out.append(Diagnostic(DiagnosticCode.DIMENSION_MISMATCH,
                                      'constraints act on {} variables, not {}'.format(X.n, n), i))

    if len(game.dual_generators) != len(game.costs):
        out.append(Diagnostic(DiagnosticCode.DIMENSION_MISMATCH, 'one dual generator matrix per player required'))
    else:
        for i, (W, F) in enumerate(zip(game.dual_generators, game.costs)):
            if W.ndim != 2 or W.shape[0] != F.shape[0] or W.shape[1] == 0:
                out.append(Diagnostic(DiagnosticCode.DIMENSION_MISMATCH,
                                      'dual generators of shape {} for payoff dimension {}'.format(
                                          W.shape, F.shape[0]), i))
                continue
            for k in range(W.shape[1]):
                if all(v == 0 for v in W[:, k]):
                    out.append(Diagnostic(DiagnosticCode.DEGENERATE_CONE,
                                          'dual generator column {} is zero'.format(k + 1), i))

    if out:
        for d in out:
            logger.warning('%s: %s', game.name, d)
        return out

    try:
        if not game.is_shared:
            for i in range(game.N):
                if Polytope.from_hrep(game.player_constraint(i)) is None:
                    out.append(Diagnostic(DiagnosticCode.EMPTY_SET, 'feasible set is empty', i))
        if Polytope.from_hrep(game.intersection_constraint()) is None:
            code = DiagnosticCode.EMPTY_SET if game.is_shared else DiagnosticCode.EMPTY_INTERSECTION
            out.append(Diagnostic(code, 'joint feasible set is empty'))
    except NashVopError as e:
        out.append(Diagnostic(DiagnosticCode.CONSTRAINTS, str(e)))

    for d in out:
        logger.warning('%s: %s', game.name, d)
    return out


def stacked_objective(game: LinearGame) -> np.ndarray:
    """``B = [I_n; F_1; ...; F_N]`` so that ``B x = (x, f_1(x), ..., f_N(x))``."""
    return np.vstack([identity(game.n)] + [F for F in game.costs])


def feasible_set(game: LinearGame, selector: str, player: int = None) -> Polytope:
    """Builds ``X_i`` (``Selector.PLAYER``), the intersection of all ``X_i`` or the convex hull
    of their union, boxes included.

    :raises:    ``EmptySet`` (``EmptyIntersection`` for the intersection) when the set is empty.
    """
    if selector == Selector.PLAYER:
        if player is None:
            raise ValueError('Selector.PLAYER needs a player index')
        X = Polytope.from_hrep(game.player_constraint(player))
        if X is None:
            raise EmptySet('feasible set of player {} is empty'.format(player + 1))
        return X

    if selector == Selector.INTERSECTION or game.is_shared:
        X = Polytope.from_hrep(game.intersection_constraint())
        if X is None:
            raise EmptyIntersection('the players\' feasible sets do not intersect')
        logger.info('%s: joint feasible set has %d vertices', game.name, len(X.vertices))
        return X

    if selector == Selector.UNION_HULL:
        vertices = []
        for i in range(game.N):
            Xi = Polytope.from_hrep(game.player_constraint(i))
            if Xi is not None:
                vertices.extend(Xi.vertices)
        if not vertices:
            raise EmptySet('every player\'s feasible set is empty')
        X = hull_vrep_to_hrep(vertices)
        logger.info('%s: union hull has %d vertices', game.name, len(X.vertices))
        return X

    raise ValueError('unknown selector {!r}'.format(selector))
