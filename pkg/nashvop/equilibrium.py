# -*- coding: utf-8 -*-

"""Nash equilibrium sets assembled from the players' Pareto sets.

A joint strategy is an equilibrium of a shared-constraint game exactly when it
is Pareto minimal for every player's cone, so the equilibrium set is the
intersection of the players' best-response graphs. Generalized games are
bracketed by the game on the intersection of the constraint sets (a superset)
and the game on the hull of their union (a subset); for scalar costs the
superset is then filtered down to the exact set.
"""

from typing import List, Optional, Sequence, Tuple

from .cones import scalarized_objective
from .data_objects import (
    Exactness, FilterReport, NashSet, ParetoDecisionSet, PointVerdict, RemovedPiece)
from .exceptions import InfeasiblePoint, UnsupportedGame
from .game import LinearGame, Selector, feasible_set
from .geometry import HPolyhedron, Polytope, intersect, irredundant_union
from .helpers.rational import as_point, barycenter, dot, zeros
from .lp import (
    LpStatus, RegionStatus, efficiency_test, embed, parametric_best_response, split, value_at)
from .molp import pareto_decision_set
from . import logger


def best_response_graph(game: LinearGame, i: int, X: Polytope) -> ParetoDecisionSet:
    """Player **i**'s best-response graph over **X**: its cone-minimal points."""
    graph = pareto_decision_set(scalarized_objective(game, i), X)
    logger.info('player %d: %d Pareto faces, %d extremal points',
                i + 1, len(graph.faces), len(graph.extremal_points()))
    return graph


def intersect_unions(unions: Sequence[Sequence[Polytope]]) -> List[Polytope]:
    """Intersection of finite unions of polytopes, taken one union at a time."""
    current = irredundant_union(unions[0])
    for k, parts in enumerate(unions[1:], start=2):
        current = irredundant_union(intersect(p, q) for p in current for q in parts)
        logger.info('after intersecting %d sets: %d components', k, len(current))
    return current


def _nash_on(game: LinearGame, X: Polytope) -> Tuple[List[Polytope], Tuple[ParetoDecisionSet, ...]]:
    graphs = tuple(best_response_graph(game, i, X) for i in range(game.N))
    return intersect_unions([g.faces for g in graphs]), graphs


def shared_constraint_ne(game: LinearGame) -> NashSet:
    """Exact equilibrium set of a shared-constraint game.

    :raises:    ``UnsupportedGame`` if the players have their own constraint sets.
    """
    if not game.is_shared:
        raise UnsupportedGame('{} has player-specific constraints'.format(game.name))
    components, graphs = _nash_on(game, feasible_set(game, Selector.INTERSECTION))
    return NashSet(tuple(components), Exactness.EXACT, graphs)


def intersection_superset(game: LinearGame) -> NashSet:
    """Equilibria of the game played on the intersection of all ``X_i``; contains every
    generalized equilibrium.

    :raises:    ``EmptyIntersection``
    """
    components, graphs = _nash_on(game, feasible_set(game, Selector.INTERSECTION))
    return NashSet(tuple(components), Exactness.SUPERSET, graphs)


def union_subset(game: LinearGame) -> NashSet:
    """Equilibria of the game played on the hull of the union of all ``X_i``, cut down to the
    jointly feasible points; every such point is a generalized equilibrium.

    The union game's own components are kept in ``union_game``.
    """
    union_game, graphs = _nash_on(game, feasible_set(game, Selector.UNION_HULL))
    joint = feasible_set(game, Selector.INTERSECTION)
    components = irredundant_union(intersect(c, joint) for c in union_game)
    if not components:
        logger.warning('%s: no union-game equilibrium is jointly feasible', game.name)
    return NashSet(tuple(components), Exactness.SUBSET, graphs, tuple(union_game))


def _lift(region: HPolyhedron, coords: Sequence[int], n: int) -> HPolyhedron:
    A = zeros(region.m, n)
    for k, j in enumerate(coords):
        A[:, j] = region.A[:, k]
    return HPolyhedron(A, region.b, region.eq)


def _best_response_pieces(game: LinearGame, i: int, face: Polytope):
    """Parts of **face** where player **i** plays a best response, plus the removed parts."""
    others = game.others(i)
    cost = game.costs[i][0]
    regions = parametric_best_response(game, i, face.project(others))
    kept, removed = [], []
    for region in regions:
        if region.status != RegionStatus.OPTIMAL:
            continue
        # f_i(x) - value_fn(x_{-i}) = gap . x - offset
        gap = list(cost)
        for k, j in enumerate(others):
            gap[j] -= region.value_fn.gradient[k]
        offset = region.value_fn.offset

        piece = Polytope.from_hrep(face.hrep.add_rows([gap], [offset]))
        if piece is not None:
            kept.append(piece)

        beaten = face.hrep.stack(_lift(region.region, others, game.n)).add_rows([[-v for v in gap]], [-offset])
        beaten = Polytope.from_hrep(beaten)
        if beaten is None:
            continue
        center = barycenter(beaten.vertices)
        if dot(gap, center) <= offset:
            continue
        theta = split(game, i, center)[1]
        best = value_at(game, i, theta)
        if best.status != LpStatus.OPTIMAL:
            continue
        removed.append(RemovedPiece(beaten, i, theta, embed(game, i, best.point, theta), best.value))
    return irredundant_union(kept), removed


def filter_set_M(game: LinearGame, superset: NashSet) -> Tuple[NashSet, FilterReport]:
    """Removes from **superset** every point where some player has a strictly better reply
    that is feasible for that player alone.

    On each component ``F`` and for each player ``i`` the best-response value ``phi_i`` over the
    opponents' strategies is the maximum of the affine value functions ``l_k`` of the critical
    regions. Since ``f_i >= phi_i`` on ``F``, the points kept for player ``i`` are the union of
    ``F ∩ {f_i <= l_k}``. Survivors are intersected across players.

    :param  game: Scalar game.
    :param  superset: Result of ``intersection_superset``.

    :return:    The exact equilibrium set and the report of removed and kept pieces.

    :raises:    ``UnsupportedGame`` for vector-valued costs.
    """
    if not game.is_scalar:
        raise UnsupportedGame('the exact filter needs scalar costs; certify points instead')
    kept, removed = [], []
    for face in superset.components:
        survivors = [face]
        for i in range(game.N):
            pieces, gone = _best_response_pieces(game, i, face)
            removed.extend(gone)
            survivors = irredundant_union(intersect(s, p) for s in survivors for p in pieces)
            if not survivors:
                break
        kept.extend(survivors)
    components = irredundant_union(kept)
    logger.info('filter: %d superset components -> %d, %d removed pieces',
                len(superset.components), len(components), len(removed))
    return (NashSet(tuple(components), Exactness.EXACT, superset.player_sets),
            FilterReport(tuple(removed), tuple(components)))


def vector_point_check(game: LinearGame, x: Sequence) -> Tuple[PointVerdict, ...]:
    """Decides for every player whether its cost at **x** is efficient among its own feasible
    replies, with the opponents held at their part of **x**.

    :return:    One ``PointVerdict`` per player; ``deviation`` is a dominating reply when not ok.

    :raises:    ``InfeasiblePoint`` if **x** is not jointly feasible.
    """
    x = as_point(x)
    if len(x) != game.n or not game.intersection_constraint().contains(x):
        raise InfeasiblePoint('{} is not jointly feasible'.format(tuple(str(v) for v in x)))
    out = []
    for i in range(game.N):
        verdict = efficiency_test(x, scalarized_objective(game, i), game.player_constraint(i))
        out.append(PointVerdict(i, verdict.efficient, verdict.witness))
        logger.debug('player %d at %s: efficient=%s', i + 1, x, verdict.efficient)
    return tuple(out)


def is_equilibrium(game: LinearGame, x: Sequence) -> bool:
    return all(v.ok for v in vector_point_check(game, x))


def generalized_ne(game: LinearGame) -> Tuple[NashSet, Optional[FilterReport]]:
    """The equilibrium set for any game kind.

    Shared games are solved exactly. Scalar generalized games go through the filter. For
    vector-valued generalized games the superset is returned with the union subset and a
    certificate for each of its extremal points.
    """
    if game.is_shared:
        return shared_constraint_ne(game), None
    superset = intersection_superset(game)
    if game.is_scalar:
        return filter_set_M(game, superset)
    logger.warning('%s: vector-valued generalized game, returning bounds and point certificates', game.name)
    subset = union_subset(game)
    certified = tuple((v, is_equilibrium(game, v)) for v in superset.extremal_points())
    return superset._replace(subset_components=subset.components, certified=certified), None


def scaled_costs(game: LinearGame, factors: Sequence) -> LinearGame:
    """Copy of **game** with every player's cost multiplied by a positive factor."""
    return game.with_costs([F * f for F, f in zip(game.costs, factors)])
