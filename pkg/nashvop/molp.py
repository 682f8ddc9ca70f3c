# -*- coding: utf-8 -*-

"""Complete solution of ``min G x`` over a polytope under the componentwise order.

Efficient vertices are found by one efficiency test per vertex. Efficient faces
are grown from them: the smallest face containing a vertex set is read off the
active constraints, and a face is efficient when all its vertices are and its
barycenter passes the efficiency test.
"""

from collections import deque
from typing import FrozenSet, List, Sequence

import numpy as np

from .data_objects import EfficientFace, ParetoDecisionSet
from .exceptions import EmptySet
from .geometry import Polytope, hull_vrep_to_hrep, irredundant_union
from .helpers.rational import Point, barycenter, dot
from .cones import scalarized_objective
from .game import stacked_objective
from .lp import efficiency_test
from . import logger


def efficient_vertices(G: np.ndarray, X: Polytope) -> List[Point]:
    """Vertices of **X** that are Pareto minimal for ``G x``, in lexicographic order.

    :raises:    ``EmptySet`` if **X** is missing or has no vertices.
    """
    if X is None or not X.vertices:
        raise EmptySet('multi-objective problem over an empty feasible set')
    out = [v for v in X.vertices if efficiency_test(v, G, X.hrep).efficient]
    logger.info('%d of %d vertices are efficient', len(out), len(X.vertices))
    return out


def _smallest_face(X: Polytope, active: dict, vertices: Sequence[Point]) -> FrozenSet[Point]:
    rows = frozenset.intersection(*(active[v] for v in vertices))
    return frozenset(v for v in X.vertices if rows <= active[v])


def maximal_efficient_faces(G: np.ndarray, X: Polytope, effv: Sequence[Point]) -> List[EfficientFace]:
    """Inclusion-maximal efficient faces of **X**.

    Faces are explored breadth first from the efficient vertices, joining one more efficient
    vertex at a time. Every face of an efficient face is efficient, so this reaches every
    efficient face.

    :param  G: Objective matrix, minimized componentwise.
    :param  X: Feasible polytope.
    :param  effv: ``efficient_vertices(G, X)``.

    :return:    One ``EfficientFace`` per maximal face, ordered by smallest vertex.
    """
    efficient = set(effv)
    active = {v: X.hrep.active_rows(v) for v in X.vertices}
    tested = {}

    def is_efficient(face: FrozenSet[Point]) -> bool:
        if face not in tested:
            if len(face) == 1:
                tested[face] = next(iter(face)) in efficient
            else:
                tested[face] = face <= efficient and \
                    efficiency_test(barycenter(sorted(face)), G, X.hrep).efficient
            logger.debug('face with %d vertices efficient: %s', len(face), tested[face])
        return tested[face]

    found = set()
    queue = deque(frozenset([v]) for v in sorted(efficient))
    while queue:
        face = queue.popleft()
        if face in found:
            continue
        found.add(face)
        for w in sorted(efficient - face):
            bigger = _smallest_face(X, active, list(face) + [w])
            if bigger not in found and is_efficient(bigger):
                queue.append(bigger)

    maximal = [f for f in found if not any(f < g for g in found)]
    out = []
    for face in maximal:
        spanning = tuple(sorted(face))
        out.append(EfficientFace(hull_vrep_to_hrep(list(spanning)), spanning, True))
    out.sort(key=lambda f: f.spanning_vertices)
    logger.info('%d efficient faces, %d maximal', len(found), len(out))
    return out


def pareto_decision_set(G: np.ndarray, X: Polytope) -> ParetoDecisionSet:
    """The Pareto set of ``min G x`` over **X** as an irredundant union of polytopes."""
    faces = maximal_efficient_faces(G, X, efficient_vertices(G, X))
    return ParetoDecisionSet(tuple(irredundant_union(f.polytope for f in faces)), tuple(faces))


def efficient_frontier(game, i: int, X: Polytope, pareto: ParetoDecisionSet = None) -> List[List[Point]]:
    """Images ``B v = (v, f(v))`` of the vertices of every face of player **i**'s Pareto set over
    **X**, one list per face; **pareto** reuses an already computed Pareto set. Dropping the
    objective blocks gives back the decision-space faces."""
    if pareto is None:
        pareto = pareto_decision_set(scalarized_objective(game, i), X)
    B = stacked_objective(game)
    return [[tuple(dot(B[r], v) for r in range(B.shape[0])) for v in face.vertices]
            for face in pareto.faces]
