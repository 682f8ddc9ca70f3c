from fractions import Fraction
from typing import NamedTuple, Optional, Tuple

import numpy as np

from .geometry import HPolyhedron, Polytope
from .helpers.rational import Point, dot


class Exactness(object):
    __slots__ = ()
    EXACT = 'Exact'
    SUPERSET = 'Superset'
    SUBSET = 'Subset'

    ALL = {EXACT, SUPERSET, SUBSET}

    @classmethod
    def is_valid(cls, s: str):
        return s in cls.ALL


class LpProblem(NamedTuple):
    """``min c . x`` over ``constraints``."""

    c: Point
    constraints: HPolyhedron


class LpSolution(NamedTuple):
    status: str
    value: Optional[Fraction] = None
    point: Optional[Point] = None
    basis: Tuple[int, ...] = ()


class EfficiencyVerdict(NamedTuple):
    efficient: bool
    improving_direction: Optional[Point] = None
    witness: Optional[Point] = None


class ValueFunction(NamedTuple):
    """Affine map ``theta -> gradient . theta + offset``."""

    gradient: Point
    offset: Fraction

    def __call__(self, theta) -> Fraction:
        return dot(self.gradient, theta) + self.offset


class CriticalRegion(NamedTuple):

    basis: Tuple[int, ...]
    region: HPolyhedron
    polytope: Polytope
    value_fn: Optional[ValueFunction]
    status: str

    def contains(self, theta) -> bool:
        return self.region.contains(theta)


class DualGenerators(NamedTuple):
    player: int
    Z: np.ndarray

    @property
    def m(self) -> int:
        return self.Z.shape[1]


class Diagnostic(NamedTuple):
    code: str
    message: str
    player: Optional[int] = None

    def __str__(self):
        where = '' if self.player is None else ' (player {})'.format(self.player + 1)
        return '{}{}: {}'.format(self.code, where, self.message)


class EfficientFace(NamedTuple):
    polytope: Polytope
    spanning_vertices: Tuple[Point, ...]
    maximal: bool


class ParetoDecisionSet(NamedTuple):
    faces: Tuple[Polytope, ...]
    efficient_faces: Tuple[EfficientFace, ...] = ()

    def extremal_points(self) -> Tuple[Point, ...]:
        return tuple(sorted({v for f in self.faces for v in f.vertices}))

    def contains(self, x) -> bool:
        return any(f.contains(x) for f in self.faces)


class RemovedPiece(NamedTuple):
    polytope: Polytope
    player: int
    witness_parameter: Point
    witness_point: Point
    best_value: Fraction


class FilterReport(NamedTuple):
    removed: Tuple[RemovedPiece, ...]
    kept: Tuple[Polytope, ...]


class PointVerdict(NamedTuple):
    player: int
    ok: bool
    deviation: Optional[Point] = None


class NashSet(NamedTuple):
    components: Tuple[Polytope, ...]
    exactness: str
    player_sets: Tuple[ParetoDecisionSet, ...] = ()
    union_game: Tuple[Polytope, ...] = ()
    subset_components: Tuple[Polytope, ...] = ()
    certified: Tuple[Tuple[Point, bool], ...] = ()

    def extremal_points(self) -> Tuple[Point, ...]:
        return tuple(sorted({v for c in self.components for v in c.vertices}))

    def contains(self, x) -> bool:
        return any(c.contains(x) for c in self.components)

    @property
    def empty(self) -> bool:
        return not self.components
