# -*- coding: utf-8 -*-

"""Exact polyhedral kernel: H/V conversion, hulls, intersection, containment and
irredundant unions of polytopes."""

from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

import cdd
import numpy as np

from .helpers.rational import Point, as_point, barycenter, dot, primitive, qmatrix, rank, zeros
from .exceptions import DimensionMismatch, EmptyInput, UnboundedInput
from . import logger

NUMBER_TYPE = 'fraction'


class HPolyhedron(object):
    """The set ``{x : A x <= b}`` where rows flagged in ``eq`` hold with equality.

    :param  A: ``m x n`` exact matrix (``m`` may be 0, meaning the whole space).
    :param  b: Right-hand side of length ``m``.
    :param  eq: Optional per-row equality flags. Defaults to all inequalities.
    """

    def __init__(self, A: np.ndarray, b: Sequence, eq: Sequence[bool] = None):
        self.A = A
        self.b = np.array([Fraction(v) for v in b], dtype=object)
        self.eq = tuple(bool(e) for e in eq) if eq is not None else (False,) * A.shape[0]
        if A.ndim != 2 or A.shape[0] != len(self.b) or len(self.eq) != len(self.b):
            raise DimensionMismatch(
                'H-representation with A {} and {} right-hand sides'.format(A.shape, len(self.b)))

    @classmethod
    def whole_space(cls, n: int) -> 'HPolyhedron':
        return cls(zeros(0, n), [])

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], b: Sequence, n: int, eq: Sequence[bool] = None):
        return cls(qmatrix(rows, n), b, eq)

    @classmethod
    def box(cls, bounds: Sequence[Tuple[Fraction, Fraction]]) -> 'HPolyhedron':
        """Rows ``x_j <= hi_j`` and ``-x_j <= -lo_j`` for every coordinate."""
        n = len(bounds)
        rows, rhs = [], []
        for j, (lo, hi) in enumerate(bounds):
            up = [0] * n
            up[j] = 1
            down = [0] * n
            down[j] = -1
            rows += [up, down]
            rhs += [hi, -Fraction(lo)]
        return cls(qmatrix(rows, n), rhs)

    @property
    def n(self) -> int:
        return self.A.shape[1]

    @property
    def m(self) -> int:
        return self.A.shape[0]

    def row(self, k: int) -> Point:
        return as_point(self.A[k])

    def slack(self, k: int, x: Sequence) -> Fraction:
        return self.b[k] - dot(self.A[k], x)

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.n:
            raise DimensionMismatch('point of length {} in a {}-dimensional polyhedron'.format(len(x), self.n))
        for k in range(self.m):
            s = self.slack(k, x)
            if s < 0 or (self.eq[k] and s != 0):
                return False
        return True

    def active_rows(self, x: Sequence) -> frozenset:
        """Indices of the inequality rows that hold with equality at **x** (equalities excluded)."""
        return frozenset(k for k in range(self.m) if not self.eq[k] and self.slack(k, x) == 0)

    def stack(self, other: 'HPolyhedron') -> 'HPolyhedron':
        if other.n != self.n:
            raise DimensionMismatch('cannot stack {}- and {}-dimensional H-representations'.format(self.n, other.n))
        return HPolyhedron(
            np.vstack([self.A, other.A]) if other.m else self.A,
            list(self.b) + list(other.b),
            self.eq + other.eq)

    def add_rows(self, rows: Sequence[Sequence], b: Sequence, eq: Sequence[bool] = None) -> 'HPolyhedron':
        return self.stack(HPolyhedron(qmatrix(rows, self.n), b, eq))

    def restrict(self, free: Sequence[int], fixed: Sequence[int], values: Sequence) -> 'HPolyhedron':
        """Substitutes ``x[fixed] = values`` and returns the slice over the **free** coordinates.

        Rows whose free part vanishes are kept as ``0 <= b'`` so infeasibility survives.
        """
        A = self.A[:, list(free)] if free else zeros(self.m, 0)
        shift = np.array([dot(self.A[k, list(fixed)], values) for k in range(self.m)], dtype=object) \
            if fixed else zeros(self.m)
        return HPolyhedron(A.copy(), [self.b[k] - shift[k] for k in range(self.m)], self.eq)

    def inequality_form(self) -> Tuple[List[Point], List[Fraction]]:
        """Rows as pure inequalities, each equality split into two."""
        rows, rhs = [], []
        for k in range(self.m):
            a = self.row(k)
            rows.append(a)
            rhs.append(self.b[k])
            if self.eq[k]:
                rows.append(tuple(-v for v in a))
                rhs.append(-self.b[k])
        return rows, rhs

    def to_dict(self) -> dict:
        return {
            'A': [[str(v) for v in self.A[k]] for k in range(self.m)],
            'b': [str(v) for v in self.b],
            'eq': list(self.eq),
        }

    def __repr__(self):
        return '<HPolyhedron({} rows, n={})>'.format(self.m, self.n)


class VPolytope(NamedTuple):
    vertices: Tuple[Point, ...]


class Polytope(object):
    """A bounded polyhedron carried in both representations.

    Identity is the sorted tuple of extreme points, so two ``Polytope`` objects
    built from different descriptions of the same set compare equal.
    """

    def __init__(self, hrep: HPolyhedron, vrep: VPolytope, dim: int):
        self.hrep = hrep
        self.vrep = vrep
        self.dim = dim

    @property
    def vertices(self) -> Tuple[Point, ...]:
        return self.vrep.vertices

    @property
    def n(self) -> int:
        return self.hrep.n

    @classmethod
    def from_points(cls, points: Iterable[Sequence]) -> 'Polytope':
        return hull_vrep_to_hrep(list(points))

    @classmethod
    def from_hrep(cls, hrep: HPolyhedron) -> Optional['Polytope']:
        """Polytope of a bounded H-representation, or ``None`` when it is empty."""
        vertices = dd_hrep_to_vrep(hrep).vertices
        if not vertices:
            return None
        return hull_vrep_to_hrep(list(vertices))

    def key(self) -> Tuple[Point, ...]:
        return self.vertices

    def contains(self, x: Sequence) -> bool:
        return self.hrep.contains(x)

    def project(self, coords: Sequence[int]) -> 'Polytope':
        """Image under the coordinate projection onto **coords**."""
        return hull_vrep_to_hrep([tuple(v[j] for j in coords) for v in self.vertices])

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return canonical_key(self) < canonical_key(other)

    def __str__(self):
        return '<Polytope dim={}: {}>'.format(
            self.dim, ', '.join('({})'.format(','.join(str(c) for c in v)) for v in self.vertices))

    def __repr__(self):
        return '<Polytope(dim={}, {} vertices)>'.format(self.dim, len(self.vertices))


def canonical_key(p: Polytope):
    return (min(p.vertices), p.vertices)


def _cdd_matrix(rows: Sequence[Sequence], linear: Sequence[bool], rep_type) -> cdd.Matrix:
    """Exact cdd matrix; rows flagged in **linear** go into the linearity set."""
    plain = [list(r) for r, lin in zip(rows, linear) if not lin]
    lines = [list(r) for r, lin in zip(rows, linear) if lin]
    mat = cdd.Matrix(plain, number_type=NUMBER_TYPE)
    if lines:
        mat.extend(lines, linear=True)
    mat.rep_type = rep_type
    return mat


def _cdd_rows(mat: cdd.Matrix) -> List[Point]:
    return [as_point(mat[k]) for k in range(mat.row_size)]


def dd_hrep_to_vrep(p: HPolyhedron) -> VPolytope:
    """Vertex set of a bounded H-polyhedron by double description (cddlib, exact mode).

    Rows go to cdd as ``b - A x >= 0``; a leading ``1 >= 0`` row fixes the column count
    when **p** has no rows.

    :return:    ``VPolytope`` with lexicographically sorted vertices; empty iff **p** is empty.

    :raises:    ``UnboundedInput`` if a ray or a line is detected.
    """
    n = p.n
    rows = [[Fraction(1)] + [Fraction(0)] * n]
    rows += [[p.b[k]] + [-v for v in p.row(k)] for k in range(p.m)]
    mat = _cdd_matrix(rows, (False,) + p.eq, cdd.RepType.INEQUALITY)
    generators = cdd.Polyhedron(mat).get_generators()
    if generators.lin_set:
        raise UnboundedInput('polyhedron contains a line')
    vertices = set()
    for g in _cdd_rows(generators):
        if g[0] == 0:
            raise UnboundedInput('polyhedron has the ray {}'.format(g[1:]))
        vertices.add(tuple(v / g[0] for v in g[1:]))
    return VPolytope(tuple(sorted(vertices)))


def hull_vrep_to_hrep(points: List[Sequence]) -> Polytope:
    """Convex hull of a finite point list with a minimal H-representation.

    cddlib computes the facets and the implicit equalities of the hull; the matrix is then
    canonicalized so redundant rows are gone. A point is extreme when its active rows
    have full rank.

    :param  points: Nonempty list of points of equal length.

    :return:    ``Polytope`` whose vertex list keeps only the extreme points.

    :raises:    ``EmptyInput`` for an empty list, ``DimensionMismatch`` for ragged input.
    """
    if not points:
        raise EmptyInput('hull of an empty point list')
    pts = sorted(set(as_point(p) for p in points))
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch('points of different lengths')

    generators = _cdd_matrix([[Fraction(1)] + list(q) for q in pts], [False] * len(pts), cdd.RepType.GENERATOR)
    facets = cdd.Polyhedron(generators).get_inequalities()
    facets.canonicalize()

    rows, rhs, eq = [], [], []
    for k, h in enumerate(_cdd_rows(facets)):
        if not any(h[1:]):
            continue
        h = primitive(h)
        rows.append([-v for v in h[1:]])
        rhs.append(h[0])
        eq.append(k in facets.lin_set)
    hrep = HPolyhedron(qmatrix(rows, n) if rows else zeros(0, n), rhs, eq)

    equalities = [r for r, e in zip(rows, eq) if e]
    dim = n - rank(qmatrix(equalities, n))
    vertices = tuple(q for q in pts
                     if rank(qmatrix(equalities + [hrep.row(k) for k in hrep.active_rows(q)], n)) == n)
    return Polytope(hrep, VPolytope(vertices), dim)


def intersect(p: Polytope, q: Polytope) -> Optional[Polytope]:
    """Intersection of two polytopes, or ``None`` when it is empty.

    :raises:    ``DimensionMismatch`` if the ambient dimensions differ.
    """
    if p.n != q.n:
        raise DimensionMismatch('intersecting {}- and {}-dimensional polytopes'.format(p.n, q.n))
    return Polytope.from_hrep(p.hrep.stack(q.hrep))


def relative_interior_point(p: Polytope) -> Point:
    """Barycenter of the extreme points, which lies in the relative interior."""
    if p is None or not p.vertices:
        raise EmptyInput('relative interior point of an empty polytope')
    return barycenter(p.vertices)


def is_subset(p: Polytope, q: Polytope) -> bool:
    if p.n != q.n:
        raise DimensionMismatch('comparing {}- and {}-dimensional polytopes'.format(p.n, q.n))
    return all(q.hrep.contains(v) for v in p.vertices)


def irredundant_union(parts: Iterable[Polytope]) -> List[Polytope]:
    """Drops every part contained in another and orders the rest by their smallest vertex."""
    unique = sorted(set(p for p in parts if p is not None), key=canonical_key)
    if unique and any(p.n != unique[0].n for p in unique):
        raise DimensionMismatch('union of polytopes of different ambient dimension')
    # larger parts first so a part is only ever tested against potential supersets
    by_size = sorted(unique, key=lambda p: (-p.dim, -len(p.vertices), canonical_key(p)))
    kept = []
    for part in by_size:
        if not any(is_subset(part, other) for other in kept):
            kept.append(part)
    logger.debug('irredundant union: %d parts -> %d', len(unique), len(kept))
    return sorted(kept, key=canonical_key)
