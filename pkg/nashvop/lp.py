# -*- coding: utf-8 -*-

"""Exact linear programming: a primal simplex over ``fractions.Fraction``, the
auxiliary-LP efficiency test for multi-objective candidates, and the parametric
best-response problem of one player."""

from fractions import Fraction
from itertools import combinations
from typing import List, Sequence

import numpy as np

from .data_objects import CriticalRegion, EfficiencyVerdict, LpProblem, LpSolution, ValueFunction
from .exceptions import DimensionMismatch, EmptyDomain, InfeasibleCandidate, UnboundedInput
from .geometry import HPolyhedron, Polytope
from .helpers.rational import ONE, ZERO, Point, as_point, barycenter, dot, matvec, qmatrix, solve, zeros
from . import logger


class LpStatus(object):
    __slots__ = ()
    OPTIMAL = 'Optimal'
    INFEASIBLE = 'Infeasible'
    UNBOUNDED = 'Unbounded'

    ALL = {OPTIMAL, INFEASIBLE, UNBOUNDED}

    @classmethod
    def is_valid(cls, s: str):
        return s in cls.ALL


class RegionStatus(object):
    __slots__ = ()
    OPTIMAL = 'Optimal'
    INFEASIBLE = 'Infeasible'

    ALL = {OPTIMAL, INFEASIBLE}

    @classmethod
    def is_valid(cls, s: str):
        return s in cls.ALL


class _Tableau(object):
    """Dense simplex tableau. The last row holds reduced costs and ``-z``; the last column the rhs."""

    def __init__(self, T: np.ndarray, basis: List[int]):
        self.T = T
        self.basis = basis

    @property
    def rows(self) -> int:
        return self.T.shape[0] - 1

    def price_out(self, costs: Sequence[Fraction]):
        T = self.T
        T[-1] = np.array(list(costs) + [ZERO], dtype=object)
        for r, j in enumerate(self.basis):
            if T[-1, j] != 0:
                T[-1] = T[-1] - T[-1, j] * T[r]

    def pivot(self, r: int, c: int):
        T = self.T
        T[r] = T[r] / T[r, c]
        for i in range(T.shape[0]):
            if i != r and T[i, c] != 0:
                T[i] = T[i] - T[i, c] * T[r]
        self.basis[r] = c

    def run(self, columns: Sequence[int]) -> str:
        """Bland's rule: lowest-index entering column, ties on the ratio test broken by lowest basic index."""
        T = self.T
        pivots = 0
        while True:
            entering = next((j for j in columns if T[-1, j] < 0), None)
            if entering is None:
                logger.debug('simplex: optimal after %d pivots', pivots)
                return LpStatus.OPTIMAL
            best = None
            for r in range(self.rows):
                a = T[r, entering]
                if a > 0:
                    key = (T[r, -1] / a, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return LpStatus.UNBOUNDED
            logger.debug('simplex: pivot row %d column %d', best[1], entering)
            self.pivot(best[1], entering)
            pivots += 1

    def values(self, width: int) -> List[Fraction]:
        x = [ZERO] * width
        for r, j in enumerate(self.basis):
            if j < width:
                x[j] = self.T[r, -1]
        return x


def solve_lp(problem: LpProblem) -> LpSolution:
    """Minimizes ``c . x`` subject to ``problem.constraints`` with an exact two-phase simplex.

    Free variables are split as ``x = u - w``; every inequality row gets a slack. Phase one
    minimizes the sum of artificial variables, phase two the objective, both under Bland's rule.

    :param  problem: Objective and H-representation. ``c`` must match the polyhedron dimension.
    :type   problem: ``LpProblem``

    :return:    ``LpSolution``. When optimal, ``point`` is a vertex of the feasible region,
                ``value == c . point`` and ``basis`` lists the constraint rows active at ``point``.
    """
    c = as_point(problem.c)
    P = problem.constraints
    n, m = P.n, P.m
    if len(c) != n:
        raise DimensionMismatch('objective of length {} for {} variables'.format(len(c), n))

    n_slack = sum(1 for e in P.eq if not e)
    width = 2 * n + n_slack
    T = zeros(m + 1, width + m + 1)
    basis = []
    need_artificial = []
    s = 0
    for k in range(m):
        T[k, :n] = P.A[k]
        T[k, n:2 * n] = -P.A[k]
        slack_col = None
        if not P.eq[k]:
            slack_col = 2 * n + s
            T[k, slack_col] = ONE
            s += 1
        T[k, -1] = P.b[k]
        if T[k, -1] < 0:
            T[k] = -T[k]
        if slack_col is not None and T[k, slack_col] == ONE:
            basis.append(slack_col)
        else:
            basis.append(width + k)
            T[k, width + k] = ONE
            need_artificial.append(k)

    tab = _Tableau(T, basis)
    if need_artificial:
        tab.price_out([ZERO] * width + [ONE if k in need_artificial else ZERO for k in range(m)])
        tab.run(range(width + m))
        if tab.T[-1, -1] != 0:
            return LpSolution(LpStatus.INFEASIBLE)
        # drive zero-level artificials out of the basis; rows with nothing to pivot on are redundant
        redundant = []
        for r, j in enumerate(tab.basis):
            if j < width:
                continue
            col = next((q for q in range(width) if tab.T[r, q] != 0), None)
            if col is None:
                redundant.append(r)
            else:
                tab.pivot(r, col)
        if redundant:
            keep = [r for r in range(tab.rows) if r not in redundant] + [tab.rows]
            tab = _Tableau(tab.T[keep], [tab.basis[r] for r in keep[:-1]])

    tab.price_out(list(c) + [-v for v in c] + [ZERO] * n_slack + [ZERO] * m)
    status = tab.run(range(width))
    if status != LpStatus.OPTIMAL:
        return LpSolution(status)

    raw = tab.values(width)
    point = tuple(raw[j] - raw[n + j] for j in range(n))
    active = tuple(k for k in range(m) if P.slack(k, point) == 0)
    return LpSolution(LpStatus.OPTIMAL, dot(c, point), point, active)


def minimize(c: Sequence, constraints: HPolyhedron) -> LpSolution:
    return solve_lp(LpProblem(as_point(c), constraints))


def efficiency_test(candidate: Sequence, objective: np.ndarray, feasible: HPolyhedron) -> EfficiencyVerdict:
    """Decides whether **candidate** is Pareto minimal for ``min objective @ x`` over **feasible**
    under the componentwise order.

    Solves ``max sum(s)`` subject to ``objective @ x + s = objective @ candidate``, ``s >= 0`` and
    ``x`` feasible; the candidate is efficient iff the optimum is zero.

    :param  candidate: Feasible point.
    :param  objective: ``k x n`` exact matrix ``G``.
    :param  feasible: Constraint set over ``x``.

    :return:    ``EfficiencyVerdict``; when not efficient, ``witness`` dominates the candidate and
                ``improving_direction = witness - candidate``.

    :raises:    ``InfeasibleCandidate`` if **candidate** violates **feasible**.
    """
    x0 = as_point(candidate)
    n = feasible.n
    k = objective.shape[0]
    if objective.shape[1] != n or len(x0) != n:
        raise DimensionMismatch('objective {} against {}-dimensional feasible set'.format(objective.shape, n))
    if not feasible.contains(x0):
        raise InfeasibleCandidate('candidate {} is not feasible'.format(tuple(str(v) for v in x0)))

    target = matvec(objective, x0)
    rows, rhs, eq = [], [], []
    for r in range(feasible.m):
        rows.append(list(feasible.A[r]) + [ZERO] * k)
        rhs.append(feasible.b[r])
        eq.append(feasible.eq[r])
    for r in range(k):
        unit = [ZERO] * k
        unit[r] = ONE
        rows.append(list(objective[r]) + unit)
        rhs.append(target[r])
        eq.append(True)
    for r in range(k):
        unit = [ZERO] * (n + k)
        unit[n + r] = -ONE
        rows.append(unit)
        rhs.append(ZERO)
        eq.append(False)

    aux = HPolyhedron(qmatrix(rows, n + k), rhs, eq)
    sol = minimize([ZERO] * n + [-ONE] * k, aux)
    if sol.status == LpStatus.UNBOUNDED:
        raise UnboundedInput('efficiency test over an unbounded image')
    if sol.value == 0:
        return EfficiencyVerdict(True)
    witness = sol.point[:n]
    return EfficiencyVerdict(False, tuple(w - v for w, v in zip(witness, x0)), witness)


def _own_and_others(game, i: int):
    own = list(game.coords(i))
    others = [j for j in range(game.n) if j not in own]
    return own, others


def parametric_best_response(game, i: int, parameter_domain: Polytope) -> List[CriticalRegion]:
    """Critical regions of player **i**'s scalar best-response LP
    ``min { f_i(y, theta) : (y, theta) in X_i }`` over the opponents' strategy ``theta``.

    Every dual-feasible basis of the slice LP is enumerated in lexicographic order. Its
    validity region is the part of **parameter_domain** where the basic solution is primal
    feasible, and its value function is affine in ``theta``. Since each dual-feasible basis
    gives an affine lower bound on the optimal value, the value function is the pointwise
    maximum of the returned pieces. Parameters whose slice is empty are covered by regions
    with status ``RegionStatus.INFEASIBLE``.

    :param  game: A validated ``LinearGame`` with ``payoff_dims[i] == 1``.
    :param  i: Zero-based player index.
    :param  parameter_domain: Polytope over the opponent coordinates, in ascending order.

    :return:    List of ``CriticalRegion``, optimal regions first, in basis order.

    :raises:    ``EmptyDomain`` for an empty domain.
    """
    if parameter_domain is None or not parameter_domain.vertices:
        raise EmptyDomain('parameter domain of player {} is empty'.format(i + 1))
    if game.payoff_dims[i] != 1:
        raise DimensionMismatch('player {} has a vector-valued cost'.format(i + 1))

    own, others = _own_and_others(game, i)
    if parameter_domain.n != len(others):
        raise DimensionMismatch('parameter domain of dimension {} for {} opponent coordinates'.format(
            parameter_domain.n, len(others)))
    Xi = game.player_constraint(i)
    cost = game.costs[i][0]
    c = [cost[j] for j in own]
    c_par = [cost[j] for j in others]
    A_own = Xi.A[:, own]
    A_par = Xi.A[:, others]
    ni = len(own)

    equalities = [k for k in range(Xi.m) if Xi.eq[k]]
    inequalities = [k for k in range(Xi.m) if not Xi.eq[k]]
    if len(equalities) > ni:
        raise DimensionMismatch('player {} has more equality rows than strategy coordinates'.format(i + 1))
    regions = []
    seen = set()
    for extra in combinations(inequalities, ni - len(equalities)):
        J = sorted(equalities + list(extra))
        A_J = A_own[J]
        AJt = np.array(A_J.T, dtype=object)
        lam = solve(AJt, [-v for v in c])
        if lam is None:
            continue
        if any(lam[r] < 0 for r, k in enumerate(J) if not Xi.eq[k]):
            continue
        # y(theta) = g + H theta
        g = solve(A_J, [Xi.b[k] for k in J])
        H = np.empty((ni, len(others)), dtype=object)
        for q in range(len(others)):
            H[:, q] = solve(A_J, [-A_par[k, q] for k in J])

        rows, rhs = [], []
        for k in range(Xi.m):
            if k in J:
                continue
            a_own = A_own[k]
            rows.append([dot(a_own, H[:, q]) + A_par[k, q] for q in range(len(others))])
            rhs.append(Xi.b[k] - dot(a_own, g))
        region = parameter_domain.hrep.add_rows(rows, rhs, [Xi.eq[k] for k in range(Xi.m) if k not in J]) \
            if rows else parameter_domain.hrep
        poly = Polytope.from_hrep(region)
        if poly is None:
            continue
        value_fn = ValueFunction(
            tuple(dot(c, H[:, q]) + c_par[q] for q in range(len(others))),
            dot(c, g))
        key = (poly, value_fn)
        if key in seen:
            continue
        seen.add(key)
        regions.append(CriticalRegion(tuple(J), region, poly, value_fn, RegionStatus.OPTIMAL))

    regions += _infeasible_regions(game, i, parameter_domain, others)
    logger.info('player %d: %d critical regions', i + 1, len(regions))
    return regions


def _infeasible_regions(game, i: int, domain: Polytope, others: List[int]) -> List[CriticalRegion]:
    """Pieces of **domain** outside the projection of ``X_i`` onto the opponent coordinates."""
    Xi = Polytope.from_hrep(game.player_constraint(i))
    if Xi is None:
        return [CriticalRegion((), domain.hrep, domain, None, RegionStatus.INFEASIBLE)]
    shadow = Xi.project(others)
    rows, rhs = shadow.hrep.inequality_form()
    out = []
    for k, (a, beta) in enumerate(zip(rows, rhs)):
        piece = domain.hrep.add_rows([[-v for v in a]], [-beta])
        if k:
            piece = piece.add_rows(rows[:k], rhs[:k])
        poly = Polytope.from_hrep(piece)
        if poly is None or dot(a, barycenter(poly.vertices)) <= beta:
            continue
        out.append(CriticalRegion((), piece, poly, None, RegionStatus.INFEASIBLE))
    return out


def region_value(regions: Sequence[CriticalRegion], theta: Sequence) -> Fraction:
    """Optimal value at **theta**: the largest value function among the regions containing it.

    :raises:    ``EmptyDomain`` when **theta** lies in no optimal region.
    """
    theta = as_point(theta)
    values = [r.value_fn(theta) for r in regions
              if r.status == RegionStatus.OPTIMAL and r.contains(theta)]
    if not values:
        raise EmptyDomain('parameter {} is not covered by an optimal region'.format(tuple(str(v) for v in theta)))
    return max(values)


def slice_problem(game, i: int, theta: Sequence) -> LpProblem:
    """Player **i**'s best-response LP with the opponents fixed at **theta**, over the own coordinates."""
    own, others = _own_and_others(game, i)
    Xi = game.player_constraint(i)
    sliced = Xi.restrict(own, others, as_point(theta))
    return LpProblem(tuple(game.costs[i][0][j] for j in own), sliced)


def scalar_cost(game, i: int, x: Sequence) -> Fraction:
    return dot(game.costs[i][0], x)


def value_at(game, i: int, theta: Sequence) -> LpSolution:
    """Optimal slice value including the opponents' part of the cost."""
    own, others = _own_and_others(game, i)
    sol = solve_lp(slice_problem(game, i, theta))
    if sol.status != LpStatus.OPTIMAL:
        return sol
    theta = as_point(theta)
    shift = dot([game.costs[i][0][j] for j in others], theta)
    return sol._replace(value=sol.value + shift)


def embed(game, i: int, y: Sequence, theta: Sequence) -> Point:
    """Joint strategy with player **i** playing **y** against **theta**."""
    own, others = _own_and_others(game, i)
    x = [ZERO] * game.n
    for j, v in zip(own, y):
        x[j] = Fraction(v)
    for j, v in zip(others, theta):
        x[j] = Fraction(v)
    return tuple(x)


def split(game, i: int, x: Sequence):
    """``(y, theta)``: player **i**'s coordinates and the opponents' coordinates of **x**."""
    own, others = _own_and_others(game, i)
    return tuple(x[j] for j in own), tuple(x[j] for j in others)
