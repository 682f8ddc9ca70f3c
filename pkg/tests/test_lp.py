#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `nashvop.lp`."""


import unittest
from fractions import Fraction as Q

from nashvop.cones import scalarized_objective
from nashvop.data_objects import ValueFunction
from nashvop.exceptions import DimensionMismatch, EmptyDomain, InfeasibleCandidate
from nashvop.game import LinearGame
from nashvop.geometry import HPolyhedron, Polytope
from nashvop.helpers.rational import barycenter, dot, qmatrix
from nashvop.lp import (
    LpStatus, RegionStatus, efficiency_test, minimize, parametric_best_response, region_value,
    slice_problem, solve_lp, value_at)

from .fixtures import X3, X5, game


def two_player_game(costs, shared=None, per_player=None):
    """Two one-dimensional players on the unit square."""
    if shared is None and per_player is None:
        shared = HPolyhedron.whole_space(2)
    return LinearGame([1, 1], [qmatrix([c]) for c in costs], [(0, 1), (0, 1)], shared, per_player)


class TestSolveLp(unittest.TestCase):
    """Tests for the two-phase simplex."""

    def setUp(self):
        """Set up test fixtures, if any."""
        self.square = HPolyhedron.box([(0, 1), (0, 1)])

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_box_minimum(self):
        """The minimum of ``x + y`` on the unit square is the origin, on both lower bounds."""
        sol = minimize([1, 1], self.square)
        assert sol.status == LpStatus.OPTIMAL
        assert sol.value == 0
        assert sol.point == (0, 0)
        assert set(sol.basis) == {1, 3}

    def test_negative_right_hand_side(self):
        """``x >= 1`` needs the first phase."""
        sol = minimize([-1], HPolyhedron.from_rows([[-1], [1]], [-1, 3], 1))
        assert sol.status == LpStatus.OPTIMAL
        assert sol.value == -3
        assert sol.point == (3,)

    def test_infeasible(self):
        sol = minimize([1], HPolyhedron.from_rows([[1], [-1]], [0, -1], 1))
        assert sol.status == LpStatus.INFEASIBLE
        assert sol.point is None

    def test_unbounded(self):
        sol = minimize([1], HPolyhedron.from_rows([[1]], [1], 1))
        assert sol.status == LpStatus.UNBOUNDED

    def test_equality(self):
        """On ``x + y = 1`` the cheaper coordinate takes everything."""
        line = self.square.add_rows([[1, 1]], [1], [True])
        sol = minimize([1, 2], line)
        assert sol.status == LpStatus.OPTIMAL
        assert sol.value == 1
        assert sol.point == (1, 0)

    def test_repeated_equality(self):
        """A duplicated equality row is dropped after the first phase."""
        line = self.square.add_rows([[1, 1], [2, 2]], [1, 2], [True, True])
        sol = minimize([1, 2], line)
        assert sol.status == LpStatus.OPTIMAL
        assert sol.point == (1, 0)

    def test_fractional_optimum(self):
        """``max x + y`` under ``2x + y <= 1`` and ``x + 2y <= 1`` is attained at (1/3, 1/3)."""
        P = HPolyhedron.box([(0, 1), (0, 1)]).add_rows([[2, 1], [1, 2]], [1, 1])
        sol = minimize([-1, -1], P)
        assert sol.point == (Q(1, 3), Q(1, 3))
        assert sol.value == Q(-2, 3)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionMismatch):
            minimize([1], self.square)

    def test_slice_of_a_game(self):
        """Player 1 of ex31 against (0, 6) is limited by ``4 x11 + x12 <= 2``."""
        ex31 = game('ex31')
        sol = solve_lp(slice_problem(ex31, 0, (0, 6)))
        assert sol.status == LpStatus.OPTIMAL
        assert sol.point == (0, 2)
        assert sol.value == -2
        assert value_at(ex31, 0, (0, 6)).value == -2


class TestEfficiencyTest(unittest.TestCase):
    """Tests for the efficiency test."""

    def setUp(self):
        """Set up test fixtures, if any."""
        self.unit = HPolyhedron.box([(0, 1)])
        # unit square above x + y = 1
        self.triangle = HPolyhedron.box([(0, 1), (0, 1)]).add_rows([[-1, -1]], [-1])
        self.identity = qmatrix([[1, 0], [0, 1]])

    def test_single_objective(self):
        G = qmatrix([[1]])
        assert efficiency_test((0,), G, self.unit).efficient
        verdict = efficiency_test((1,), G, self.unit)
        assert not verdict.efficient
        assert verdict.witness == (0,)
        assert verdict.improving_direction == (-1,)

    def test_two_objectives(self):
        """The efficient points of the triangle are on its hypotenuse."""
        assert efficiency_test((Q(1, 2), Q(1, 2)), self.identity, self.triangle).efficient
        assert efficiency_test((1, 0), self.identity, self.triangle).efficient
        verdict = efficiency_test((1, 1), self.identity, self.triangle)
        assert not verdict.efficient
        w = verdict.witness
        assert self.triangle.contains(w)
        assert w[0] + w[1] == 1
        assert all(a <= 1 for a in w)

    def test_infeasible_candidate(self):
        with self.assertRaises(InfeasibleCandidate):
            efficiency_test((2,), qmatrix([[1]]), self.unit)

    def test_game_segment(self):
        """Points of the segment co{x3, x5} of ex31 are efficient for both players; a point where
        player 1 can still move is not, and the witness keeps player 2 in place."""
        ex31 = game('ex31')
        joint = ex31.intersection_constraint()
        center = barycenter([X3, X5])
        for i in range(2):
            assert efficiency_test(center, scalarized_objective(ex31, i), joint).efficient

        loose = (Q(1, 2), Q(1), Q(1, 2), Q(1))
        verdict = efficiency_test(loose, scalarized_objective(ex31, 0), joint)
        assert not verdict.efficient
        assert verdict.witness[2:] == (Q(1, 2), Q(1))
        assert joint.contains(verdict.witness)
        assert dot([2, 1], verdict.witness[:2]) > dot([2, 1], loose[:2])


class TestParametricBestResponse(unittest.TestCase):
    """Tests for the critical-region enumeration."""

    def setUp(self):
        """Set up test fixtures, if any."""
        self.domain = Polytope.from_points([(0,), (1,)])

    def test_decoupled(self):
        """Player 1 pays its own strategy and always plays 0."""
        g = two_player_game([[1, 0], [0, 1]])
        regions = parametric_best_response(g, 0, self.domain)
        assert len(regions) == 1
        assert regions[0].status == RegionStatus.OPTIMAL
        assert regions[0].basis == (1,)
        assert regions[0].value_fn == ValueFunction((0,), 0)

    def test_opponent_part_of_cost(self):
        """The opponent's share of the cost shows up in the gradient."""
        g = two_player_game([[1, 1], [0, 1]])
        regions = parametric_best_response(g, 0, self.domain)
        assert [r.value_fn for r in regions] == [ValueFunction((1,), 0)]

    def test_coupled(self):
        """Under ``x1 + x2 >= 1`` the best reply is ``1 - x2``."""
        g = two_player_game([[1, 0], [0, 1]], shared=HPolyhedron.from_rows([[-1, -1]], [-1], 2))
        regions = parametric_best_response(g, 0, self.domain)
        optimal = [r for r in regions if r.status == RegionStatus.OPTIMAL]
        assert ValueFunction((-1,), 1) in [r.value_fn for r in optimal]
        assert not [r for r in regions if r.status == RegionStatus.INFEASIBLE]
        for theta in [(0,), (Q(1, 4),), (Q(1, 2),), (1,)]:
            assert region_value(regions, theta) == 1 - theta[0]
            assert value_at(g, 0, theta).value == 1 - theta[0]

    def test_infeasible_part(self):
        """Player 1 may only move while ``x2 <= 1/2``; the rest of the domain is infeasible."""
        own = HPolyhedron.from_rows([[0, 1]], [Q(1, 2)], 2)
        g = two_player_game([[1, 0], [0, 1]], per_player=[own, HPolyhedron.whole_space(2)])
        regions = parametric_best_response(g, 0, self.domain)
        infeasible = [r for r in regions if r.status == RegionStatus.INFEASIBLE]
        assert len(infeasible) == 1
        assert infeasible[0].polytope.vertices == ((Q(1, 2),), (1,))
        assert infeasible[0].value_fn is None
        assert region_value(regions, (Q(1, 4),)) == 0
        with self.assertRaises(EmptyDomain):
            region_value(regions, (Q(3, 4),))

    def test_agrees_with_pointwise_solves(self):
        """On ex31 the value function matches the slice LP at every vertex of the opponent's shadow
        and at the centers of its critical regions."""
        ex31 = game('ex31')
        domain = Polytope.from_hrep(ex31.intersection_constraint()).project([2, 3])
        regions = parametric_best_response(ex31, 0, domain)
        samples = list(domain.vertices)
        samples += [barycenter(r.polytope.vertices) for r in regions if r.status == RegionStatus.OPTIMAL]
        for theta in samples:
            assert region_value(regions, theta) == value_at(ex31, 0, theta).value

    def test_errors(self):
        g = two_player_game([[1, 0], [0, 1]])
        with self.assertRaises(EmptyDomain):
            parametric_best_response(g, 0, None)
        with self.assertRaises(DimensionMismatch):
            parametric_best_response(g, 0, Polytope.from_points([(0, 0)]))


if __name__ == '__main__':
    unittest.main()
