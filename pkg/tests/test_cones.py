#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `nashvop.cones`."""


import unittest
from fractions import Fraction as Q

from nashvop.cones import (
    cone_dominates, cone_member, dominates, dual_generators, image, scalarized_objective)
from nashvop.equilibrium import intersection_superset
from nashvop.exceptions import DimensionMismatch
from nashvop.game import LinearGame, Selector, feasible_set
from nashvop.geometry import HPolyhedron
from nashvop.helpers.rational import qmatrix

from .fixtures import X3, game

Z1 = [
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0],
    [1, -1, 0, 0, 0],
    [0, 0, 1, -1, 0],
    [0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0],
]
Z2 = [
    [1, -1, 0, 0, 0],
    [0, 0, 1, -1, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1],
]


def as_lists(matrix):
    return [list(row) for row in matrix]


class TestDualGenerators(unittest.TestCase):
    """Tests for the per-player cone generators."""

    def setUp(self):
        """Set up test fixtures, if any."""
        self.ex31 = game('ex31')
        self.ex41 = game('ex41')

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_scalar_game(self):
        """Two players with two coordinates each: five generators per player."""
        z1 = dual_generators(self.ex31, 0)
        z2 = dual_generators(self.ex31, 1)
        assert z1.m == 5 and z2.m == 5
        assert as_lists(z1.Z) == Z1
        assert as_lists(z2.Z) == Z2

    def test_vector_game(self):
        """Vector payoffs add one generator per column of the payoff cone's dual."""
        z = dual_generators(self.ex41, 0)
        assert z.Z.shape == (8, 6)
        assert list(z.Z[4, 4:]) == [1, 0]
        assert list(z.Z[5, 4:]) == [0, 1]
        assert all(v == 0 for v in z.Z[6:, :].flatten())

    def test_scalarized_objective(self):
        G = scalarized_objective(self.ex31, 0)
        assert as_lists(G) == [
            [0, 0, 1, 0],
            [0, 0, -1, 0],
            [0, 0, 0, 1],
            [0, 0, 0, -1],
            [-2, -1, 0, 0],
        ]
        G2 = scalarized_objective(self.ex41, 1)
        assert as_lists(G2)[-2:] == [[0, 0, -2, 0], [0, 0, 0, -3]]

    def test_single_player(self):
        """Without opponents the scalarized objective is the cost itself."""
        solo = LinearGame([2], [qmatrix([[1, 3]])], [(0, 1), (0, 1)], HPolyhedron.whole_space(2))
        assert as_lists(scalarized_objective(solo, 0)) == [[1, 3]]


class TestConeMembership(unittest.TestCase):
    """Tests for cone membership and dominance."""

    def setUp(self):
        """Set up test fixtures, if any."""
        self.ex31 = game('ex31')

    def test_member(self):
        """Player 1's cone: own moves free, opponent fixed, own cost nonincreasing."""
        assert cone_member(self.ex31, 0, (5, -3, 0, 0, 1, -7))
        assert not cone_member(self.ex31, 0, (0, 0, 1, 0, 1, 0))
        assert not cone_member(self.ex31, 0, (0, 0, 0, 0, -1, 0))
        assert cone_member(self.ex31, 1, (0, 0, 1, 0, 0, 1))
        assert cone_member(self.ex31, None, (0, 0, 1, 0, 0, 1))
        assert not cone_member(self.ex31, None, (1, 0, 1, 0, 1, 1))

    def test_member_length(self):
        with self.assertRaises(DimensionMismatch):
            cone_member(self.ex31, 0, (0, 0, 0))

    def test_image(self):
        assert image(self.ex31, X3) == (1, 2, 1, 2, -4, -8)

    def test_dominates(self):
        G = qmatrix([[1, 0], [0, 1]])
        assert dominates(G, (0, 0), (0, 1))
        assert not dominates(G, (0, 1), (1, 0))
        assert not dominates(G, (1, 1), (1, 1))

    def test_cone_dominates(self):
        """Player 1 moving from (1, 2) to (0, 2) against a fixed opponent loses 2."""
        worse = (Q(0), Q(2), Q(1), Q(2))
        assert cone_dominates(self.ex31, 0, X3, worse)
        assert not cone_dominates(self.ex31, 0, worse, X3)
        assert not cone_dominates(self.ex31, 1, X3, worse)

    def test_superset_points_are_undominated(self):
        """Among the joint vertices, none dominates a vertex of the intersection game's
        equilibrium set under the union of the players' cones."""
        joint = feasible_set(self.ex31, Selector.INTERSECTION)
        superset = intersection_superset(self.ex31)
        vertices = joint.vertices
        for x in vertices:
            if not superset.contains(x):
                continue
            assert not any(cone_dominates(self.ex31, None, y, x) for y in vertices)


if __name__ == '__main__':
    unittest.main()
