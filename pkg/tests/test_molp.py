#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `nashvop.molp`."""


import unittest

from nashvop.cones import scalarized_objective
from nashvop.equilibrium import best_response_graph
from nashvop.exceptions import EmptySet
from nashvop.game import Selector, feasible_set, stacked_objective
from nashvop.geometry import HPolyhedron, Polytope
from nashvop.helpers.rational import qmatrix
from nashvop.molp import (
    efficient_frontier, efficient_vertices, maximal_efficient_faces, pareto_decision_set)

from .fixtures import X2, X3, X5, game, midpoint


class TestSmallProblems(unittest.TestCase):
    """Tests on the unit square."""

    def setUp(self):
        """Set up test fixtures, if any."""
        self.square = Polytope.from_hrep(HPolyhedron.box([(0, 1), (0, 1)]))

    def tearDown(self):
        """Tear down test fixtures, if any."""

    def test_single_minimizer(self):
        """Minimizing both coordinates leaves only the origin."""
        G = qmatrix([[1, 0], [0, 1]])
        assert efficient_vertices(G, self.square) == [(0, 0)]
        pareto = pareto_decision_set(G, self.square)
        assert [f.vertices for f in pareto.faces] == [((0, 0),)]

    def test_whole_edge(self):
        """A single objective ignoring ``y`` is minimal on the left edge."""
        pareto = pareto_decision_set(qmatrix([[1, 0]]), self.square)
        assert len(pareto.faces) == 1
        assert pareto.faces[0].vertices == ((0, 0), (0, 1))
        assert pareto.contains((0, 1))
        assert not pareto.contains((1, 0))

    def test_conflicting_objectives(self):
        """``x`` against ``-x``: everything is efficient."""
        G = qmatrix([[1, 0], [-1, 0]])
        faces = maximal_efficient_faces(G, self.square, efficient_vertices(G, self.square))
        assert len(faces) == 1
        assert faces[0].polytope == self.square
        assert faces[0].maximal

    def test_hypotenuse(self):
        """Minimizing ``x`` and ``y`` over the square without its lower-left corner."""
        cut = Polytope.from_hrep(HPolyhedron.box([(0, 1), (0, 1)]).add_rows([[-1, -1]], [-1]))
        pareto = pareto_decision_set(qmatrix([[1, 0], [0, 1]]), cut)
        assert [f.vertices for f in pareto.faces] == [((0, 1), (1, 0))]

    def test_empty(self):
        with self.assertRaises(EmptySet):
            efficient_vertices(qmatrix([[1]]), None)


class TestBestResponseGraphs(unittest.TestCase):
    """Face and extremal point counts of the bundled games."""

    def test_ex31(self):
        ex31 = game('ex31')
        X = feasible_set(ex31, Selector.INTERSECTION)
        first = best_response_graph(ex31, 0, X)
        second = best_response_graph(ex31, 1, X)
        assert len(first.faces) == 3
        assert len(first.extremal_points()) == 7
        assert len(second.faces) == 4
        assert len(second.extremal_points()) == 9

    def test_ex31_contains_the_equilibrium_segments(self):
        ex31 = game('ex31')
        X = feasible_set(ex31, Selector.INTERSECTION)
        for i in range(2):
            graph = best_response_graph(ex31, i, X)
            assert graph.contains(midpoint(X2, X5))
            assert graph.contains(X3)

    def test_ex41(self):
        ex41 = game('ex41')
        X = feasible_set(ex41, Selector.INTERSECTION)
        first = best_response_graph(ex41, 0, X)
        second = best_response_graph(ex41, 1, X)
        assert len(first.faces) == 2
        assert len(first.extremal_points()) == 9
        assert len(second.faces) == 2
        assert len(second.extremal_points()) == 10


class TestFrontier(unittest.TestCase):
    """Tests for the objective-space images."""

    def test_projection(self):
        """Dropping the cost block of the frontier gives back the faces' vertices."""
        ex31 = game('ex31')
        X = feasible_set(ex31, Selector.INTERSECTION)
        pareto = pareto_decision_set(scalarized_objective(ex31, 0), X)
        frontier = efficient_frontier(ex31, 0, X, pareto)
        B = stacked_objective(ex31)
        assert len(frontier) == len(pareto.faces)
        for images, face in zip(frontier, pareto.faces):
            assert [p[:4] for p in images] == list(face.vertices)
            assert all(len(p) == B.shape[0] for p in images)
            assert all(p[4] == -(2 * p[0] + p[1]) for p in images)


if __name__ == '__main__':
    unittest.main()
