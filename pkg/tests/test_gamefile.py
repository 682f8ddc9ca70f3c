#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `nashvop.gamefile`."""


import copy
import json
import os
import tempfile
import unittest
from fractions import Fraction as Q

from nashvop.equilibrium import shared_constraint_ne
from nashvop.exceptions import GameFileError
from nashvop.gamefile import (
    SCHEMA, bundled_game, component_vertices, dumps, game_from_dict, load_game, parse_point,
    result_document, save_result)
from nashvop.game import GameKind

from .fixtures import X8, expected_vertices, game, vertex_sets

GAME = {
    'schema': SCHEMA,
    'name': 'line',
    'players': [
        {'dim': 1, 'objective': [[1, 0]]},
        {'dim': 1, 'objective': [[0, '1/2']], 'sense': 'max'},
    ],
    'constraints': {'shared': {'A': [[1, 1]], 'b': [1]}},
    'boxes': [[0, 1], [0, 1]],
}


class TestGameFiles(unittest.TestCase):
    """Reading game documents."""

    def test_from_dict(self):
        g = game_from_dict(GAME)
        assert g.name == 'line'
        assert g.dims == (1, 1)
        assert list(g.costs[1][0]) == [0, Q(-1, 2)]
        assert g.kind == GameKind.SHARED_SCALAR
        assert g.boxes == [(0, 1), (0, 1)]

    def test_bundled(self):
        ex41 = game('ex41')
        assert ex41.name == 'ex41'
        assert ex41.payoff_dims == (2, 2)
        assert ex41.dual_generators[0].shape == (2, 2)
        oracle_only = game('ex22')
        assert not oracle_only.linear
        assert len(oracle_only.oracle_costs) == 2

    def test_bad_documents(self):
        for change in (
                lambda d: d.update(schema='nashvop-0'),
                lambda d: d.update(players=[]),
                lambda d: d['players'][0].update(dim='two'),
                lambda d: d['players'][0].update(objective=[[0.5, 0]]),
                lambda d: d['players'][0].update(sense='up'),
                lambda d: d['boxes'].__setitem__(0, [0, 1, 2]),
                lambda d: d['constraints']['shared'].update(b=[1, 2]),
                lambda d: d['constraints'].update(shared={'A': [[1, 1]]}),
                lambda d: d.update(oracle_costs=[1, 2]),
                lambda d: d.update(oracle_costs='x[1][1]'),
                lambda d: d['players'][0].update(payoff_dim='two'),
                lambda d: d['players'][0].update(dim=True),
                lambda d: d['players'][0].update(dim=0),
                lambda d: d['players'].__setitem__(1, 'player'),
                lambda d: d.update(boxes=5),
                lambda d: d['boxes'].__setitem__(0, 3),
                lambda d: d.update(constraints=[1]),
                lambda d: d['constraints'].update(per_player={'A': [[1, 1]], 'b': [1]}),
                lambda d: d['constraints']['shared'].update(b='1'),
                lambda d: d['constraints']['shared'].update(eq=[1]),
                lambda d: d['players'][0].update(dual_cone_generators=1),
        ):
            doc = copy.deepcopy(GAME)
            change(doc)
            with self.assertRaises(GameFileError):
                game_from_dict(doc)

    def test_objective_or_oracle_cost(self):
        doc = copy.deepcopy(GAME)
        del doc['players'][0]['objective']
        with self.assertRaises(GameFileError):
            game_from_dict(doc)
        doc['oracle_costs'] = ['x[1][1]', 'x[2][1]']
        assert not game_from_dict(doc).linear

    def test_unreadable(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'broken.json')
            with open(path, 'w') as f:
                f.write('{"schema": ')
            with self.assertRaises(GameFileError):
                load_game(path)
            with self.assertRaises(GameFileError):
                load_game(os.path.join(tmp, 'missing.json'))

    def test_name_defaults_to_file_name(self):
        doc = copy.deepcopy(GAME)
        del doc['name']
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'unnamed.json')
            with open(path, 'w') as f:
                json.dump(doc, f)
            assert load_game(path).name == 'unnamed'


class TestPoints(unittest.TestCase):
    """Parsing joint strategies."""

    def test_parse(self):
        assert parse_point('8/55,78/55,0,6') == X8
        assert parse_point(' 1/2 ; 1/2 ') == (Q(1, 2), Q(1, 2))

    def test_malformed(self):
        for text in ('', 'a,b', '1,,2', '0.5,1.5.2'):
            with self.assertRaises(GameFileError):
                parse_point(text)


class TestResults(unittest.TestCase):
    """Writing result documents."""

    def setUp(self):
        """Set up test fixtures, if any."""
        self.ex41 = game('ex41')
        self.result = shared_constraint_ne(self.ex41)

    def test_document(self):
        doc = result_document(self.ex41, 'shared', self.result)
        assert doc['schema'] == SCHEMA
        assert doc['game'] == 'ex41'
        assert doc['exactness'] == 'Exact'
        assert doc['diagnostics'] == []
        assert component_vertices(doc) == vertex_sets(self.result.components)
        assert component_vertices(doc) == expected_vertices('ex41_shared')
        assert all(isinstance(v, str) for c in doc['components'] for p in c['vertices'] for v in p)
        assert any('8/55' in p for c in doc['components'] for p in c['vertices'])

    def test_saved_file_is_stable(self):
        doc = result_document(self.ex41, 'shared', self.result)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'out.json')
            save_result(doc, path)
            with open(path, encoding='utf-8') as f:
                text = f.read()
            assert text == dumps(json.loads(text))
            assert json.loads(text) == json.loads(dumps(doc))

    def test_bundled_path(self):
        assert os.path.isfile(bundled_game('ex31'))


if __name__ == '__main__':
    unittest.main()
