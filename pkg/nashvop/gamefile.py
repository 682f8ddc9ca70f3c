# -*- coding: utf-8 -*-

"""Game files in and result files out.

Both are JSON. Rationals are always written as lowest-terms strings such as
``"8/55"``; integers are accepted on input.
"""

import json
import os
from fractions import Fraction
from typing import Iterable, List, Optional

from .data_objects import Diagnostic, FilterReport, NashSet, ParetoDecisionSet
from .exceptions import GameFileError
from .game import LinearGame
from .geometry import HPolyhedron, Polytope
from .helpers.rational import Point, fmt, identity, qmatrix, to_fraction, zeros
from . import logger

SCHEMA = 'nashvop-1'

GAMES_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'games')


class Sense(object):
    __slots__ = ()
    MIN = 'min'
    MAX = 'max'

    ALL = {MIN, MAX}

    @classmethod
    def is_valid(cls, s: str):
        return s.lower() in cls.ALL


def _rational(value, where: str) -> Fraction:
    try:
        return to_fraction(value)
    except TypeError as e:
        raise GameFileError('{}: {}'.format(where, e))


def _count(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise GameFileError('{} must be a positive integer, got {!r}'.format(where, value))
    return value


def _matrix(rows, ncols: int, where: str):
    try:
        return qmatrix(rows, ncols)
    except (TypeError, ValueError) as e:
        raise GameFileError('{}: {}'.format(where, e))


def _hpolyhedron(doc: dict, n: int, where: str) -> HPolyhedron:
    if not isinstance(doc, dict) or 'A' not in doc or 'b' not in doc:
        raise GameFileError('{}: expected an object with "A" and "b"'.format(where))
    A = _matrix(doc['A'], n, where + '.A') if doc['A'] else zeros(0, n)
    if not isinstance(doc['b'], list) or not isinstance(doc.get('eq') or [], list):
        raise GameFileError('{}: "b" and "eq" must be lists'.format(where))
    b = [_rational(v, where + '.b') for v in doc['b']]
    eq = doc.get('eq')
    if eq is not None and not all(isinstance(e, bool) for e in eq):
        raise GameFileError('{}.eq must hold booleans'.format(where))
    if len(b) != A.shape[0] or (eq is not None and len(eq) != len(b)):
        raise GameFileError('{}: {} rows in A but {} right-hand sides'.format(where, A.shape[0], len(b)))
    return HPolyhedron(A, b, eq)


def game_from_dict(doc: dict, name: str = None) -> LinearGame:
    """Builds a ``LinearGame`` from a parsed game document.

    Objectives with ``"sense": "max"`` are negated so that every cost is minimized. Players
    without an ``"objective"`` make the game usable by the grid oracle only.

    :raises:    ``GameFileError`` for anything malformed.
    """
    if not isinstance(doc, dict):
        raise GameFileError('a game file holds a JSON object')
    if doc.get('schema') != SCHEMA:
        raise GameFileError('unsupported schema {!r}, expected {!r}'.format(doc.get('schema'), SCHEMA))
    players = doc.get('players')
    if not players or not isinstance(players, list):
        raise GameFileError('"players" must be a nonempty list')

    if not all(isinstance(p, dict) for p in players):
        raise GameFileError('every entry of "players" must be an object')
    dims = [_count(p.get('dim'), 'players[{}].dim'.format(i)) for i, p in enumerate(players)]
    n = sum(dims)

    costs, gens = [], []
    linear = True
    for i, p in enumerate(players):
        where = 'players[{}]'.format(i)
        d = _count(p.get('payoff_dim', 1), where + '.payoff_dim')
        if 'objective' in p:
            F = _matrix(p['objective'], n, where + '.objective')
        else:
            F = zeros(d, n)
            linear = False
        sense = str(p.get('sense', Sense.MIN)).lower()
        if not Sense.is_valid(sense):
            raise GameFileError('{}.sense must be "min" or "max"'.format(where))
        if sense == Sense.MAX:
            F = -F
        costs.append(F)
        if 'dual_cone_generators' in p:
            gen_rows = p['dual_cone_generators']
            if not isinstance(gen_rows, list) or not gen_rows or not isinstance(gen_rows[0], list):
                raise GameFileError('{}.dual_cone_generators must be a nonempty list of rows'.format(where))
            W = _matrix(gen_rows, len(gen_rows[0]), where + '.dual_cone_generators').T.copy()
        else:
            W = None
        gens.append(W)
    gens = [W if W is not None else identity(F.shape[0]) for W, F in zip(gens, costs)]

    boxes = []
    box_list = doc.get('boxes') or []
    if not isinstance(box_list, list):
        raise GameFileError('"boxes" must be a list of [lo, hi] pairs')
    for j, box in enumerate(box_list):
        if box is None:
            boxes.append(None)
            continue
        if not isinstance(box, list) or len(box) != 2:
            raise GameFileError('boxes[{}] must be [lo, hi]'.format(j))
        boxes.append((_rational(box[0], 'boxes[{}]'.format(j)), _rational(box[1], 'boxes[{}]'.format(j))))

    constraints = doc.get('constraints') or {}
    if not isinstance(constraints, dict):
        raise GameFileError('"constraints" must be an object')
    shared = per_player = None
    if 'shared' in constraints:
        shared = _hpolyhedron(constraints['shared'], n, 'constraints.shared')
    if 'per_player' in constraints:
        if not isinstance(constraints['per_player'], list):
            raise GameFileError('constraints.per_player must be a list')
        per_player = [_hpolyhedron(c, n, 'constraints.per_player[{}]'.format(i))
                      for i, c in enumerate(constraints['per_player'])]
    if shared is None and per_player is None:
        shared = HPolyhedron.whole_space(n)

    oracle_costs = doc.get('oracle_costs') or []
    if not isinstance(oracle_costs, list) or not all(isinstance(s, str) for s in oracle_costs):
        raise GameFileError('"oracle_costs" must be a list of strings')
    if not linear and len(oracle_costs) != len(dims):
        raise GameFileError('players without an objective need one oracle cost each')

    return LinearGame(dims, costs, boxes, shared, per_player, gens, oracle_costs,
                      name or doc.get('name'), linear)


def load_game(path: str) -> LinearGame:
    """Reads a game file.

    :raises:    ``GameFileError`` when the file is unreadable, not JSON or malformed.
    """
    try:
        with open(path, encoding='utf-8') as f:
            doc = json.load(f)
    except (OSError, ValueError) as e:
        raise GameFileError('cannot read {}: {}'.format(path, e))
    default = os.path.splitext(os.path.basename(path))[0]
    game = game_from_dict(doc, doc.get('name', default) if isinstance(doc, dict) else default)
    logger.info('loaded %r', game)
    return game


def bundled_game(name: str) -> str:
    """Path of a game shipped with the package, e.g. ``bundled_game('ex31')``."""
    return os.path.join(GAMES_DIR, name + '.json')


def point_doc(p: Point) -> List[str]:
    return [fmt(v) for v in p]


def polytope_doc(p: Polytope) -> dict:
    return {
        'vertices': [point_doc(v) for v in p.vertices],
        'hrep': p.hrep.to_dict(),
        'dim': p.dim,
    }


def diagnostics_doc(diagnostics: Iterable[Diagnostic]) -> List[dict]:
    return [{'code': d.code, 'message': d.message, 'player': None if d.player is None else d.player + 1}
            for d in diagnostics]


def filter_report_doc(report: FilterReport) -> dict:
    return {
        'removed': [{
            'player': r.player + 1,
            'piece': polytope_doc(r.polytope),
            'witness_parameter': point_doc(r.witness_parameter),
            'witness_point': point_doc(r.witness_point),
            'best_value': fmt(r.best_value),
        } for r in report.removed],
        'kept': [polytope_doc(p) for p in report.kept],
    }


def result_document(game: LinearGame, mode: str, result=None, report: Optional[FilterReport] = None,
                    diagnostics: Iterable[Diagnostic] = (), points: Iterable[Point] = None) -> dict:
    """Builds a result document.

    :param  result: A ``NashSet`` or a ``ParetoDecisionSet`` (``None`` when the run failed).
    :param  points: Accepted grid points for oracle runs.
    """
    doc = {
        'schema': SCHEMA,
        'game': game.name if game is not None else None,
        'mode': mode,
        'diagnostics': diagnostics_doc(diagnostics),
    }
    if isinstance(result, NashSet):
        doc['exactness'] = result.exactness
        doc['components'] = [polytope_doc(c) for c in result.components]
        if result.union_game:
            doc['union_game_components'] = [polytope_doc(c) for c in result.union_game]
        if result.subset_components:
            doc['subset_components'] = [polytope_doc(c) for c in result.subset_components]
        if result.certified:
            doc['certified'] = [{'point': point_doc(v), 'equilibrium': ok} for v, ok in result.certified]
    elif isinstance(result, ParetoDecisionSet):
        doc['exactness'] = 'Exact'
        doc['components'] = [polytope_doc(c) for c in result.faces]
    if report is not None:
        doc['filter_report'] = filter_report_doc(report)
    if points is not None:
        doc['points'] = [point_doc(p) for p in points]
    return doc


def save_result(doc: dict, path: str):
    with open(path, 'w', encoding='utf-8') as f:
        f.write(dumps(doc))


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + '\n'


def load_result(path: str) -> dict:
    with open(path, encoding='utf-8') as f:
        return json.load(f)


def parse_point(text: str) -> Point:
    """``"8/55,78/55,0,6"`` -> exact point.

    :raises:    ``GameFileError`` for malformed coordinates.
    """
    parts = [s for s in text.replace(';', ',').split(',')]
    if not text.strip() or any(not s.strip() for s in parts):
        raise GameFileError('malformed point {!r}'.format(text))
    return tuple(_rational(s, 'point') for s in parts)


def component_vertices(doc: dict, key: str = 'components') -> List[List[Point]]:
    """Vertex lists of the components stored under **key**, each as exact points, sorted."""
    out = []
    for c in doc.get(key, []):
        out.append(sorted(tuple(Fraction(v) for v in vertex) for vertex in c['vertices']))
    return sorted(out)
