# -*- coding: utf-8 -*-

"""Console script for nashvop."""
import logging
import sys

import click
import pandas as pd

from . import __version__, logger
from .exceptions import GameFileError
from .gamefile import dumps, parse_point, result_document, save_result
from .helpers.rational import fmt, to_fraction
from .nashvop import Mode, NashVop

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2
EXIT_NOT_EQUILIBRIUM = 3


class Rational(click.ParamType):
    """A rational such as ``1/4`` or ``2``."""

    name = 'rational'

    def convert(self, value, param, ctx):
        try:
            return to_fraction(value)
        except TypeError:
            self.fail('{!r} is not a rational'.format(value), param, ctx)


def _point_str(p) -> str:
    return '(' + ', '.join(fmt(v) for v in p) + ')'


def summary_table(components) -> pd.DataFrame:
    """One row per component: dimension, vertex count and the sorted extremal points."""
    rows = [{
        'component': k + 1,
        'dim': c.dim,
        'vertices': len(c.vertices),
        'extremal points': ' '.join(_point_str(v) for v in c.vertices),
    } for k, c in enumerate(components)]
    return pd.DataFrame(rows, columns=['component', 'dim', 'vertices', 'extremal points'])


def _echo_table(components, title: str):
    click.echo('{}: {} component(s)'.format(title, len(components)))
    if components:
        click.echo(summary_table(components).to_string(index=False))


def _load(ctx, game_path: str, validate: bool = True) -> NashVop:
    try:
        nv = NashVop.from_file(game_path)
    except GameFileError as e:
        click.echo('error: {}'.format(e), err=True)
        ctx.exit(EXIT_INVALID)
    if validate and nv.validate():
        for d in nv.diagnostics:
            click.echo('diagnostic: {}'.format(d), err=True)
    return nv


def _finish(ctx, nv: NashVop, out: str, mode: str, **kwargs):
    doc = result_document(nv.game, mode, diagnostics=nv.diagnostics, **kwargs)
    if out:
        save_result(doc, out)
        click.echo('wrote {}'.format(out))


def _run(ctx, nv: NashVop, out: str, mode: str, action):
    """Runs **action**, mapping input errors to exit 2 and everything else to exit 1."""
    if nv.diagnostics:
        _finish(ctx, nv, out, mode)
        ctx.exit(EXIT_INVALID)
    try:
        return action()
    except (ValueError, SyntaxError) as e:
        click.echo('error: {}'.format(e), err=True)
        _finish(ctx, nv, out, mode)
        ctx.exit(EXIT_INVALID)
    except Exception as e:
        logger.exception('%s failed on %s', mode, nv.game.name)
        click.echo('error: {}'.format(e), err=True)
        _finish(ctx, nv, out, mode)
        ctx.exit(EXIT_ERROR)


_game_option = click.option('--game', 'game_path', required=True, type=click.Path(exists=True, dir_okay=False),
                            help='Game file (JSON).')
_out_option = click.option('--out', type=click.Path(dir_okay=False, writable=True), default=None,
                           help='Write the result file here.')


@click.group()
@click.option('-v', '--verbose', count=True, help='-v for progress, -vv for solver traces.')
@click.version_option(__version__)
def main(verbose):
    """Exact Nash equilibrium sets of linear games."""
    if verbose:
        logger.setLevel(logging.DEBUG if verbose > 1 else logging.INFO)
    return 0


@main.command()
@_game_option
@click.option('--mode', type=click.Choice(Mode.ORDER), default=Mode.GENERALIZED, show_default=True)
@_out_option
@click.pass_context
def solve(ctx, game_path, mode, out):
    """Compute the equilibrium set of a game."""
    nv = _load(ctx, game_path)
    result, report = _run(ctx, nv, out, mode, lambda: nv.solve(mode))
    _echo_table(result.components, '{} equilibria ({})'.format(nv.game.name, result.exactness))
    if result.union_game:
        _echo_table(result.union_game, 'union game')
    if result.subset_components:
        _echo_table(result.subset_components, 'inner bound')
    for v, ok in result.certified:
        click.echo('{} {}'.format(_point_str(v), 'EQUILIBRIUM' if ok else 'not an equilibrium'))
    if report is not None:
        click.echo('filter removed {} piece(s)'.format(len(report.removed)))
    _finish(ctx, nv, out, mode, result=result, report=report)
    ctx.exit(EXIT_OK)


@main.command(name='best-response')
@_game_option
@click.option('--player', type=click.IntRange(min=1), required=True, help='Player number, starting at 1.')
@click.option('--set', 'on', type=click.Choice([Mode.SHARED, Mode.INTERSECTION]), default=Mode.INTERSECTION,
              show_default=True)
@click.option('--frontier', is_flag=True, help='Also print the efficient frontier (x, f(x)).')
@_out_option
@click.pass_context
def best_response(ctx, game_path, player, on, frontier, out):
    """Compute one player's best-response graph."""
    nv = _load(ctx, game_path)
    mode = 'best-response'
    graph = _run(ctx, nv, out, mode, lambda: nv.best_response(player - 1, on))
    _echo_table(graph.faces, 'player {} best responses'.format(player))
    click.echo('{} extremal point(s)'.format(len(graph.extremal_points())))
    if frontier:
        for k, images in enumerate(nv.frontier(player - 1, graph)):
            click.echo('frontier {}: {}'.format(k + 1, ' '.join(_point_str(p) for p in images)))
    _finish(ctx, nv, out, mode, result=graph)
    ctx.exit(EXIT_OK)


@main.command()
@_game_option
@click.option('--step', type=Rational(), required=True, help='Grid step, e.g. 1/4.')
@_out_option
@click.pass_context
def oracle(ctx, game_path, step, out):
    """List the grid points no player can improve on."""
    nv = _load(ctx, game_path)
    points = _run(ctx, nv, out, 'oracle', lambda: nv.oracle(step))
    click.echo('{} grid equilibrium point(s)'.format(len(points)))
    for p in points:
        click.echo(_point_str(p))
    _finish(ctx, nv, out, 'oracle', points=points)
    ctx.exit(EXIT_OK)


@main.command()
@_game_option
@click.option('--point', 'point_text', required=True, help='Joint strategy, e.g. "0,5/2,3/2,0".')
@click.option('--step', type=Rational(), default=None, help='Grid step for games without linear costs.')
@click.pass_context
def check(ctx, game_path, point_text, step):
    """Check whether a joint strategy is an equilibrium."""
    nv = _load(ctx, game_path)

    def run():
        return nv.check(parse_point(point_text), step)

    verdicts = _run(ctx, nv, None, 'check', run)
    failed = [v for v in verdicts if not v.ok]
    if not failed:
        click.echo('EQUILIBRIUM')
        ctx.exit(EXIT_OK)
    for v in failed:
        click.echo('player {} can improve: deviation {}'.format(v.player + 1, _point_str(v.deviation)))
    ctx.exit(EXIT_NOT_EQUILIBRIUM)


@main.command()
@_game_option
@click.option('--json', 'as_json', is_flag=True, help='Print the diagnostics as a result document.')
@click.pass_context
def validate(ctx, game_path, as_json):
    """Report problems in a game file."""
    nv = _load(ctx, game_path, validate=False)
    diagnostics = nv.validate()
    if as_json:
        click.echo(dumps(result_document(nv.game, 'validate', diagnostics=diagnostics)), nl=False)
    else:
        for d in diagnostics:
            click.echo(str(d))
        if not diagnostics:
            click.echo('no diagnostics')
    ctx.exit(EXIT_INVALID if diagnostics else EXIT_OK)


if __name__ == "__main__":
    sys.exit(main())  # pragma: no cover
