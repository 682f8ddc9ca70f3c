# -*- coding: utf-8 -*-

"""Cost expressions: tokenizer, recursive-descent parser and an immutable AST.

Grammar::

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | atom
    atom  := NUMBER ['/' NUMBER] | 'x' '[' NUMBER ']' '[' NUMBER ']'
           | 'abs' '(' expr ')' | '(' expr ')'

Variables are written with 1-based player and coordinate indices, ``x[2][1]``
being the first coordinate of the second player.
"""

import re
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Union

from ..exceptions import CostSyntaxError, UnknownVariable


class Num(NamedTuple):
    value: Fraction

    def evaluate(self, x) -> Fraction:
        return self.value

    def source(self) -> str:
        return str(self.value)


class Var(NamedTuple):
    player: int
    coord: int

    def evaluate(self, x) -> Fraction:
        return Fraction(x[self.player - 1][self.coord - 1])

    def source(self) -> str:
        return 'x[{}][{}]'.format(self.player, self.coord)


class Neg(NamedTuple):
    operand: 'CostExpr'

    def evaluate(self, x) -> Fraction:
        return -self.operand.evaluate(x)

    def source(self) -> str:
        return '-' + self.operand.source()


class Abs(NamedTuple):
    operand: 'CostExpr'

    def evaluate(self, x) -> Fraction:
        return abs(self.operand.evaluate(x))

    def source(self) -> str:
        return 'abs({})'.format(self.operand.source())


class BinOp(NamedTuple):
    op: str
    left: 'CostExpr'
    right: 'CostExpr'

    def evaluate(self, x) -> Fraction:
        a = self.left.evaluate(x)
        b = self.right.evaluate(x)
        if self.op == '+':
            return a + b
        if self.op == '-':
            return a - b
        return a * b

    def source(self) -> str:
        return '({} {} {})'.format(self.left.source(), self.op, self.right.source())


CostExpr = Union[Num, Var, Neg, Abs, BinOp]


class Token(NamedTuple):
    kind: str
    text: str
    offset: int


_TOKEN = re.compile(r'\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*/()\[\]]))')


def tokenize(src: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            break
        m = _TOKEN.match(src, pos)
        if m is None:
            raise CostSyntaxError('unexpected character {!r}'.format(src[pos]), pos)
        kind = m.lastgroup
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token('end', '', len(src)))
    return tokens


class _Parser(object):

    def __init__(self, src: str, dims: Sequence[int] = None):
        self.tokens = tokenize(src)
        self.pos = 0
        self.dims = dims

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        tok = self.current
        if tok.text != text or tok.kind == 'end':
            found = 'end of input' if tok.kind == 'end' else repr(tok.text)
            raise CostSyntaxError('expected {!r}, found {}'.format(text, found), tok.offset)
        return self.take()

    def number(self) -> int:
        tok = self.current
        if tok.kind != 'num':
            found = 'end of input' if tok.kind == 'end' else repr(tok.text)
            raise CostSyntaxError('expected a number, found {}'.format(found), tok.offset)
        self.take()
        return int(tok.text)

    def parse(self) -> CostExpr:
        tree = self.expr()
        if self.current.kind != 'end':
            raise CostSyntaxError('unexpected {!r}'.format(self.current.text), self.current.offset)
        return tree

    def expr(self) -> CostExpr:
        left = self.term()
        while self.current.text in ('+', '-') and self.current.kind == 'op':
            op = self.take().text
            left = BinOp(op, left, self.term())
        return left

    def term(self) -> CostExpr:
        left = self.unary()
        while self.current.text == '*' and self.current.kind == 'op':
            self.take()
            left = BinOp('*', left, self.unary())
        return left

    def unary(self) -> CostExpr:
        if self.current.text == '-' and self.current.kind == 'op':
            self.take()
            return Neg(self.unary())
        return self.atom()

    def atom(self) -> CostExpr:
        tok = self.current
        if tok.kind == 'num':
            num = self.number()
            if self.current.text == '/' and self.current.kind == 'op':
                slash = self.take()
                den = self.number()
                if den == 0:
                    raise CostSyntaxError('zero denominator', slash.offset)
                return Num(Fraction(num, den))
            return Num(Fraction(num))
        if tok.kind == 'op' and tok.text == '(':
            self.take()
            inner = self.expr()
            self.expect(')')
            return inner
        if tok.kind == 'name' and tok.text == 'abs':
            self.take()
            self.expect('(')
            inner = self.expr()
            self.expect(')')
            return Abs(inner)
        if tok.kind == 'name' and tok.text == 'x':
            self.take()
            self.expect('[')
            player = self.number()
            self.expect(']')
            self.expect('[')
            coord = self.number()
            self.expect(']')
            self.check_variable(player, coord, tok.offset)
            return Var(player, coord)
        if tok.kind == 'name':
            raise UnknownVariable('unknown name {!r} at offset {}'.format(tok.text, tok.offset))
        found = 'end of input' if tok.kind == 'end' else repr(tok.text)
        raise CostSyntaxError('unexpected {}'.format(found), tok.offset)

    def check_variable(self, player: int, coord: int, offset: int):
        if player < 1 or coord < 1:
            raise UnknownVariable('x[{}][{}] at offset {}: indices start at 1'.format(player, coord, offset))
        if self.dims is None:
            return
        if player > len(self.dims) or coord > self.dims[player - 1]:
            raise UnknownVariable('x[{}][{}] at offset {} is not a variable of this game'.format(
                player, coord, offset))


def parse_cost(src: str, dims: Sequence[int] = None) -> CostExpr:
    """Parses a cost expression.

    :param  src: Expression text.
    :param  dims: Optional strategy dimension per player; variables are range checked against it.

    :raises:    ``CostSyntaxError`` with the offending offset, ``UnknownVariable``.
    """
    return _Parser(src, dims).parse()


def to_source(expr: CostExpr) -> str:
    """Text form that parses back to the same tree (binary operations fully parenthesized)."""
    return expr.source()


def evaluate(expr: CostExpr, x: Sequence[Sequence]) -> Fraction:
    """Exact value of **expr** at the per-player strategies **x**."""
    return expr.evaluate(x)


def variables(expr: CostExpr) -> set:
    if isinstance(expr, Var):
        return {(expr.player, expr.coord)}
    if isinstance(expr, Num):
        return set()
    if isinstance(expr, BinOp):
        return variables(expr.left) | variables(expr.right)
    return variables(expr.operand)
