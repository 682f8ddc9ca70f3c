# -*- coding: utf-8 -*-

"""Exact rational scalars, vectors and matrices.

Matrices are numpy arrays of ``dtype=object`` holding ``fractions.Fraction``
entries, so ``@``, slicing and stacking behave as usual while every
operation stays exact. Rank and square solves are
delegated to ``sympy.Matrix``. Points (vertices, grid points, witnesses) are plain
tuples of ``Fraction``: hashable, and ordered lexicographically.
"""

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence, Tuple

import numpy as np
import sympy

Point = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    """Converts an integer, a ``Fraction`` or a string such as ``"8/55"``,
    ``"-3"`` or ``"2.5"`` into a ``Fraction`` without any rounding.

    :raises:    ``TypeError`` for floats and anything else that cannot be read exactly.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('booleans are not rationals: {!r}'.format(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise TypeError('not a rational literal: {!r}'.format(value))
    raise TypeError('refusing inexact value {!r}; write rationals as "p/q" strings'.format(value))


def fmt(value) -> str:
    """Lowest-terms string form of a rational (``"8/55"``, ``"3"``)."""
    return str(Fraction(value))


def as_point(values: Iterable) -> Point:
    return tuple(Fraction(v) for v in values)


def qvector(values: Iterable) -> np.ndarray:
    """Builds an exact vector from anything ``to_fraction`` accepts."""
    return np.array([to_fraction(v) for v in values], dtype=object)


def qmatrix(rows: Sequence[Sequence], ncols: int = None) -> np.ndarray:
    """Builds an exact ``len(rows) x ncols`` matrix.

    :param  ncols: Column count; needed when **rows** is empty.
    """
    rows = [[to_fraction(v) for v in row] for row in rows]
    if ncols is None:
        if not rows:
            raise ValueError('ncols is required for a matrix without rows')
        ncols = len(rows[0])
    for row in rows:
        if len(row) != ncols:
            raise ValueError('ragged matrix: expected {} columns, got {}'.format(ncols, len(row)))
    out = np.empty((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            out[i, j] = v
    return out


def zeros(m: int, n: int = None) -> np.ndarray:
    if n is None:
        return np.array([ZERO] * m, dtype=object)
    out = np.empty((m, n), dtype=object)
    out.fill(ZERO)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = ONE
    return out


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), ZERO)


def matvec(a: np.ndarray, x: Sequence) -> np.ndarray:
    """``a @ x`` that stays well defined for matrices without rows or columns."""
    return np.array([dot(row, x) for row in a], dtype=object)


def to_sympy(matrix: np.ndarray) -> sympy.Matrix:
    """Exact ``sympy.Matrix`` copy of an object array of rationals."""
    m, n = matrix.shape
    return sympy.Matrix(m, n, [sympy.Rational(f.numerator, f.denominator) for f in map(Fraction, matrix.flat)])


def from_sympy(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def _to_array(matrix: sympy.Matrix) -> np.ndarray:
    out = zeros(matrix.rows, matrix.cols)
    for i in range(matrix.rows):
        for j in range(matrix.cols):
            out[i, j] = from_sympy(matrix[i, j])
    return out


def rank(matrix: np.ndarray) -> int:
    if matrix.shape[0] == 0 or matrix.shape[1] == 0:
        return 0
    return to_sympy(matrix).rank()


def solve(a: np.ndarray, b: Sequence) -> np.ndarray:
    """Solves the square system ``a x = b``; returns ``None`` when ``a`` is singular."""
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError('solve needs a square matrix, got {}'.format(a.shape))
    if n == 0:
        return zeros(0)
    lhs = to_sympy(a)
    if lhs.rank() < n:
        return None
    rhs = to_sympy(np.array(list(b), dtype=object).reshape(n, 1))
    return _to_array(lhs.LUsolve(rhs)).reshape(-1)


def primitive(values: Sequence) -> Point:
    """Scales a nonzero rational vector to the coprime integer vector on the same ray."""
    fracs = [Fraction(v) for v in values]
    denom = reduce(lambda acc, f: acc * f.denominator // gcd(acc, f.denominator), fracs, 1)
    ints = [int(f * denom) for f in fracs]
    g = reduce(gcd, (abs(i) for i in ints), 0)
    if g == 0:
        return tuple(ZERO for _ in ints)
    return tuple(Fraction(i // g) for i in ints)


def barycenter(points: Sequence[Point]) -> Point:
    if not points:
        raise ValueError('barycenter of no points')
    k = len(points)
    return tuple(sum((p[j] for p in points), ZERO) / k for j in range(len(points[0])))
