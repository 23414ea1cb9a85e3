"""Exact Gamma/Le scaffolding, bordering and line insertion for totally
positive matrices.

Matrices are lists of rows. Entries may be ints, ``Fraction`` or ``"p/q"``
strings on the way in; results always come back as ``Fraction``.
"""

from fractions import Fraction

from . import _core
from ._core import Error, NotTotallyPositiveError, ParseError, PreconditionError

__all__ = [
    "Error",
    "NotTotallyPositiveError",
    "ParseError",
    "PreconditionError",
    "border",
    "cauchon_trace",
    "gamma_scaffold",
    "insert_column",
    "insert_row",
    "is_totally_positive",
    "le_scaffold",
    "lgv_minor",
    "minor",
    "recover_border_params",
    "solve_insertion",
    "to_dot",
    "x_of_t",
]


def _s(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _out(rows):
    return [[Fraction(v) for v in row] for row in rows]


def _in(rows):
    return [[_s(v) for v in row] for row in rows]


def _vec(v):
    return [Fraction(x) for x in v]


def x_of_t(t, orientation="gamma"):
    return _out(_core.x_of_t(_in(t), orientation))


def gamma_scaffold(x):
    return _out(_core.gamma_scaffold(_in(x)))


def le_scaffold(x):
    return _out(_core.le_scaffold(_in(x)))


def cauchon_trace(x, orientation="gamma"):
    return [_out(m) for m in _core.cauchon_trace(_in(x), orientation)]


def minor(x, rows, cols):
    """det x[rows, cols] with 1-based, increasing index lists."""
    return Fraction(_core.minor(_in(x), list(rows), list(cols)))


def lgv_minor(t, rows, cols, orientation="gamma"):
    return Fraction(_core.lgv_minor(_in(t), list(rows), list(cols), orientation))


def is_totally_positive(x, fast=False):
    return _core.is_totally_positive(_in(x), fast)


def border(x, side, params):
    return _out(_core.border(_in(x), side, [_s(p) for p in params]))


def recover_border_params(x, side):
    return _vec(_core.recover_border_params(_in(x), side))


def solve_insertion(x, k):
    """Strongly positive (r, q, s) for inserting a row after row k."""
    return {key: _vec(v) for key, v in _core.solve_insertion(_in(x), k).items()}


def insert_row(x, k, witness=None):
    return _out(_core.insert_row(_in(x), k, None if witness is None else _in(witness)))


def insert_column(x, k):
    return _out(_core.insert_column(_in(x), k))


def to_dot(t, orientation="gamma"):
    return _core.to_dot(_in(t), orientation)
