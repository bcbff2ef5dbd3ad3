"""Exact tridiagonal pairs of type II in the split basis.

Matrix-valued functions return lists of rows of fractions.Fraction, with rows
and columns in graded-lex order (see Parameters.basis()).
"""

from fractions import Fraction

from ._core import (
    Error,
    InvalidParameters,
    InvalidShape,
    Parameters,
    ParseError,
    Report,
    random_parameters,
    run_suite,
    shape_profile,
    validate,
)
from . import _core

__all__ = [
    "Error",
    "InvalidParameters",
    "InvalidShape",
    "Parameters",
    "ParseError",
    "Report",
    "build_operator",
    "overlap_T",
    "overlap_U",
    "random_parameters",
    "run_suite",
    "shape_profile",
    "validate",
]


def _fractions(table):
    return [[Fraction(v) for v in row] for row in table]


def build_operator(params, name, basis="split"):
    """A, Astar, S, R, L, C, Cbar, D or Dbar; basis is split, eigA or eigAstar."""
    return _fractions(_core.build_operator_raw(params, name, basis))


def overlap_T(params, method="direct_sum"):
    """T table, rows i and columns x; method is direct_sum, matrix_product or shift_operator."""
    return _fractions(_core.overlap_T_raw(params, method))


def overlap_U(params, method="direct_sum"):
    """U table, rows i and columns x; method is direct_sum, shift_operator or linear_solve."""
    return _fractions(_core.overlap_U_raw(params, method))
