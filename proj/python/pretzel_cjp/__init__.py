"""Exact colored Jones polynomials of pretzel knots."""

import json
from fractions import Fraction

from . import _core
from ._core import DomainError, Error, RegimeError, delta_sign, run_check, writhe

__all__ = [
    "DomainError",
    "Error",
    "RegimeError",
    "colored_jones",
    "degree_report",
    "delta",
    "delta_sign",
    "predicted_degree",
    "qint",
    "run_check",
    "writhe",
]


def _poly(pairs):
    return {Fraction(e): Fraction(c) for e, c in pairs}


def qint(n):
    """[n] as {exponent: coefficient}."""
    return _poly(_core.qint(n))


def colored_jones(w, N, method="statesum"):
    """J_N of P(w) as {exponent: coefficient}; exponents may be half-integers."""
    return _poly(_core.colored_jones(list(w), N, method))


def delta(n, k, w):
    return Fraction(_core.delta(n, list(k), list(w)))


def predicted_degree(w, N):
    return Fraction(_core.predicted_degree(list(w), N))


def degree_report(w, colors, exact_max=4):
    return json.loads(_core.degree_report_json(list(w), list(colors), exact_max))
