"""Gromov widths of Bott-Samelson varieties.

Rationals travel as strings "p/q"; weights may be given as ints, strings or
fractions.Fraction.
"""
import json
from fractions import Fraction

from . import _core
from ._core import Error, InputError, InvariantViolation, PreconditionError

__all__ = ["report", "check_p", "gromov_width", "lattice_count", "bott", "selftest",
           "Error", "InputError", "PreconditionError", "InvariantViolation"]


def _m(m):
    return [str(x) for x in m]


def report(type, word, m, force_degeneration=False):
    return json.loads(_core.report(type, list(word), _m(m), force_degeneration))


def check_p(type, word, m):
    return json.loads(_core.check_p(type, list(word), _m(m)))


def gromov_width(type, word, m):
    return Fraction(_core.gromov_width(type, list(word), _m(m)))


def lattice_count(type, word, m, cap=1_000_000):
    return _core.lattice_count(type, list(word), _m(m), cap)


def bott(collection):
    """collection: {"dims": [...], "a": {"j,l,k": int}, "divisor": [...]}"""
    return json.loads(_core.bott(json.dumps(collection)))


def selftest(suite="all", trials=200, seed=42):
    return json.loads(_core.selftest(suite, trials, seed))
