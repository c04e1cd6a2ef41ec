"""Lattice points in magic-square cones: Hilbert bases, Hilbert series and counting formulas.

Systems, bases, series and formulas are plain dicts with the same layout as the JSON files the
`magic` command reads and writes.
"""

import json

from . import _core
from ._core import BudgetExceeded, Infeasible, InvalidArgument, MagicError

__all__ = [
    "BudgetExceeded",
    "Infeasible",
    "InvalidArgument",
    "MagicError",
    "build_system",
    "count_points",
    "evaluate",
    "expand_series",
    "format_formula",
    "formula_from_oracle",
    "graph",
    "group_order",
    "hilbert_basis",
    "hilbert_series",
    "interpolate",
    "labeling_cone",
    "polytope_dimension",
    "quasi_period",
    "verify_member",
]


def _enc(obj):
    return json.dumps(obj)


def build_system(family, n=0, d=0):
    return json.loads(_core.build_system(family, n, d))


def graph(name, n=0):
    """A named graph: gamma, complete, pi (these take n), petersen, or a platonic solid."""
    return json.loads(_core.graph_preset(name, n))


def labeling_cone(g):
    return json.loads(_core.labeling_cone(_enc(g)))


def verify_member(system, point):
    """Returns (member, degree)."""
    return _core.verify_member(_enc(system), _enc(point))


def hilbert_basis(system, seconds=None):
    return json.loads(_core.hilbert_basis(_enc(system), seconds))


def hilbert_series(basis, degree=None, seconds=None):
    return json.loads(_core.hilbert_series(_enc(basis), degree, seconds))


def expand_series(series, dmax):
    return [int(c) for c in json.loads(_core.expand_series(_enc(series), dmax))]


def count_points(system, s, seconds=None):
    return int(_core.count_points(_enc(system), s, seconds))


def quasi_period(system):
    return _core.quasi_period(_enc(system))


def polytope_dimension(system):
    return _core.polytope_dimension(_enc(system))


def interpolate(samples, period, degree):
    """samples maps degree s to the count at s."""
    pairs = [[k, v if abs(v) < 2**63 else str(v)] for k, v in sorted(samples.items())]
    return json.loads(_core.interpolate(_enc(pairs), period, degree))


def formula_from_oracle(system, period, degree):
    return json.loads(_core.formula_from_oracle(_enc(system), period, degree))


def evaluate(formula, s):
    return int(_core.evaluate(_enc(formula), s))


def format_formula(formula):
    return _core.format_formula(_enc(formula))


def group_order(preset):
    return int(_core.group_order(preset))
