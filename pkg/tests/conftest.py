"""Shared fixtures: the standard matroid pool and frozen-table helpers."""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from matpol import FIELD_Q, Matroid, Poly, graphic, mkvar, uniform

FIXTURE_GRAPHS = {
    "c3": (3, [(0, 1), (1, 2), (0, 2)]),
    "c4": (4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "theta": (2, [(0, 1), (0, 1), (0, 1)]),
    "glued": (4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]),
}

# the two rational realizations of the rank-3 uniform matroid on 6 elements
REALIZATION_A = [
    [1, 0, 0, 1, 2, 3],
    [0, 1, 0, 2, 3, 4],
    [0, 0, 1, 2, 6, 12],
]
REALIZATION_B = [[v ** l for l in range(6)] for v in (2, 3, 5)]


def fixture_matroids():
    """Named matroid pool used across the suite (|E| <= 6)."""
    out = {}
    for name, (nv, edges) in FIXTURE_GRAPHS.items():
        out[name] = graphic(nv, edges)
    out["u13"] = uniform(1, 3)
    out["u23"] = uniform(2, 3)
    out["u24"] = uniform(2, 4)
    out["u36"] = uniform(3, 6)
    return out


def table_poly(table, n, field=FIELD_Q, labels=None):
    """Build a Poly from a frozen exponent-tuple table."""
    if labels is None:
        labels = [f"x{i + 1}" for i in range(n)]
    vars = tuple(mkvar(lab) for lab in labels)
    terms = {tuple(e): Fraction(c) for e, c in table.items()}
    return Poly(field, vars, terms)


def poly_table(f):
    """Inverse of table_poly for polynomials over Q: exponent tuples keyed
    on the poly's own (canonical, sorted) variables."""
    return {e: c for e, c in f.terms.items()}
