"""Reference values for basis/corank/max-rank/configuration polynomials.

Two independent routes (direct subset sums vs deletion-contraction
recursion) must agree before anything is printed; the printed tables are
the literals frozen in tests/frozen.py.  Run:  python oracle_matroid_polys.py
"""

from fractions import Fraction
from itertools import combinations
from pprint import pformat

import sympy as sp

from _indep import (
    FIXTURE_GRAPHS,
    basis_poly_dc,
    basis_poly_direct,
    graphic_bases,
    maxrank_poly,
    poly_to_table,
    uniform_bases,
    whitney_dc,
    whitney_direct,
)


def fixture_family():
    out = {}
    for n in range(1, 7):
        for k in range(0, n + 1):
            out[f"u{k}{n}"] = (uniform_bases(k, n), n)
    for name, (nv, edges) in FIXTURE_GRAPHS.items():
        out[name] = (graphic_bases(nv, edges), len(edges))
    return out


def main():
    vs = sp.symbols(" ".join(f"x{i + 1}" for i in range(6)))
    p = sp.Symbol("p")

    basis_tables = {}
    whitney_tables = {}
    maxrank_tables = {}
    for name, (bases, n) in sorted(fixture_family.__call__().items()):
        ground = frozenset(range(n))
        direct = basis_poly_direct(bases, vs)
        via_dc = basis_poly_dc(bases, ground, vs)
        assert sp.expand(direct - via_dc) == 0, name
        w1 = whitney_direct(bases, ground, vs, p)
        w2 = whitney_dc(bases, ground, vs, p)
        assert sp.expand(w1 - w2) == 0, name
        mr = maxrank_poly(bases, ground, vs)
        assert sp.expand(w1.subs(p, 0) - mr) == 0, name
        allvars = (p,) + tuple(vs[:n])
        if name in ("u23", "u24", "u13", "u36", "c3", "c4", "theta", "glued"):
            basis_tables[name] = poly_to_table(direct, vs[:n])
            whitney_tables[name] = poly_to_table(w1, allvars)
            maxrank_tables[name] = poly_to_table(mr, vs[:n])
    print("BASIS_POLYS =", pformat(basis_tables))
    print("WHITNEY_POLYS =", pformat(whitney_tables))
    print("MAXRANK_POLYS =", pformat(maxrank_tables))

    # Rational 3x6 matrices: interpolation-style and Vandermonde-style; both
    # must have every maximal minor nonzero (every 3-subset a basis), and the
    # squared minors are the configuration coefficients.
    lam = list(range(6))
    x, y, z = 2, 3, 5
    A = sp.Matrix(
        [
            [1, 0, 0, 1, 2, 3],
            [0, 1, 0, 2, 3, 4],
            [0, 0, 1, 2, 6, 12],
        ]
    )
    B = sp.Matrix([[sp.Integer(v) ** l for l in lam] for v in (x, y, z)])
    assert B.shape == (3, 6)
    config = {}
    for label, mat in (("A", A), ("B", B)):
        coeffs = {}
        for cols in combinations(range(6), 3):
            d = mat[:, list(cols)].det()
            assert d != 0, (label, cols)
            coeffs[cols] = int(d * d)
        config[label] = coeffs
    print("CONFIG_COEFFS =", pformat(config))
    u36 = set(combinations(range(6), 3))
    for label in config:
        assert set(config[label]) == u36
    print("# both matrices realize the rank-3 uniform matroid on 6 elements")


if __name__ == "__main__":
    main()
