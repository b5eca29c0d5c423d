"""Reference point counts for jet systems over small prime fields.

The derivation sends level-q variables to level q+1; systems are built in
sympy and counted by exhaustive evaluation.  An inclusion-exclusion count
for coordinate-product hypersurfaces cross-checks the brute force.  Run:
    python oracle_jets.py   (takes a minute or two)
"""

from itertools import combinations, product
from pprint import pformat

import sympy as sp


def jet_symbols(names, m):
    return {(nm, q): sp.Symbol(f"{nm}_{q}") for nm in names for q in range(m + 1)}


def derive(expr, syms, names, m):
    out = sp.Integer(0)
    for nm in names:
        for q in range(m):
            out += syms[(nm, q + 1)] * sp.diff(expr, syms[(nm, q)])
    return sp.expand(out)


def generators(expr, syms, names, m):
    """Truncated-arc system: coefficients of t^0..t^m in expr(x(t)).

    Substituting x_i -> sum_q x_i^(q) t^q and reading off t-coefficients is
    factorial-free, hence stays correct over every finite field; iterated
    derivations agree with it only up to characteristic > m.
    """
    t = sp.Symbol("t")
    subs = {
        syms[(nm, 0)]: sum(syms[(nm, q)] * t**q for q in range(m + 1))
        for nm in names
    }
    expanded = sp.expand(expr.subs(subs, simultaneous=True))
    poly_t = sp.Poly(expanded, t)
    gens = []
    for q in range(m + 1):
        gens.append(sp.expand(poly_t.coeff_monomial(t**q)))
    return gens


def derivation_generators(expr, syms, names, m):
    gens = [sp.expand(expr)]
    for _ in range(m):
        gens.append(derive(gens[-1], syms, names, m))
    return gens


def brute_count(gens, variables, p):
    polys = [sp.Poly(g, *variables, modulus=p) if g != 0 else None for g in gens]
    count = 0
    for point in product(range(p), repeat=len(variables)):
        ok = True
        for g, poly in zip(gens, polys):
            val = int(g.subs(dict(zip(variables, point)))) % p
            if val:
                ok = False
                break
        if ok:
            count += 1
    return count


def product_jet_count(k, n, m, p):
    """Points of the order-m jet system of x1*...*xk in n variables, F_p."""
    names = [f"x{i + 1}" for i in range(n)]
    syms = jet_symbols(names, m)
    variables = [syms[(nm, q)] for nm in names for q in range(m + 1)]
    f = sp.Integer(1)
    for i in range(k):
        f *= syms[(names[i], 0)]
    gens = generators(f, syms, names, m)
    return brute_count(gens, variables, p)


def product_jet_reference(k, n, m, p):
    """Same count via inclusion-exclusion over vanishing-depth vectors."""
    depth_vectors = [
        v
        for v in product(range(m + 2), repeat=k)
        if sum(v) == m + 1
    ]
    total = 0
    for size in range(1, len(depth_vectors) + 1):
        for group in combinations(depth_vectors, size):
            forced = sum(max(v[i] for v in group) for i in range(k))
            total += (-1) ** (size + 1) * p ** ((m + 1) * n - forced)
    return total


def main():
    grid = {}
    for k in range(1, 4):
        for n in range(k, 4):
            for m in range(0, 3):
                for p in (2, 3):
                    brute = product_jet_count(k, n, m, p)
                    ref = product_jet_reference(k, n, m, p)
                    assert brute == ref, (k, n, m, p, brute, ref)
                    grid[(k, n, m, p)] = brute
    print("PRODUCT_JET_COUNTS =", pformat(grid))
    assert grid[(2, 2, 1, 3)] == 21

    # order-1 jets of the three-edge rank-two basis polynomial
    names = ["x1", "x2", "x3"]
    syms = jet_symbols(names, 1)
    variables = [syms[(nm, q)] for nm in names for q in range(2)]
    psi = (
        syms[("x1", 0)] * syms[("x2", 0)]
        + syms[("x1", 0)] * syms[("x3", 0)]
        + syms[("x2", 0)] * syms[("x3", 0)]
    )
    gens = generators(psi, syms, names, 1)
    counts = {}
    for p in (3, 5, 7):
        counts[p] = brute_count(gens, variables, p)
    print("PSI23_JET1_COUNTS =", pformat(counts))
    for p, c in counts.items():
        ratio = c / p**4
        assert 1 / 8 <= ratio <= 8, (p, ratio)
    print("# ratios vs p^4:", {p: round(c / p**4, 4) for p, c in counts.items()})

    # divergence of iterated derivations in char 2 (kept as a regression
    # value: the arc-coefficient system above counts 20 at the same spot)
    names2 = ["x1", "x2"]
    syms2 = jet_symbols(names2, 2)
    vars2 = [syms2[(nm, q)] for nm in names2 for q in range(3)]
    f2 = syms2[("x1", 0)] * syms2[("x2", 0)]
    dgens = derivation_generators(f2, syms2, names2, 2)
    print("DERIVATION_COUNT_2222 =", brute_count(dgens, vars2, 2))

    # non-reduced example: x^2 with m=1 over F_3
    syms1 = jet_symbols(["x"], 1)
    f = syms1[("x", 0)] ** 2
    gens = generators(f, syms1, ["x"], 1)
    n_sq = brute_count(gens, [syms1[("x", 0)], syms1[("x", 1)]], 3)
    print("XSQUARED_JET1_F3 =", n_sq)


if __name__ == "__main__":
    main()
