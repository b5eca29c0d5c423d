"""Jet-level tools: the level-raising derivation, truncated-arc generator
systems, exact restriction identities along a coordinate slice, and
exhaustive finite-field point counts with explicit budgets.

Two different generator notions coexist on purpose.  prolong() applies the
derivation D (sending a level-q variable to its level-(q+1) twin) and is
the right object for the symbolic identities over the rationals.
jet_generators() returns the coefficient list of f evaluated on a
truncated arc; over the rationals the two span the same ideal, but the
arc coefficients stay correct over small prime fields where iterated D
picks up vanishing factorials, so all counting goes through them.
"""

import os
from fractions import Fraction
from itertools import product as iproduct
from concurrent.futures import ThreadPoolExecutor

from .errors import InputError, PreconditionError, ResourceError
from .matroid import Matroid
from .polyring import FIELD_Q, Poly, mkvar, reduce_mod, substitute
from .constructions import SingletonData, dc_split
from .flags import FlagMatroid, flag_dc_split
from .feynman import FeynmanIntegrand, integrand_build

DEFAULT_BUDGET = 10 ** 9


def _budget(value):
    if value is not None:
        return int(value)
    env = os.environ.get("MATPOL_BUDGET")
    return int(float(env)) if env else DEFAULT_BUDGET


class JetRing:
    """Variables label@level for each base label and 0 <= level <= order."""

    __slots__ = ("labels", "order")

    def __init__(self, labels, order: int):
        labels = tuple(labels)
        if not labels or len(set(labels)) != len(labels):
            raise InputError("jet ring needs distinct base labels")
        if not isinstance(order, int) or order < 0:
            raise InputError("jet order must be a nonnegative integer")
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "order", order)

    def __setattr__(self, *a):
        raise AttributeError("JetRing is immutable")

    def var(self, label: str, level: int):
        if label not in self.labels:
            raise InputError(f"unknown base label {label!r}")
        if not 0 <= level <= self.order:
            raise InputError(f"jet level {level} overflows order {self.order}")
        return mkvar(label, level)

    def variables(self):
        return tuple(sorted(mkvar(l, q) for l in self.labels
                            for q in range(self.order + 1)))

    def contains(self, f: Poly) -> bool:
        allowed = set(self.variables())
        return all(v in allowed for v in f.vars)

    def __repr__(self):
        return f"JetRing({len(self.labels)} labels, order {self.order})"


def ring_for(f: Poly, order: int) -> JetRing:
    """Jet ring over f's base labels."""
    labels = sorted({lab for (lab, _) in f.vars})
    if not labels:
        raise InputError("cannot infer a jet ring from a constant")
    return JetRing(labels, order)


def _derive_once(f: Poly) -> Poly:
    """One application of D: raise one variable's level in each monomial,
    weighted by its exponent (Leibniz on products of variables)."""
    acc = {}
    for exps, c in f.terms.items():
        for i, e in enumerate(exps):
            if not e:
                continue
            lab, lvl = f.vars[i]
            bumped = mkvar(lab, lvl + 1)
            key = {}
            for j, ej in enumerate(exps):
                if ej:
                    key[f.vars[j]] = ej
            key[f.vars[i]] = e - 1
            key[bumped] = key.get(bumped, 0) + 1
            frozen = tuple(sorted((v, x) for v, x in key.items() if x))
            acc[frozen] = acc.get(frozen, 0) + c * e
    total = Poly.zero(f.field)
    for frozen, c in acc.items():
        if c:
            total = total + Poly.monomial(f.field, dict(frozen), c)
    return total


def prolong(f: Poly, q: int, R: JetRing) -> Poly:
    """D^q f inside R; raising any variable past R.order is refused."""
    if not isinstance(q, int) or q < 0:
        raise InputError("prolongation count must be a nonnegative integer")
    if not R.contains(f):
        raise InputError("polynomial does not live in the jet ring")
    top = max((lvl for (_, lvl) in f.vars), default=0)
    if top + q > R.order and not f.is_constant():
        raise InputError(
            f"prolonging {q} times overflows jet order {R.order}")
    out = f
    for _ in range(q):
        out = _derive_once(out)
    return out


# -- truncated arcs ------------------------------------------------------------

def _series_mul(A, B, order, field):
    out = [Poly.zero(field) for _ in range(order + 1)]
    for i, a in enumerate(A):
        if a.is_zero():
            continue
        for j in range(order + 1 - i):
            if not B[j].is_zero():
                out[i + j] = out[i + j] + a * B[j]
    return out


def jet_generators(f: Poly, m: int, ring: JetRing = None) -> list:
    """Coefficients [c_0, ..., c_m] of t in f(x_e -> sum_q x_e^(q) t^q).

    c_0 = f and c_1 = Df; the list generates the jet ideal in every
    characteristic (iterated D does not once factorials vanish)."""
    if not isinstance(m, int) or m < 0:
        raise InputError("jet order must be a nonnegative integer")
    if any(lvl != 0 for (_, lvl) in f.vars):
        raise InputError("jet generators start from a base-level polynomial")
    if ring is not None:
        if ring.order != m or not ring.contains(f):
            raise InputError("ring does not match the requested jet order")
    field = f.field
    arcs = {lab: [Poly.variable(field, lab, q) for q in range(m + 1)]
            for (lab, _) in f.vars}
    total = [Poly.zero(field) for _ in range(m + 1)]
    for exps, c in f.terms.items():
        series = [Poly.const(field, c)] + [Poly.zero(field)] * m
        for i, e in enumerate(exps):
            lab = f.vars[i][0]
            for _ in range(e):
                series = _series_mul(series, arcs[lab], m, field)
        for q in range(m + 1):
            total[q] = total[q] + series[q]
    return total


# -- restriction to the slice where one edge's jets vanish ---------------------

def _kill_edge_jets(f: Poly, label: str, m: int, root=0):
    table = {mkvar(label, 0): Fraction(root)}
    for q in range(1, m + 1):
        table[mkvar(label, q)] = 0
    return substitute(f, table)


def gamma_restriction_check(zeta: Poly, M: Matroid, sigma, e: int,
                            m: int) -> bool:
    """After forcing edge e's whole jet tower onto the root of its edge
    polynomial, D^q zeta collapses to D^q of the deletion component, for
    every q <= m.  Exact symbolic comparison over the rationals."""
    if M.is_loop(e) or M.is_coloop(e):
        raise PreconditionError("edge must be neither loop nor coloop")
    sigma = sigma or SingletonData.standard()
    label = M.labels[e]
    root = -sigma.f_const(label)
    deleted = dc_split(zeta, M, sigma, e)[0]
    labels = sorted({lab for (lab, _) in zeta.vars} | {label})
    R = JetRing(labels, m)
    lhs = zeta
    for q in range(m + 1):
        if _kill_edge_jets(lhs, label, m, root) != prolong(deleted, q, R):
            return False
        if q < m:
            lhs = _derive_once(lhs)
    return True


def gamma_restriction_check_flag(zeta: Poly, F: FlagMatroid, e: int,
                                 m: int) -> bool:
    """Flag version: the slice kills every chain level at which e has
    become a coloop, so the comparison target is the deletion part."""
    bottom = F.bottom()
    if bottom.is_loop(e) or bottom.is_coloop(e):
        raise PreconditionError(
            "edge must be neither loop nor coloop on the lowest level")
    label = bottom.labels[e]
    deleted = flag_dc_split(zeta, F, e)[0]
    labels = sorted({lab for (lab, _) in zeta.vars} | {label})
    R = JetRing(labels, m)
    lhs = zeta
    for q in range(m + 1):
        if _kill_edge_jets(lhs, label, m) != prolong(deleted, q, R):
            return False
        if q < m:
            lhs = _derive_once(lhs)
    return True


def gamma_restriction_check_feynman(F: FeynmanIntegrand, e: int,
                                    m: int) -> bool:
    """Both cases of the integrand restriction: an edge that is a coloop
    upstairs drops the xi summand entirely; otherwise every piece is
    deleted in place."""
    N = F.N
    if N.is_loop(e) or N.is_coloop(e):
        raise PreconditionError("edge must be neither loop nor coloop on N")
    label = N.labels[e]
    x0 = mkvar(label)
    zeta_d = substitute(F.zeta_N, {x0: 0})
    delta_d = substitute(F.delta, {x0: 0})
    Nd = N.delete(e)
    if F.M is None or F.M.is_coloop(e):
        target = integrand_build(zeta_d, delta_d, None, Nd, None)
    else:
        target = integrand_build(zeta_d, delta_d,
                                 substitute(F.xi_M, {x0: 0}),
                                 Nd, F.M.delete(e))
    labels = sorted({lab for (lab, _) in F.expanded.vars} | {label})
    R = JetRing(labels, m)
    lhs = F.expanded
    for q in range(m + 1):
        if _kill_edge_jets(lhs, label, m) != prolong(target.expanded, q, R):
            return False
        if q < m:
            lhs = _derive_once(lhs)
    return True


# -- exhaustive point counts ----------------------------------------------------

def _compile(f: Poly, index):
    terms = []
    for exps, c in f.terms.items():
        mono = [(index[f.vars[i]], e) for i, e in enumerate(exps) if e]
        terms.append((c, mono))
    return terms


def _count_chunk(compiled, p, nvars, first_values):
    hits = 0
    rest = iproduct(range(p), repeat=nvars - 1) if nvars > 1 else [()]
    if nvars == 0:
        point = ()
        return 1 if all(_eval(t, point, p) == 0 for t in compiled) else 0
    for tail in rest:
        for v0 in first_values:
            point = (v0,) + tail
            for terms in compiled:
                if _eval(terms, point, p):
                    break
            else:
                hits += 1
    return hits


def _eval(terms, point, p):
    total = 0
    for c, mono in terms:
        val = c
        for i, e in mono:
            b = point[i]
            if not b:
                val = 0
                break
            val = val * pow(b, e, p)
        total += val
    return total % p


def count_points(system, p: int = None, budget=None, universe=None) -> int:
    """Exact number of common zeros over F_p, by exhaustive enumeration
    split into concurrent slices of the first coordinate.

    Rational inputs are reduced mod p; the assignment space p^#vars must
    fit the budget (MATPOL_BUDGET or 10^9 by default)."""
    system = list(system)
    if not system:
        raise InputError("empty polynomial system")
    reduced = []
    for f in system:
        if f.field == FIELD_Q:
            if p is None:
                raise InputError("a prime is needed to reduce rational input")
            reduced.append(reduce_mod(f, p))
        else:
            if p is not None and f.field != p:
                raise InputError(f"system is over F_{f.field}, not F_{p}")
            reduced.append(f)
    fields = {f.field for f in reduced}
    if len(fields) != 1:
        raise InputError("mixed fields in point-count system")
    p = fields.pop()
    seen = set()
    for f in reduced:
        seen.update(f.vars)
    if universe is not None:
        universe = tuple(sorted(set(universe)))
        if not seen <= set(universe):
            raise InputError("given universe misses system variables")
    else:
        universe = tuple(sorted(seen))
    nvars = len(universe)
    space = p ** nvars
    limit = _budget(budget)
    if space > limit:
        raise ResourceError(
            f"assignment space {space} exceeds budget {limit}",
            required=space)
    index = {v: i for i, v in enumerate(universe)}
    compiled = [_compile(f, index) for f in reduced]
    if nvars == 0:
        return _count_chunk(compiled, p, 0, [])
    workers = min(4, p)
    slices = [list(range(w, p, workers)) for w in range(workers)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(
            lambda s: _count_chunk(compiled, p, nvars, s), slices)
    return sum(parts)


def boolean_jet_reference(k: int, n: int, m: int, p: int,
                          budget=None) -> int:
    """Point count of the jet system of x_1 ... x_k in n variables, via
    inclusion-exclusion over the components that each force one factor's
    first v_i jet levels to vanish (v ranging over |v| = m+1)."""
    if not (isinstance(k, int) and isinstance(n, int) and 1 <= k <= n):
        raise InputError("need 1 <= k <= n")
    if not isinstance(m, int) or m < 0:
        raise InputError("jet order must be a nonnegative integer")
    if p < 2:
        raise InputError("p must be a prime")
    space = p ** ((m + 1) * n)
    limit = _budget(budget)
    if space > limit:
        raise ResourceError(
            f"assignment space {space} exceeds budget {limit}",
            required=space)

    def comps(parts, total):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in comps(parts - 1, total - first):
                yield (first,) + rest

    components = list(comps(k, m + 1))
    if len(components) > 22:
        raise ResourceError(
            f"{len(components)} components is too many for "
            "inclusion-exclusion", required=2 ** len(components))
    free_block = p ** ((m + 1) * (n - k))
    total = 0
    for pick in range(1, 1 << len(components)):
        sign = -1 if bin(pick).count("1") % 2 == 0 else 1
        killed = [0] * k
        for i, v in enumerate(components):
            if pick >> i & 1:
                killed = [max(a, b) for a, b in zip(killed, v)]
        total += sign * p ** ((m + 1) * k - sum(killed))
    return total * free_block


def dimension_probe(f: Poly, m: int, primes, budget=None, bound=8) -> dict:
    """Heuristic: compare jet point counts against p^((m+1)(n-1)) across
    primes.  Ratios staying inside [1/bound, bound] are CONSISTENT with
    an equidimensional count of that exponent; nothing here ever
    certifies irreducibility."""
    gens = jet_generators(f, m)
    n = len({lab for (lab, _) in f.vars})
    if n == 0:
        raise InputError("dimension probe needs a non-constant polynomial")
    ring = ring_for(f, m)
    exponent = (m + 1) * (n - 1)
    counts, ratios = {}, {}
    for p in primes:
        N_p = count_points(gens, p, budget, universe=ring.variables())
        counts[p] = N_p
        ratios[p] = Fraction(N_p, p ** exponent)
    consistent = all(
        Fraction(1, bound) <= r <= bound for r in ratios.values())
    report = {
        "kind": "heuristic",
        "exponent": exponent,
        "counts": counts,
        "ratios": ratios,
        "consistent": consistent,
        "verdict": "CONSISTENT" if consistent else "INCONSISTENT",
    }
    if ratios and all(r >= 2 for r in ratios.values()):
        report["warning"] = ("every count sits well above the dimension "
                             "target; the fibre is likely fatter than a "
                             "reduced hypersurface jet")
    return report


def product_cover_check(f: Poly, g: Poly, m: int, p: int,
                        budget=None) -> bool:
    """Every F_p point of the jet system of f*g kills an initial run of
    f's arc coefficients and a complementary run of g's: lead zeros of f
    plus lead zeros of g always reach m-1."""
    if f.field != g.field:
        raise InputError("f and g must share a field")
    labels = sorted({lab for (lab, _) in f.vars}
                    | {lab for (lab, _) in g.vars})
    if not labels:
        raise InputError("product cover needs non-constant input")
    ring = JetRing(labels, m)
    prod_gens = [reduce_mod(h, p) if h.field == FIELD_Q else h
                 for h in jet_generators(f * g, m)]
    f_gens = [reduce_mod(h, p) if h.field == FIELD_Q else h
              for h in jet_generators(f, m)]
    g_gens = [reduce_mod(h, p) if h.field == FIELD_Q else h
              for h in jet_generators(g, m)]
    universe = ring.variables()
    space = p ** len(universe)
    limit = _budget(budget)
    if space > limit:
        raise ResourceError(
            f"assignment space {space} exceeds budget {limit}",
            required=space)
    index = {v: i for i, v in enumerate(universe)}
    prod_c = [_compile(h, index) for h in prod_gens]
    f_c = [_compile(h, index) for h in f_gens]
    g_c = [_compile(h, index) for h in g_gens]

    def lead_zeros(compiled, point):
        run = 0
        for terms in compiled:
            if _eval(terms, point, p):
                break
            run += 1
        return run

    for point in iproduct(range(p), repeat=len(universe)):
        if any(_eval(t, point, p) for t in prod_c):
            continue
        if lead_zeros(f_c, point) + lead_zeros(g_c, point) < m + 1:
            return False
    return True
