"""Graph polynomials from forest sums, and integrands built on a
corank-one quotient pair of matroids.

A diagram is a connected multigraph with masses on edges and exact
rational momentum vectors on its external vertices, summing to zero.  Its
polynomial is  U·(1 + Σ m_e² x_e) + F  where U sums tree complements and
F sums 2-forest complements weighted by the squared momentum flow across
the cut.  The general integrand shape is  ζ_N·(1 + Δ) + ξ_M  with ξ
supported on a matroid one rank above the one carrying ζ.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import InputError, PreconditionError, StructureError
from .matroid import (
    Matroid,
    default_labels,
    graphic,
    is_quotient,
    mask_to_edges,
)
from .polyring import (
    FIELD_Q,
    Poly,
    euler_apply,
    min_part,
    mkvar,
    substitute,
)
from .constructions import SingletonData, handle_split, msp_build


# -- multigraphs --------------------------------------------------------------

class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _check_graph(num_vertices, edge_list):
    if not isinstance(num_vertices, int) or num_vertices < 1:
        raise InputError("graph needs at least one vertex")
    for e in edge_list:
        u, v = e
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise InputError(f"edge {e} references a missing vertex")


def _component_count(num_vertices, edge_list, subset):
    uf = _UnionFind(num_vertices)
    for i in subset:
        u, v = edge_list[i]
        if u != v:
            uf.union(u, v)
    return len({uf.find(v) for v in range(num_vertices)})


def _is_forest(edge_list, num_vertices, subset):
    uf = _UnionFind(num_vertices)
    for i in subset:
        u, v = edge_list[i]
        if u == v or not uf.union(u, v):
            return False
    return True


def spanning_forests(num_vertices: int, edge_list: Sequence, i: int):
    """All circuit-free edge sets with exactly i-1 more connected
    components than the full graph, as a sorted list of tuples."""
    _check_graph(num_vertices, edge_list)
    if not isinstance(i, int) or i < 1:
        raise InputError("forest index must be a positive integer")
    base = _component_count(num_vertices, edge_list, range(len(edge_list)))
    want_size = num_vertices - base - (i - 1)
    if want_size < 0:
        return []
    out = []
    for sub in combinations(range(len(edge_list)), want_size):
        if _is_forest(edge_list, num_vertices, sub) and \
                _component_count(num_vertices, edge_list, sub) == base + i - 1:
            out.append(sub)
    return out


def _component_vertices(num_vertices, edge_list, subset, start):
    reached = {start}
    frontier = [start]
    adj = {}
    for i in subset:
        u, v = edge_list[i]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    while frontier:
        v = frontier.pop()
        for w in adj.get(v, ()):
            if w not in reached:
                reached.add(w)
                frontier.append(w)
    return reached


# -- diagrams -----------------------------------------------------------------

@dataclass(frozen=True)
class FeynmanDiagram:
    """Connected multigraph with external momenta and edge masses.

    momenta maps external vertices to equal-length tuples of Fractions and
    must sum to zero componentwise; masses maps edge indices to Fractions
    (absent edges are massless)."""
    num_vertices: int
    edges: tuple
    external: tuple
    momenta: dict
    masses: dict

    def __post_init__(self):
        _check_graph(self.num_vertices, self.edges)
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "external", tuple(self.external))
        for v in self.external:
            if not 0 <= v < self.num_vertices:
                raise InputError(f"external vertex {v} is missing")
        if len(set(self.external)) != len(self.external):
            raise InputError("duplicate external vertex")
        momenta = {}
        dim = None
        for v in self.external:
            vec = tuple(Fraction(c) for c in self.momenta.get(v, ()))
            if not vec:
                raise InputError(f"external vertex {v} has no momentum vector")
            if dim is None:
                dim = len(vec)
            elif len(vec) != dim:
                raise InputError("momentum vectors must share one dimension")
            momenta[v] = vec
        extra = set(self.momenta) - set(self.external)
        if extra:
            raise InputError(f"momenta given for non-external vertices {sorted(extra)}")
        if momenta:
            for d in range(dim):
                if sum(vec[d] for vec in momenta.values()) != 0:
                    raise InputError("momentum conservation fails in "
                                     f"component {d}")
        object.__setattr__(self, "momenta", momenta)
        masses = {}
        for e, m in self.masses.items():
            e = int(e)
            if not 0 <= e < len(self.edges):
                raise InputError(f"mass given for missing edge {e}")
            masses[e] = Fraction(m)
        object.__setattr__(self, "masses", masses)

    @property
    def dimension(self) -> int:
        return len(next(iter(self.momenta.values()))) if self.momenta else 0

    def is_connected_graph(self) -> bool:
        return _component_count(self.num_vertices, self.edges,
                                range(len(self.edges))) == 1

    def edge_labels(self):
        return default_labels(len(self.edges))

    def graphic_matroid(self) -> Matroid:
        return graphic(self.num_vertices, list(self.edges))

    def momentum_of(self, vertex_set):
        dim = self.dimension
        return tuple(
            sum((self.momenta[v][d] for v in vertex_set if v in self.momenta),
                Fraction(0))
            for d in range(dim))


def diagram_from_json(obj) -> FeynmanDiagram:
    if not isinstance(obj, dict):
        raise InputError("diagram JSON must be an object")
    for key in ("vertices", "edges"):
        if key not in obj:
            raise InputError(f"diagram JSON needs '{key}'")
    momenta_list = obj.get("momenta", [])
    external = obj.get("external", [])
    if len(momenta_list) != len(external):
        raise InputError("momenta must align with the external vertex list")
    momenta = {v: [Fraction(str(c)) for c in vec]
               for v, vec in zip(external, momenta_list)}
    masses_list = obj.get("masses", [])
    masses = {e: Fraction(str(m)) for e, m in enumerate(masses_list)
              if Fraction(str(m)) != 0}
    return FeynmanDiagram(obj["vertices"], tuple(map(tuple, obj["edges"])),
                          tuple(external), momenta, masses)


def diagram_to_json(D: FeynmanDiagram) -> dict:
    return {
        "vertices": D.num_vertices,
        "edges": [list(e) for e in D.edges],
        "external": list(D.external),
        "momenta": [[str(c) for c in D.momenta[v]] for v in D.external],
        "masses": [str(D.masses.get(e, Fraction(0)))
                   for e in range(len(D.edges))],
    }


# -- the two graph polynomials -------------------------------------------------

def _complement_monomial(field, labels, subset, total):
    powers = {mkvar(labels[i]): 1 for i in range(total) if i not in subset}
    return Poly.monomial(field, powers) if powers else Poly.one(field)


def symanzik_U(num_vertices: int, edge_list: Sequence, field=FIELD_Q) -> Poly:
    """Sum of tree complements; cross-checked against the basis polynomial
    of the dual graphic matroid."""
    labels = default_labels(len(edge_list))
    total = Poly.zero(field)
    for tree in spanning_forests(num_vertices, edge_list, 1):
        total = total + _complement_monomial(field, labels, set(tree),
                                             len(edge_list))
    check = msp_build(graphic(num_vertices, list(edge_list)).dual(),
                      field=field)
    if total != check:
        raise StructureError("tree-complement sum disagrees with the dual "
                             "matroid's basis polynomial")
    return total


def symanzik_F(D: FeynmanDiagram, field=FIELD_Q) -> Poly:
    """Sum over 2-forests of the squared momentum through the cut, times
    the complement monomial.  Both cut sides are computed and compared."""
    if not D.is_connected_graph():
        raise PreconditionError("second graph polynomial needs a connected graph")
    labels = D.edge_labels()
    nedges = len(D.edges)
    total = Poly.zero(field)
    for forest in spanning_forests(D.num_vertices, D.edges, 2):
        near = _component_vertices(D.num_vertices, D.edges, forest, 0)
        far = set(range(D.num_vertices)) - near
        p_far = D.momentum_of(far)
        p_near = D.momentum_of(near)
        norm_far = sum(c * c for c in p_far)
        norm_near = sum(c * c for c in p_near)
        if norm_far != norm_near:
            raise StructureError("momentum flow differs between the two "
                                 "sides of a 2-forest cut")
        if norm_far == 0:
            continue
        total = total + norm_far * _complement_monomial(
            field, labels, set(forest), nedges)
    return total


def mass_form(D: FeynmanDiagram, field=FIELD_Q) -> Poly:
    """Σ m_e² x_e over the massive edges."""
    labels = D.edge_labels()
    total = Poly.zero(field)
    for e, m in sorted(D.masses.items()):
        if m:
            total = total + Poly.variable(field, labels[e]) * (m * m)
    return total


def diagram_poly(D: FeynmanDiagram, field=FIELD_Q) -> Poly:
    """U·(1 + Σ m_e² x_e) + F for a connected diagram."""
    if not D.is_connected_graph():
        raise PreconditionError("diagram polynomial needs a connected graph")
    U = symanzik_U(D.num_vertices, D.edges, field)
    return U * (Poly.one(field) + mass_form(D, field)) + symanzik_F(D, field)


# -- integrands ---------------------------------------------------------------

class FeynmanIntegrand:
    """ζ_N·(1 + Δ) + ξ_M, validated: ξ (when present) lives on a matroid M
    of which N is a quotient with rank(M) = rank(N) + 1."""

    __slots__ = ("zeta_N", "delta", "xi_M", "N", "M", "expanded")

    def __init__(self, zeta_N: Poly, delta: Poly, xi_M: Optional[Poly],
                 N: Matroid, M: Optional[Matroid]):
        field = zeta_N.field
        if N.full_rank() < 1:
            raise PreconditionError("the quotient matroid must have positive rank")
        if any(level != 0 for (_, level) in zeta_N.vars):
            raise InputError("integrand polynomials use base-level variables")
        if not set(l for (l, _) in zeta_N.vars) <= set(N.labels):
            raise InputError("ζ variables must be edges of N")
        if not delta.is_zero():
            if any(sum(e) != 1 for e in delta.terms):
                raise InputError("Δ must be a homogeneous linear form")
        if (xi_M is None) != (M is None):
            raise InputError("ξ and its matroid must be given together")
        if M is not None:
            if not is_quotient(M, N):
                raise PreconditionError("N must be a quotient of M")
            if M.full_rank() != N.full_rank() + 1:
                raise PreconditionError(
                    "rank(M) must exceed rank(N) by exactly one")
            if not set(l for (l, _) in xi_M.vars) <= set(M.labels):
                raise InputError("ξ variables must be edges of M")
        expanded = zeta_N * (Poly.one(field) + delta)
        if xi_M is not None:
            expanded = expanded + xi_M
        object.__setattr__(self, "zeta_N", zeta_N)
        object.__setattr__(self, "delta", delta)
        object.__setattr__(self, "xi_M", xi_M)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "expanded", expanded)
        if min_part(expanded) != zeta_N:
            raise StructureError("lowest-degree part is not ζ_N")
        want = zeta_N.total_degree()
        if not delta.is_zero() or xi_M is not None:
            want += 1
        if expanded.total_degree() != want:
            raise StructureError("integrand degree violates the rank law")

    def __setattr__(self, *a):
        raise AttributeError("FeynmanIntegrand is immutable")

    def mass_of(self, label: str):
        """Coefficient of x_label in Δ."""
        return self.delta.coefficient({mkvar(label): 1})

    def __repr__(self):
        tail = "ξ on M" if self.xi_M is not None else "no ξ"
        return (f"FeynmanIntegrand(rank {self.N.full_rank()} quotient, "
                f"{len(self.delta.terms)} mass terms, {tail})")


def integrand_build(zeta_N: Poly, delta: Poly, xi_M: Optional[Poly],
                    N: Matroid, M: Optional[Matroid]) -> FeynmanIntegrand:
    return FeynmanIntegrand(zeta_N, delta, xi_M, N, M)


def euler_identity_check(F: FeynmanIntegrand) -> bool:
    """(rank(N)+1)·Feyn − ε•Feyn = ζ_N with the Euler operator ε ranging
    over every variable of the expanded integrand."""
    r = F.N.full_rank()
    lhs = F.expanded * (r + 1) - euler_apply(F.expanded)
    return lhs == F.zeta_N


def feynman_handle_check(F: FeynmanIntegrand, H) -> bool:
    """Exact reassembly of the integrand from its handle pieces:
        Feyn = Σ_h x^{H∖{h}}·Feyn^h + x^H·(Feyn_con + Σ_h m_h ζ^h)
    where Feyn^h = ζ^h·(1 + Δ − m_h x_h) + ξ^h and
    Feyn_con = ζ_{N/H}·(1 + Δ) + ξ_{M/H}."""
    if isinstance(H, int):
        H = (H,)
    H = tuple(sorted({int(h) for h in H}))
    N = F.N
    if not H:
        raise PreconditionError("handle is empty")
    for h in H:
        N._check_edge(h)
    if len(H) == N.n:
        raise PreconditionError("H must be a proper subset of the edges")
    if not N.is_independent(H):
        raise PreconditionError("H must be independent in N")
    if N.full_rank() - N.rank(H) < 1:
        raise PreconditionError("contracting H must leave positive rank on N")
    for h in H:
        if N.is_coloop(h):
            raise PreconditionError(f"handle edge {h} is a coloop of N")
        if F.M is not None and F.M.is_coloop(h):
            raise PreconditionError(f"handle edge {h} is a coloop of M")

    field = F.zeta_N.field
    sigma = SingletonData.standard()
    zsplit = handle_split(F.zeta_N, N, sigma, H, check_input=False)
    if F.xi_M is not None:
        xsplit = handle_split(F.xi_M, F.M, sigma, H, check_input=False)
        xi_per = xsplit.per_edge
        xi_con = xsplit.contraction
    else:
        xi_per = {h: Poly.zero(field) for h in H}
        xi_con = Poly.zero(field)

    one = Poly.one(field)
    labels = zsplit.labels
    xs = {h: Poly.variable(field, lab) for h, lab in zip(H, labels)}
    masses = {h: F.mass_of(lab) for h, lab in zip(H, labels)}

    feyn_con = zsplit.contraction * (one + F.delta) + xi_con

    total = Poly.zero(field)
    correction = Poly.zero(field)
    for h in H:
        feyn_h = zsplit.per_edge[h] * (one + F.delta - xs[h] * masses[h]) \
            + xi_per[h]
        piece = feyn_h
        for g in H:
            if g != h:
                piece = piece * xs[g]
        total = total + piece
        correction = correction + zsplit.per_edge[h] * masses[h]
    xH = one
    for h in H:
        xH = xH * xs[h]
    total = total + xH * (feyn_con + correction)
    return total == F.expanded


# -- diagram-level reports -----------------------------------------------------

def kinematics_check(D: FeynmanDiagram) -> dict:
    """Gate (a): every proper nonempty subset of external vertices carries
    a nonzero momentum sum.  Gate (b): no two formal forest/mass
    contributions to U·Δ + F share a monomial.  Classifies the data."""
    zero_subsets = []
    ext = D.external
    for size in range(1, len(ext)):
        for sub in combinations(ext, size):
            if all(c == 0 for c in D.momentum_of(sub)):
                zero_subsets.append(list(sub))
    subsum_ok = not zero_subsets

    nedges = len(D.edges)
    formal = {}
    massive = [e for e, m in sorted(D.masses.items()) if m]
    for tree in spanning_forests(D.num_vertices, D.edges, 1):
        comp = set(range(nedges)) - set(tree)
        for e in massive:
            exps = tuple((1 if i in comp else 0) + (1 if i == e else 0)
                         for i in range(nedges))
            formal[exps] = formal.get(exps, 0) + 1
    for forest in spanning_forests(D.num_vertices, D.edges, 2):
        far = set(range(D.num_vertices)) - _component_vertices(
            D.num_vertices, D.edges, forest, 0)
        if all(c == 0 for c in D.momentum_of(far)):
            continue
        exps = tuple(0 if i in forest else 1 for i in range(nedges))
        formal[exps] = formal.get(exps, 0) + 1
    collisions = sorted(list(m) for m, cnt in formal.items() if cnt > 1)
    field = FIELD_Q
    expanded = symanzik_U(D.num_vertices, D.edges, field) * mass_form(D, field) \
        + symanzik_F(D, field)
    no_collision = len(expanded.terms) == sum(formal.values())

    all_zero_momenta = all(
        all(c == 0 for c in vec) for vec in D.momenta.values()) \
        if D.momenta else True
    if all_zero_momenta and not massive:
        klass = "zero data"
    elif not (subsum_ok and no_collision):
        klass = "degenerate"
    elif D.dimension <= 1:
        klass = "scalar nonzero"
    else:
        klass = "general kinematics"
    return {
        "subsum_ok": subsum_ok,
        "zero_subsets": zero_subsets,
        "no_collision": no_collision,
        "collisions": collisions,
        "class": klass,
        "pass": subsum_ok and no_collision,
    }


def diagram_integrand(D: FeynmanDiagram, field=FIELD_Q):
    """Assemble the integrand witness (ζ = U on the dual graphic matroid,
    Δ the squared-mass form, ξ = F on its support matroid) when the
    kinematics gate passes and the type invariants hold; None otherwise."""
    if not D.is_connected_graph():
        raise PreconditionError("integrand witness needs a connected graph")
    if not kinematics_check(D)["pass"]:
        return None
    N = D.graphic_matroid().dual()
    if N.full_rank() < 1:
        return None
    U = symanzik_U(D.num_vertices, D.edges, field)
    Fpoly = symanzik_F(D, field)
    delta = mass_form(D, field)
    if Fpoly.is_zero():
        try:
            return integrand_build(U, delta, None, N, None)
        except (PreconditionError, StructureError):
            return None
    labels = default_labels(len(D.edges))
    supp = _support_subsets(Fpoly, labels)
    try:
        M = Matroid.from_subsets(labels, sorted(supp))
    except InputError:
        return None
    try:
        return integrand_build(U, delta, Fpoly, N, M)
    except (PreconditionError, StructureError):
        return None


def _support_subsets(poly: Poly, labels):
    index = {mkvar(lab): i for i, lab in enumerate(labels)}
    out = set()
    for exps in poly.terms:
        sub = tuple(sorted(index[poly.vars[i]]
                           for i, e in enumerate(exps) if e))
        out.add(sub)
    return out


def support_quotient_check(D: FeynmanDiagram) -> dict:
    """Does the support of F form the bases of a matroid sitting exactly
    one rank above the dual graphic matroid, with the latter its quotient?
    Findings are reported, not raised."""
    if not D.is_connected_graph():
        raise PreconditionError("support check needs a connected graph")
    if len(D.edges) < 2:
        raise PreconditionError("support check needs at least two edges")
    gate = kinematics_check(D)
    if not gate["pass"]:
        raise PreconditionError("kinematics gate failed: " + gate["class"])
    Fpoly = symanzik_F(D)
    report = {"support": None, "support_is_matroid": False,
              "quotient_ok": False, "rank_ok": False, "pass": False}
    if Fpoly.is_zero():
        return report
    labels = default_labels(len(D.edges))
    supp = sorted(_support_subsets(Fpoly, labels))
    report["support"] = [list(s) for s in supp]
    try:
        Mprime = Matroid.from_subsets(labels, supp)
    except InputError:
        return report
    report["support_is_matroid"] = True
    cographic = D.graphic_matroid().dual()
    try:
        report["quotient_ok"] = is_quotient(Mprime, cographic)
    except StructureError:
        report["quotient_ok"] = False
    report["rank_ok"] = \
        Mprime.full_rank() == cographic.full_rank() + 1
    report["pass"] = (report["support_is_matroid"] and report["quotient_ok"]
                      and report["rank_ok"])
    return report
