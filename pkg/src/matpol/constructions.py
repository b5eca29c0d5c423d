"""Polynomial constructions attached to a single matroid, and the exact
identities between them.

The central object is the family of polynomials that satisfy the
deletion-contraction axioms relative to a matroid and per-edge augmentation
data (``SingletonData``): each free edge must split as ζ = ζ_del + f_e·ζ_con,
coloops must divide out their f_e, loops their d_e, with the factors again
passing on the corresponding minor. ``is_matroidal`` decides the axioms for
a given polynomial; ``msp_build``/``maximal_rank_poly``/``configuration_poly``
/``tutte_poly`` construct the standard members; ``dc_split``/``handle_split``
compute the decompositions the identities are stated in.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InputError, PreconditionError, ResourceError, StructureError
from .matroid import Matroid, column_matroid, submatrix_det, matrix_rank
from .polyring import (FIELD_Q, Poly, Var, _coeff, derivative, is_multilinear,
                       mkvar, min_part, substitute, support_sets)

_STANDARD_ENTRY = (Fraction(0), 0, Fraction(1))


def _as_fraction(x) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad rational constant {x!r}: {exc}") from None


class SingletonData:
    """Per-edge augmentation data (f_e, d_e) steering the matroidal
    recursion. f_e = x_e + fc is monic linear; d_e is either the nonzero
    constant dc (degree 0) or the monic linear x_e + dc (degree 1). Edges
    are keyed by label; labels not in the table get f_e = x_e, d_e = 1.
    """
    __slots__ = ("_table",)

    def __init__(self, entries: Optional[Mapping] = None):
        table = {}
        for label, entry in (entries or {}).items():
            fc, ddeg, dc = entry
            fc, dc = _as_fraction(fc), _as_fraction(dc)
            if ddeg not in (0, 1):
                raise InputError("d_e degree must be 0 or 1")
            if ddeg == 0 and dc == 0:
                raise InputError("degree-0 d_e must be a nonzero constant")
            table[str(label)] = (fc, ddeg, dc)
        object.__setattr__(self, "_table", table)

    def __setattr__(self, *a):
        raise AttributeError("SingletonData is immutable")

    @staticmethod
    def standard() -> "SingletonData":
        return SingletonData()

    @staticmethod
    def all_edges(labels: Iterable[str], fc=0, ddeg: int = 0, dc=1) -> "SingletonData":
        return SingletonData({lab: (fc, ddeg, dc) for lab in labels})

    def entry(self, label: str) -> tuple:
        return self._table.get(label, _STANDARD_ENTRY)

    def f_const(self, label: str) -> Fraction:
        return self.entry(label)[0]

    def d_parts(self, label: str) -> tuple:
        _, ddeg, dc = self.entry(label)
        return ddeg, dc

    def f_poly(self, field, label: str) -> Poly:
        fc = self.f_const(label)
        return Poly.variable(field, label) + Poly.const(field, fc)

    def d_poly(self, field, label: str) -> Poly:
        ddeg, dc = self.d_parts(label)
        if ddeg == 0:
            return Poly.const(field, dc)
        return Poly.variable(field, label) + Poly.const(field, dc)

    def is_standard_for(self, labels: Iterable[str]) -> bool:
        return all(self.entry(lab) == _STANDARD_ENTRY for lab in labels)

    def key_for(self, labels: Iterable[str]) -> tuple:
        return tuple((lab, self.entry(lab)) for lab in sorted(labels))

    def to_json(self, labels: Iterable[str]) -> dict:
        out = {}
        for lab in labels:
            fc, ddeg, dc = self.entry(lab)
            out[lab] = {"f": {"c": str(fc)}, "d": {"deg": ddeg, "c": str(dc)}}
        return out

    @staticmethod
    def from_json(obj) -> "SingletonData":
        try:
            entries = {
                lab: (Fraction(spec["f"]["c"]), int(spec["d"]["deg"]),
                      Fraction(spec["d"]["c"]))
                for lab, spec in obj.items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed singleton data JSON: {exc}") from None
        return SingletonData(entries)

    def __repr__(self):
        if not self._table:
            return "SingletonData(standard)"
        return f"SingletonData({self._table!r})"


# -- builders -----------------------------------------------------------------

def _normalize_coeff_keys(M: Matroid, coeffs) -> dict:
    """coeffs may be keyed by frozenset/tuple/list of edge indices; returns
    a dict keyed by basis bitmask, validated to cover the bases exactly."""
    from .matroid import edges_to_mask
    if coeffs is None:
        return {b: Fraction(1) for b in M.bases}
    table = {}
    for key, c in coeffs.items():
        mask = edges_to_mask(key, M.n) if not isinstance(key, int) else key
        if mask in table:
            raise InputError("duplicate coefficient key")
        table[mask] = c
    missing = [b for b in M.bases if b not in table]
    extra = [m for m in table if m not in set(M.bases)]
    if missing or extra:
        raise InputError(
            f"coefficients must be keyed exactly by the bases "
            f"({len(missing)} missing, {len(extra)} extra)")
    return table


def msp_build(M: Matroid, coeffs=None, field=FIELD_Q) -> Poly:
    """Matroid support polynomial Σ_B c_B x^B; all-ones coefficients give
    the basis-sum Ψ_M. Coefficients must be nonzero and keyed exactly by the
    bases."""
    table = _normalize_coeff_keys(M, coeffs)
    vars = tuple(mkvar(lab) for lab in M.labels)
    terms = {}
    for bmask, c in table.items():
        cc = _coeff(field, c)
        if cc == 0:
            raise InputError("zero basis coefficient")
        exps = tuple(1 if bmask >> i & 1 else 0 for i in range(M.n))
        terms[exps] = cc
    return Poly(field, vars, terms)


def maximal_rank_poly(M: Matroid, field=FIELD_Q) -> Poly:
    """Σ over subsets A of full rank of x^A."""
    vars = tuple(mkvar(lab) for lab in M.labels)
    r = M.full_rank()
    terms = {}
    for smask in range(1 << M.n):
        if M.rank(smask) == r:
            terms[tuple(smask >> i & 1 for i in range(M.n))] = 1
    return Poly(field, vars, terms)


def configuration_poly(A: Sequence[Sequence], labels=None, field=FIELD_Q) -> Poly:
    """det(A·diag(x)·Aᵀ) for a full-row-rank rational matrix, expanded by
    Cauchy–Binet as Σ_B det(A_B)² x^B over column subsets B of size #rows."""
    A = [list(map(Fraction, row)) for row in A]
    if not A or not A[0]:
        raise InputError("empty matrix")
    r, ncols = len(A), len(A[0])
    if any(len(row) != ncols for row in A):
        raise InputError("ragged matrix")
    if matrix_rank(A) < r:
        raise InputError("matrix is rank-deficient (needs full row rank)")
    from .matroid import default_labels
    labels = default_labels(ncols) if labels is None else tuple(labels)
    vars = tuple(mkvar(lab) for lab in labels)
    terms = {}
    for combo in itertools.combinations(range(ncols), r):
        d = submatrix_det(A, range(r), combo)
        if d:
            exps = tuple(1 if i in combo else 0 for i in range(ncols))
            terms[exps] = d * d
    return Poly(field, vars, terms)


TUTTE_VAR_LABEL = "p"


def tutte_poly(M: Matroid, field=FIELD_Q) -> Poly:
    """Multivariate rank generating sum Σ_{A⊆E} p^{rank M − rank A} x^A,
    in the edge variables plus the extra variable "p"."""
    if TUTTE_VAR_LABEL in M.labels:
        raise InputError(
            f"edge label {TUTTE_VAR_LABEL!r} collides with the rank variable")
    vars = (mkvar(TUTTE_VAR_LABEL),) + tuple(mkvar(lab) for lab in M.labels)
    r = M.full_rank()
    terms = {}
    for smask in range(1 << M.n):
        exps = (r - M.rank(smask),) + tuple(smask >> i & 1 for i in range(M.n))
        terms[exps] = terms.get(exps, 0) + 1
    return Poly(field, vars, terms)


def tutte_identities(M: Matroid, e: int) -> dict:
    """Checks the deletion-contraction law for edge e (three cases: free,
    coloop, loop) and the p = 0 specialization against maximal_rank_poly.
    Returns a report dict; failures carry the offending difference."""
    M._check_edge(e)
    field = FIELD_Q
    Z = tutte_poly(M, field)
    x_e = Poly.variable(field, M.labels[e])
    p = Poly.variable(field, TUTTE_VAR_LABEL)
    if M.is_coloop(e):
        case = "coloop"
        rhs = (p + x_e) * tutte_poly(M.delete(e), field)
    elif M.is_loop(e):
        case = "loop"
        rhs = (Poly.one(field) + x_e) * tutte_poly(M.delete(e), field)
    else:
        case = "free"
        rhs = tutte_poly(M.delete(e), field) + x_e * tutte_poly(M.contract(e), field)
    dc_diff = Z - rhs
    maxr_diff = substitute(Z, {mkvar(TUTTE_VAR_LABEL): Fraction(0)}) \
        - maximal_rank_poly(M, field)
    from .polyring import poly_to_json
    return {
        "edge": e,
        "case": case,
        "dc_ok": dc_diff.is_zero(),
        "maxr_ok": maxr_diff.is_zero(),
        "pass": dc_diff.is_zero() and maxr_diff.is_zero(),
        "dc_difference": None if dc_diff.is_zero() else poly_to_json(dc_diff),
        "maxr_difference": None if maxr_diff.is_zero() else poly_to_json(maxr_diff),
    }


# -- the matroidal axiom checker ------------------------------------------------

def _field_inverse(field, c):
    if field == FIELD_Q:
        c = Fraction(c)
        if c == 0:
            raise InputError("division by zero constant")
        return 1 / c
    ci = _coeff(field, c)
    if ci == 0:
        raise InputError("constant vanishes in the coefficient field")
    return pow(ci, -1, field)


def _linear_parts(zeta: Poly, v: Var) -> tuple:
    """zeta = A + x_v·B with A, B free of x_v; requires degree ≤ 1 in v."""
    if zeta.degree_in(v) > 1:
        raise InputError(f"degree in {v} exceeds 1")
    if v not in zeta.vars:
        return zeta, Poly.zero(zeta.field)
    B = derivative(zeta, v)
    A = substitute(zeta, {v: 0})
    return A, B


def _exact_linear_divide(zeta: Poly, v: Var, c) -> Optional[Poly]:
    """Quotient of zeta by the monic linear (x_v + c), or None if the
    division is inexact. zeta must have degree ≤ 1 in v."""
    A, B = _linear_parts(zeta, v)
    # zeta = (x_v + c)·B + (A − c·B): exact iff A == c·B
    if A == B * c:
        return B
    return None


def _vars_within(zeta: Poly, labels) -> bool:
    allowed = set(labels)
    return all(lvl == 0 and lab in allowed for lab, lvl in zeta.vars)


def dc_split(zeta: Poly, M: Matroid, sigma: SingletonData, e: int) -> tuple:
    """The unique decomposition of a multilinear polynomial at edge e:
    free edge → (ζ_del, ζ_con) with ζ = ζ_del + f_e·ζ_con; coloop → both
    components equal ζ/f_e; loop → both equal ζ/d_e. Inexact (co)loop
    division is a structure error."""
    sigma = sigma or SingletonData.standard()
    M._check_edge(e)
    if not is_multilinear(zeta):
        raise InputError("deletion-contraction split needs a multilinear input")
    label = M.labels[e]
    v = mkvar(label)
    field = zeta.field
    if M.is_coloop(e):
        fc = _coeff(field, sigma.f_const(label)) if field != FIELD_Q \
            else sigma.f_const(label)
        q = _exact_linear_divide(zeta, v, fc)
        if q is None:
            raise StructureError(
                f"f_{label} does not divide the polynomial exactly")
        return q, q
    if M.is_loop(e):
        ddeg, dc = sigma.d_parts(label)
        if ddeg == 0:
            q = zeta * _field_inverse(field, dc)
        else:
            dcf = _coeff(field, dc) if field != FIELD_Q else dc
            q = _exact_linear_divide(zeta, v, dcf)
            if q is None:
                raise StructureError(
                    f"d_{label} does not divide the polynomial exactly")
        return q, q
    fc = _coeff(field, sigma.f_const(label)) if field != FIELD_Q \
        else sigma.f_const(label)
    A, B = _linear_parts(zeta, v)
    return A - B * fc, B


_GENERIC_MEMO: dict = {}


def _scalar_multiple_of(zeta: Poly, target: Poly) -> bool:
    """zeta == k·target for some nonzero field scalar k?"""
    if zeta.is_zero() or target.is_zero():
        return False
    if zeta.vars != target.vars or set(zeta.terms) != set(target.terms):
        return False
    exps = next(iter(target.terms))
    if zeta.field == FIELD_Q:
        k = Fraction(zeta.terms[exps]) / Fraction(target.terms[exps])
    else:
        k = zeta.terms[exps] * pow(target.terms[exps], -1, zeta.field) % zeta.field
    return zeta == target * k


def _is_matroidal_generic(zeta: Poly, M: Matroid, sigma: SingletonData) -> bool:
    key = (zeta, M.labels, M.bases, sigma.key_for(M.labels))
    hit = _GENERIC_MEMO.get(key)
    if hit is not None:
        return hit
    field = zeta.field
    n = M.n
    if not _vars_within(zeta, M.labels):
        res = False
    elif n == 0:
        res = zeta.is_constant() and not zeta.is_zero()
    elif n == 1:
        label = M.labels[0]
        target = sigma.f_poly(field, label) if M.full_rank() == 1 \
            else sigma.d_poly(field, label)
        res = _scalar_multiple_of(zeta, target)
    elif not is_multilinear(zeta):
        res = False
    else:
        res = True
        for e in range(n):
            label = M.labels[e]
            v = mkvar(label)
            if M.is_coloop(e):
                q = _exact_linear_divide(zeta, v, sigma.f_const(label))
                res = q is not None and _is_matroidal_generic(
                    q, M.delete(e), sigma)
            elif M.is_loop(e):
                ddeg, dc = sigma.d_parts(label)
                if ddeg == 0:
                    q = zeta * _field_inverse(field, dc) \
                        if v not in zeta.vars else None
                else:
                    q = _exact_linear_divide(zeta, v, dc)
                res = q is not None and _is_matroidal_generic(
                    q, M.delete(e), sigma)
            else:
                zdel, zcon = dc_split(zeta, M, sigma, e)
                res = (_is_matroidal_generic(zdel, M.delete(e), sigma)
                       and _is_matroidal_generic(zcon, M.contract(e), sigma))
            if not res:
                break
    return _GENERIC_MEMO.setdefault(key, res)


def _is_matroidal_standard(masks: frozenset, M: Matroid) -> bool:
    """Support-set recursion for the standard data f_e = x_e, d_e = 1.
    No coefficient ever combines under these splits, so only the monomial
    support matters; bases and supports travel as bitmasks in the ORIGINAL
    edge positions and the minor is tracked by (deleted, contracted) masks.
    """
    ground = M.ground_mask()
    memo: dict = {}

    def run(masks, bases, dmask, cmask):
        key = (dmask, cmask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        alive = ground & ~dmask & ~cmask
        k = bin(alive).count("1")
        if k == 0:
            res = masks == {0}
        elif k == 1:
            if all(b & alive for b in bases):       # coloop: ζ ∈ K^×·x_e
                res = masks == {alive}
            else:                                    # loop: ζ ∈ K^×·1
                res = masks == {0}
        elif not masks:
            res = False
        else:
            res = True
            bits = [1 << i for i in range(M.n) if alive >> i & 1]
            for bit in bits:
                in_all = all(b & bit for b in bases)
                in_none = not any(b & bit for b in bases)
                if in_all:      # coloop: exact division by x_e
                    if any(not m & bit for m in masks):
                        res = False
                    else:
                        res = run({m ^ bit for m in masks},
                                  tuple(b ^ bit for b in bases),
                                  dmask | bit, cmask)
                elif in_none:   # loop with d = 1: x_e must be absent
                    if any(m & bit for m in masks):
                        res = False
                    else:
                        res = run(masks, bases, dmask | bit, cmask)
                else:
                    A = {m for m in masks if not m & bit}
                    B = {m ^ bit for m in masks if m & bit}
                    res = (run(A, tuple(b for b in bases if not b & bit),
                               dmask | bit, cmask)
                           and run(B, tuple(b ^ bit for b in bases if b & bit),
                                   dmask, cmask | bit))
                if not res:
                    break
        memo[key] = res
        return res

    return run(masks, M.bases, 0, 0)


def is_matroidal(zeta: Poly, M: Matroid, sigma: Optional[SingletonData] = None) -> bool:
    """Recursive deletion-contraction axiom check for ζ against M and the
    augmentation data. Base cases: no edges → nonzero constant; one edge →
    a nonzero scalar multiple of f_e (coloop) or d_e (loop). Step: ζ
    multilinear and EVERY edge's clause passes with both components passing
    recursively on the minors."""
    sigma = sigma or SingletonData.standard()
    if zeta.field != FIELD_Q:
        raise InputError("the axiom check is defined over Q")
    if not _vars_within(zeta, M.labels):
        raise InputError("polynomial uses variables outside the ground set")
    if sigma.is_standard_for(M.labels) and (is_multilinear(zeta) or zeta.is_zero()):
        pos = {lab: i for i, lab in enumerate(M.labels)}
        masks = set()
        for exps in zeta.terms:
            m = 0
            for (lab, _lvl), ex in zip(zeta.vars, exps):
                if ex:
                    m |= 1 << pos[lab]
            masks.add(m)
        return _is_matroidal_standard(masks, M)
    return _is_matroidal_generic(zeta, M, sigma)


def search_matroidal(M: Matroid, sigma: Optional[SingletonData] = None,
                     grid: Sequence = (-2, -1, 1, 2)) -> list:
    """Enumerate the matroidal polynomials on M whose recursive base-case
    scalars lie in `grid`, by parameterizing one edge's decomposition and
    filtering with is_matroidal. Complete relative to the grid; ground sets
    above 4 edges are refused."""
    if M.n > 4:
        raise ResourceError("matroidal search supports at most 4 edges")
    sigma = sigma or SingletonData.standard()
    field = FIELD_Q
    scalars = [Fraction(g) for g in grid if Fraction(g) != 0]
    if not scalars:
        raise InputError("grid holds no nonzero scalar")

    def cands(Mm: Matroid) -> list:
        if Mm.n == 0:
            return [Poly.const(field, k) for k in scalars]
        e = Mm.n - 1
        label = Mm.labels[e]
        if Mm.is_coloop(e):
            f = sigma.f_poly(field, label)
            return [f * q for q in cands(Mm.delete(e))]
        if Mm.is_loop(e):
            d = sigma.d_poly(field, label)
            return [d * q for q in cands(Mm.delete(e))]
        f = sigma.f_poly(field, label)
        dels = cands(Mm.delete(e))
        cons = cands(Mm.contract(e))
        return [zd + f * zc for zd in dels for zc in cons]

    seen = set()
    out = []
    for cand in cands(M):
        if cand in seen:
            continue
        seen.add(cand)
        if is_matroidal(cand, M, sigma):
            out.append(cand)
    out.sort(key=lambda f: sorted(f.terms.items()))
    return out


# -- handle formulas ---------------------------------------------------------------

@dataclass(frozen=True)
class HandleSplit:
    """The pieces of the handle formula: per h ∈ H the fully-peeled deletion
    polynomial ζ^h on M∖H, and the contraction polynomial on M/H."""
    handle: tuple          # edge indices in the host matroid
    labels: tuple          # their labels, aligned with `handle`
    per_edge: dict         # h -> Poly ζ^h_{M∖H}
    contraction: Poly      # ζ_{M/H}


def _check_handle_hypotheses(M: Matroid, H: tuple):
    if not H:
        raise PreconditionError("handle is empty")
    if not M.is_handle(H):
        raise PreconditionError("H is not a handle of M")
    if len(H) == M.n:
        raise PreconditionError("H must be a proper subset of the edges")
    if not M.is_independent(H):
        raise PreconditionError("H must be independent in M")
    for h in H:
        if M.is_coloop(h):
            raise PreconditionError(f"handle edge {h} is a coloop of M")


def _minor_index(Mm: Matroid, label: str) -> int:
    return Mm.labels.index(label)


def handle_split(zeta: Poly, M: Matroid, sigma: Optional[SingletonData],
                 H, check_input: bool = True) -> HandleSplit:
    """Split ζ along a proper independent coloop-free handle H: for each
    h ∈ H delete h and peel the remaining handle edges (coloops of M∖h) by
    exact division; contract all of H for the complementary part. The
    reassembly identity is verified before returning."""
    sigma = sigma or SingletonData.standard()
    H = tuple(sorted({int(h) for h in (H if not isinstance(H, int) else [H])}))
    _check_handle_hypotheses(M, H)
    if check_input and not is_matroidal(zeta, M, sigma):
        raise PreconditionError("polynomial fails the matroidal axiom check")
    labels = tuple(M.labels[h] for h in H)

    zc, Mc = zeta, M
    for lab in labels:
        e = _minor_index(Mc, lab)
        zc = dc_split(zc, Mc, sigma, e)[1]
        Mc = Mc.contract(e)

    per = {}
    for h, lab_h in zip(H, labels):
        z, Mm = dc_split(zeta, M, sigma, h)[0], M.delete(h)
        for lab in labels:
            if lab == lab_h:
                continue
            e = _minor_index(Mm, lab)
            z = dc_split(z, Mm, sigma, e)[0]   # coloop peel: divides by f
            Mm = Mm.delete(e)
        per[h] = z

    split = HandleSplit(H, labels, per, zc)
    if not verify_handle_formula(zeta, M, sigma, split):
        raise StructureError("handle reassembly failed")
    return split


def verify_handle_formula(zeta: Poly, M: Matroid, sigma: Optional[SingletonData],
                          split: HandleSplit) -> bool:
    """ζ = Σ_h (∏_{g∈H∖{h}} f_g)·ζ^h + (∏_{h∈H} f_h)·ζ_{M/H}, exactly."""
    sigma = sigma or SingletonData.standard()
    field = zeta.field
    f_of = {lab: sigma.f_poly(field, lab) for lab in split.labels}
    total = Poly.zero(field)
    for h, lab_h in zip(split.handle, split.labels):
        part = split.per_edge[h]
        for lab in split.labels:
            if lab != lab_h:
                part = part * f_of[lab]
        total = total + part
    prod_all = Poly.one(field)
    for lab in split.labels:
        prod_all = prod_all * f_of[lab]
    total = total + prod_all * split.contraction
    return total == zeta


def singular_identity_check(zeta: Poly, M: Matroid,
                            sigma: Optional[SingletonData], H) -> bool:
    """Differential form of the handle formula. Verifies, for each h ∈ H,
    ζ − f_h·∂_hζ = (∏_{g∈H∖{h}} f_g)·ζ^h, and the combined identity
    ζ − Σ_h (ζ − f_h·∂_hζ) = (∏_h f_h)·ζ_{M/H}."""
    sigma = sigma or SingletonData.standard()
    split = handle_split(zeta, M, sigma, H)
    field = zeta.field
    f_of = {lab: sigma.f_poly(field, lab) for lab in split.labels}
    ok = True
    residue_sum = Poly.zero(field)
    for h, lab_h in zip(split.handle, split.labels):
        v = mkvar(lab_h)
        dh = derivative(zeta, v) if v in zeta.vars else Poly.zero(field)
        lhs = zeta - f_of[lab_h] * dh
        rhs = split.per_edge[h]
        for lab in split.labels:
            if lab != lab_h:
                rhs = rhs * f_of[lab]
        ok = ok and lhs == rhs
        residue_sum = residue_sum + lhs
    prod_all = Poly.one(field)
    for lab in split.labels:
        prod_all = prod_all * f_of[lab]
    ok = ok and (zeta - residue_sum == prod_all * split.contraction)
    return ok


# -- min part and normalization --------------------------------------------------

def normalize_coordinates(zeta: Poly, sigma: SingletonData, labels) -> Poly:
    """Shift x_e ↦ x_e − c_e for each edge with f_e = x_e + c_e, so all
    singleton f's become plain variables."""
    field = zeta.field
    subs = {}
    for lab in labels:
        c = sigma.f_const(lab)
        if c != 0:
            subs[mkvar(lab)] = Poly.variable(field, lab) - Poly.const(field, c)
    return substitute(zeta, subs) if subs else zeta


def min_part_is_msp_check(zeta: Poly, M: Matroid,
                          sigma: Optional[SingletonData] = None) -> bool:
    """After shifting coordinates so every f_e = x_e, the lowest-degree part
    of ζ must be supported exactly on the bases of M (a member of the MSP
    family). The matroid must be loopless."""
    sigma = sigma or SingletonData.standard()
    if M.loops():
        raise PreconditionError("matroid has loops")
    zeta = normalize_coordinates(zeta, sigma, M.labels)
    if zeta.is_zero():
        return False
    mp = min_part(zeta)
    if not is_multilinear(mp):
        return False
    pos = {lab: i for i, lab in enumerate(M.labels)}
    supp = set()
    for s in support_sets(mp):
        mask = 0
        for lab, lvl in s:
            if lvl != 0 or lab not in pos:
                return False
            mask |= 1 << pos[lab]
        supp.add(mask)
    return supp == set(M.bases)
