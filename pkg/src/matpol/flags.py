"""Quotient chains of matroids and their basis-sum polynomials.

A flag is a chain (M_k, ..., M_1) of matroids on one ground set in which
each matroid is a quotient of the one before it; ranks weakly decrease
from the front of the chain.  Its polynomial is the sum of per-level
basis polynomials, and both the edge split and the handle split of the
plain matroid theory hold level by level, with levels at which the edge
(or the whole handle) turns into coloops folding entirely into the
contraction term.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InputError, PreconditionError, StructureError
from .matroid import Matroid, is_quotient, matroid_from_json, matroid_to_json
from .polyring import (
    FIELD_Q,
    Poly,
    derivative,
    is_multilinear,
    mkvar,
    substitute,
)
from .constructions import msp_build


class FlagMatroid:
    """Validated quotient chain, stored top-down: chain[0] has the largest
    rank, chain[-1] (level 1) the smallest."""

    __slots__ = ("chain", "labels", "k", "ranks",
                 "terminally_strict", "terminally_connected",
                 "terminally_loopless")

    def __init__(self, chain: Sequence[Matroid]):
        chain = tuple(chain)
        if not chain:
            raise InputError("flag needs at least one matroid")
        labels = chain[0].labels
        for j, M in enumerate(chain):
            if not isinstance(M, Matroid):
                raise InputError("flag chain entries must be matroids")
            if M.labels != labels:
                raise StructureError(
                    f"chain entry {j} is not on the common ground set")
        bottom = chain[-1]
        if bottom.full_rank() < 1:
            raise StructureError("the terminal matroid must have positive rank")
        for j in range(len(chain) - 1):
            upper, lower = chain[j], chain[j + 1]
            try:
                ok = is_quotient(upper, lower)
            except StructureError as exc:
                raise StructureError(
                    f"broken quotient link at chain position {j}: {exc}"
                ) from None
            if not ok:
                raise StructureError(
                    f"broken quotient link at chain position {j}: entry "
                    f"{j + 1} is not a quotient of entry {j}")
        k = len(chain)
        object.__setattr__(self, "chain", chain)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "ranks",
                           tuple(M.full_rank() for M in chain))
        strict = k == 1 or chain[-2].full_rank() > bottom.full_rank()
        object.__setattr__(self, "terminally_strict", strict)
        object.__setattr__(self, "terminally_connected",
                           bottom.is_connected() if bottom.n else False)
        object.__setattr__(self, "terminally_loopless", not bottom.loops())

    def __setattr__(self, *a):
        raise AttributeError("FlagMatroid is immutable")

    def level(self, i: int) -> Matroid:
        """Level i, counted 1-based from the bottom: level(1) = chain[-1]."""
        if not 1 <= i <= self.k:
            raise InputError(f"level {i} outside 1..{self.k}")
        return self.chain[self.k - i]

    def bottom(self) -> Matroid:
        return self.chain[-1]

    def top(self) -> Matroid:
        return self.chain[0]

    def __eq__(self, other):
        if not isinstance(other, FlagMatroid):
            return NotImplemented
        return self.chain == other.chain

    def __hash__(self):
        return hash(self.chain)

    def __repr__(self):
        ranks = ", ".join(str(r) for r in self.ranks)
        return f"FlagMatroid(levels={self.k}, ranks top-down [{ranks}])"


def build_flag(chain: Sequence[Matroid]) -> FlagMatroid:
    return FlagMatroid(chain)


def truncation_flag(M: Matroid, s: int) -> FlagMatroid:
    """The chain (M, τM, ..., τ^s M) of iterated truncations."""
    if not isinstance(s, int) or not 1 <= s <= M.full_rank() - 1:
        raise InputError(
            f"truncation depth must satisfy 1 <= s <= rank-1 = {M.full_rank() - 1}")
    return FlagMatroid(tuple(M.truncate(t) for t in range(s + 1)))


def flag_poly(F: FlagMatroid, coeffs=None, field=FIELD_Q) -> Poly:
    """Sum of per-level basis polynomials.  `coeffs` is aligned with the
    chain (top-down); each entry is None for all-ones, a scalar applied to
    every basis of that level, or a basis-keyed mapping as in msp_build."""
    if coeffs is None:
        coeffs = [None] * F.k
    coeffs = list(coeffs)
    if len(coeffs) != F.k:
        raise InputError(
            f"expected one coefficient entry per level ({F.k}), got {len(coeffs)}")
    total = Poly.zero(field)
    for M, c in zip(F.chain, coeffs):
        if c is None or isinstance(c, dict):
            total = total + msp_build(M, c, field)
        else:
            scalar = Fraction(c) if field == FIELD_Q else c
            total = total + msp_build(
                M, {tuple(sorted(B)): scalar for B in _basis_tuples(M)}, field)
    return total


def _basis_tuples(M: Matroid):
    from .matroid import mask_to_edges
    return [mask_to_edges(b) for b in M.bases]


def _coloop_level(F: FlagMatroid, edges) -> int:
    """Smallest level (1-based from the bottom) at which some edge of the
    given set is a coloop; k+1 when none is, at any level."""
    for i in range(1, F.k + 1):
        M = F.level(i)
        if any(M.is_coloop(e) for e in edges):
            return i
    return F.k + 1


def flag_dc_split(zeta: Poly, F: FlagMatroid, e: int):
    """Split a flag polynomial at one edge: returns (deletion part,
    contraction part, r) with ζ = del + x_e·con, where r is the first level
    at which e is a coloop (k+1 if never) and the deletion part is the flag
    polynomial of the levels below r with e removed."""
    bottom = F.bottom()
    bottom._check_edge(e)
    if bottom.is_loop(e):
        raise PreconditionError(
            f"edge {e} is a loop of the terminal matroid")
    if not is_multilinear(zeta):
        raise InputError("flag split needs a multilinear polynomial")
    r = _coloop_level(F, (e,))
    v = mkvar(F.labels[e])
    if v in zeta.vars:
        con = derivative(zeta, v)
        deleted = substitute(zeta, {v: 0})
    else:
        con = Poly.zero(zeta.field)
        deleted = zeta
    if deleted + Poly.variable(zeta.field, F.labels[e]) * con != zeta:
        raise StructureError("edge split failed to reassemble")
    return deleted, con, r


@dataclass(frozen=True)
class FlagHandleReport:
    handle: tuple
    labels: tuple
    r: int
    per_edge: dict          # h -> deletion-side flag polynomial on levels < r
    contraction: Poly       # flag polynomial of the fully contracted chain
    reassembly_ok: bool
    singular_per_edge_ok: bool
    singular_combined_ok: bool

    @property
    def ok(self) -> bool:
        return (self.reassembly_ok and self.singular_per_edge_ok
                and self.singular_combined_ok)


def flag_handle_split(zeta: Poly, F: FlagMatroid, H) -> FlagHandleReport:
    """Split a flag polynomial along a handle of the terminal matroid.

    H must be a proper handle, independent in the terminal matroid, with
    the top-level contraction keeping positive rank.  Returns the per-edge
    deletion polynomials (levels below the first coloop level r), the
    contraction polynomial, and the outcome of the exact reassembly
        ζ = Σ_h x^{H∖{h}} ζ^h + x^H ζ_con
    together with its differential form: per edge ζ − x_h·∂_hζ = x^{H∖{h}}ζ^h,
    and combined ζ − Σ_h (ζ − x_h·∂_hζ) = x^H ζ_con.
    """
    if isinstance(H, int):
        H = (H,)
    H = tuple(sorted({int(h) for h in H}))
    bottom = F.bottom()
    if not H:
        raise PreconditionError("handle is empty")
    for h in H:
        bottom._check_edge(h)
    if len(H) == bottom.n:
        raise PreconditionError("H must be a proper subset of the edges")
    if not bottom.is_independent(H):
        raise PreconditionError("H must be independent in the terminal matroid")
    if not bottom.is_handle(H):
        raise PreconditionError("H is not a handle of the terminal matroid")
    top = F.top()
    if top.full_rank() - top.rank(H) < 1:
        raise PreconditionError(
            "contracting H must leave positive rank at the top level")
    if not is_multilinear(zeta):
        raise InputError("flag split needs a multilinear polynomial")

    field = zeta.field
    labels = tuple(F.labels[h] for h in H)
    hvars = {h: mkvar(lab) for h, lab in zip(H, labels)}
    r = _coloop_level(F, H)

    def partial(poly: Poly, v) -> Poly:
        return derivative(poly, v) if v in poly.vars else Poly.zero(field)

    con = zeta
    for h in H:
        con = partial(con, hvars[h])

    per = {}
    for h in H:
        part = substitute(zeta, {hvars[h]: 0})
        for g in H:
            if g != h:
                part = partial(part, hvars[g])
        per[h] = part

    xs = {h: Poly.variable(field, F.labels[h]) for h in H}
    total = Poly.zero(field)
    for h in H:
        piece = per[h]
        for g in H:
            if g != h:
                piece = piece * xs[g]
        total = total + piece
    xH = Poly.one(field)
    for h in H:
        xH = xH * xs[h]
    reassembly_ok = total + xH * con == zeta

    per_ok = True
    residue = Poly.zero(field)
    for h in H:
        lhs = zeta - xs[h] * partial(zeta, hvars[h])
        rhs = per[h]
        for g in H:
            if g != h:
                rhs = rhs * xs[g]
        per_ok = per_ok and lhs == rhs
        residue = residue + lhs
    combined_ok = (zeta - residue) == xH * con

    return FlagHandleReport(H, labels, r, per, con,
                            reassembly_ok, per_ok, combined_ok)


# -- serialization ------------------------------------------------------------

def flag_to_json(F: FlagMatroid) -> dict:
    return {"chain": [matroid_to_json(M) for M in F.chain]}


def flag_from_json(obj) -> FlagMatroid:
    if not isinstance(obj, dict) or "chain" not in obj:
        raise InputError("flag JSON needs a 'chain' list")
    return FlagMatroid(tuple(matroid_from_json(m) for m in obj["chain"]))
