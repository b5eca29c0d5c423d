"""Finite matroids given by explicit basis families on ground sets of at
most 32 edges.

Bases are stored as bit-vectors over the ground set and validated against
the exchange axiom on construction, so every value that exists is a matroid.
Edges are addressed by 0-based index; the parallel ``labels`` tuple names
them for polynomial variables. Minors keep the surviving labels, which is
what lets deletion/contraction polynomials line up variable-wise with their
parents.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import InputError, PreconditionError, StructureError

MAX_GROUND = 32


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _mask_from(edges: Iterable[int], n: int) -> int:
    m = 0
    for e in edges:
        e = int(e)
        if not 0 <= e < n:
            raise InputError(f"edge index {e} out of range 0..{n - 1}")
        m |= 1 << e
    return m


def _mask_to_tuple(mask: int) -> tuple:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class Handle:
    """A nonempty edge set meeting every circuit of its host either not at
    all or entirely."""
    edges: tuple
    proper: bool


class Matroid:
    __slots__ = ("n", "labels", "bases", "_rank", "_circuits", "_hash")

    def __init__(self, labels: Sequence[str], bases: Iterable[int],
                 _skip_validation: bool = False):
        labels = tuple(str(s) for s in labels)
        n = len(labels)
        if n > MAX_GROUND:
            raise InputError(f"ground set larger than {MAX_GROUND}")
        if len(set(labels)) != n:
            raise InputError("duplicate edge labels")
        bases = tuple(sorted(set(int(b) for b in bases)))
        if not bases:
            raise InputError("basis family is empty")
        if n == 0:
            if bases != (0,):
                raise InputError("the empty matroid has the empty basis only")
        else:
            if any(b < 0 or b >> n for b in bases):
                raise InputError("basis mask out of range")
        r = _popcount(bases[0])
        if any(_popcount(b) != r for b in bases):
            raise InputError("bases of unequal cardinality")
        if not _skip_validation:
            self._check_exchange(bases)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "bases", bases)
        object.__setattr__(self, "_rank", r)
        object.__setattr__(self, "_circuits", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Matroid is immutable")

    @staticmethod
    def _check_exchange(bases):
        bset = set(bases)
        for b1 in bases:
            for b2 in bases:
                if b1 == b2:
                    continue
                only1 = b1 & ~b2
                m = only1
                while m:
                    e = m & -m
                    m ^= e
                    cand = b2 & ~b1
                    found = False
                    c = cand
                    while c:
                        f = c & -c
                        c ^= f
                        if (b1 ^ e) | f in bset:
                            found = True
                            break
                    if not found:
                        raise InputError(
                            "basis exchange axiom fails for "
                            f"{_mask_to_tuple(b1)} / {_mask_to_tuple(b2)}")

    @staticmethod
    def from_subsets(labels: Sequence[str], subsets: Iterable[Iterable[int]]) -> "Matroid":
        n = len(tuple(labels))
        return Matroid(labels, (_mask_from(s, n) for s in subsets))

    # -- queries -------------------------------------------------------------

    def full_rank(self) -> int:
        return self._rank

    def rank(self, S: Optional[Iterable[int]] = None) -> int:
        """Rank of an edge subset: the largest intersection with a basis."""
        if S is None:
            return self._rank
        mask = S if isinstance(S, int) else _mask_from(S, self.n)
        return max(_popcount(b & mask) for b in self.bases)

    def is_independent(self, S) -> bool:
        mask = S if isinstance(S, int) else _mask_from(S, self.n)
        return self.rank(mask) == _popcount(mask)

    def ground_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self):
        return range(self.n)

    def circuits(self) -> tuple:
        """All inclusion-minimal dependent sets, as sorted bitmasks, computed
        once and cached. Circuits never exceed rank+1 in size."""
        if self._circuits is not None:
            return self._circuits
        found = []
        ground = list(range(self.n))
        for size in range(1, self._rank + 2):
            for combo in itertools.combinations(ground, size):
                mask = 0
                for e in combo:
                    mask |= 1 << e
                if any(c & mask == c for c in found):
                    continue  # contains a smaller circuit
                if self.rank(mask) < size:
                    found.append(mask)
        out = tuple(sorted(found))
        object.__setattr__(self, "_circuits", out)
        return out

    def loops(self) -> tuple:
        union = 0
        for b in self.bases:
            union |= b
        return tuple(e for e in range(self.n) if not union >> e & 1)

    def coloops(self) -> tuple:
        inter = self.ground_mask()
        for b in self.bases:
            inter &= b
        return tuple(e for e in range(self.n) if inter >> e & 1)

    def is_loop(self, e: int) -> bool:
        self._check_edge(e)
        return all(not b >> e & 1 for b in self.bases)

    def is_coloop(self, e: int) -> bool:
        self._check_edge(e)
        return all(b >> e & 1 for b in self.bases)

    def _check_edge(self, e: int):
        if not 0 <= e < self.n:
            raise InputError(f"edge index {e} out of range 0..{self.n - 1}")

    # -- minors ---------------------------------------------------------------

    def _drop_edge(self, masks, e):
        low = (1 << e) - 1
        return sorted({(m & low) | ((m >> 1) & ~low) for m in masks})

    def delete(self, e: int) -> "Matroid":
        """Deletion M∖e; for a coloop this is the restriction formula, which
        coincides with contraction."""
        self._check_edge(e)
        labels = self.labels[:e] + self.labels[e + 1:]
        keep = [b for b in self.bases if not b >> e & 1]
        if not keep:  # coloop: restrict
            keep = [b & ~(1 << e) for b in self.bases]
        return Matroid(labels, self._drop_edge(keep, e))

    def contract(self, e: int) -> "Matroid":
        """Contraction M/e; for a loop this is the restriction formula."""
        self._check_edge(e)
        labels = self.labels[:e] + self.labels[e + 1:]
        keep = [b & ~(1 << e) for b in self.bases if b >> e & 1]
        if not keep:  # loop: restrict
            keep = [b for b in self.bases]
        return Matroid(labels, self._drop_edge(keep, e))

    def remove_all(self, edges: Iterable[int], op: str = "delete") -> "Matroid":
        """Iterate delete/contract over an edge set (indices refer to THIS
        matroid; they are re-based internally as the ground set shrinks)."""
        todo = sorted(set(edges), reverse=True)
        m = self
        for e in todo:
            m = m.delete(e) if op == "delete" else m.contract(e)
        return m

    def restrict_to(self, S: Iterable[int]) -> "Matroid":
        """Restriction M|S = deletion of everything outside S."""
        S = set(S)
        return self.remove_all((e for e in range(self.n) if e not in S),
                               "delete")

    def dual(self) -> "Matroid":
        g = self.ground_mask()
        return Matroid(self.labels, (g & ~b for b in self.bases))

    # -- structure ------------------------------------------------------------

    def is_connected(self) -> bool:
        """n = 1 counts as connected; n = 0 is rejected. Otherwise: every
        pair of distinct edges must lie in a common circuit."""
        if self.n == 0:
            raise InputError("connectivity of the empty matroid is undefined")
        if self.n == 1:
            return True
        pair_seen = [[False] * self.n for _ in range(self.n)]
        for c in self.circuits():
            members = _mask_to_tuple(c)
            for i, e in enumerate(members):
                for f in members[i + 1:]:
                    pair_seen[e][f] = True
        return all(pair_seen[e][f]
                   for e in range(self.n) for f in range(e + 1, self.n))

    def is_handle(self, H: Iterable[int]) -> bool:
        mask = H if isinstance(H, int) else _mask_from(H, self.n)
        if mask == 0:
            raise InputError("a handle is a nonempty edge set")
        return all(c & mask == 0 or c & mask == mask for c in self.circuits())

    def _subsets_by_size_then_lex(self, pool: Sequence[int]):
        for size in range(1, len(pool) + 1):
            for combo in itertools.combinations(sorted(pool), size):
                yield combo

    def find_connective_handle(self, C: Iterable[int]) -> Handle:
        """First (by subset size, then lexicographic order) proper handle H
        disjoint from the circuit C whose removal leaves a connected
        restriction."""
        cmask = C if isinstance(C, int) else _mask_from(C, self.n)
        if cmask not in self.circuits():
            raise PreconditionError("C is not a circuit of this matroid")
        if not self.is_connected():
            raise PreconditionError("matroid is disconnected")
        if cmask == self.ground_mask():
            raise PreconditionError("matroid equals the circuit; no handle to find")
        pool = [e for e in range(self.n) if not cmask >> e & 1]
        for combo in self._subsets_by_size_then_lex(pool):
            hmask = _mask_from(combo, self.n)
            if not self.is_handle(hmask):
                continue
            rest = self.restrict_to(
                e for e in range(self.n) if not hmask >> e & 1)
            if rest.n >= 1 and rest.is_connected():
                return Handle(edges=combo, proper=True)
        raise StructureError("no connective handle found")  # cannot happen

    def handle_decomposition(self) -> list:
        """Filtration F_1 ⊂ … ⊂ F_k = E with F_1 the first circuit (ordered
        by size then lexicographically), every restriction to an F_i
        connected, and each difference a handle of that restriction."""
        if not self.is_connected():
            raise PreconditionError("matroid is disconnected")
        circs = self.circuits()
        if not circs:
            raise PreconditionError("free matroid has no handle decomposition")
        c_first = min(circs, key=lambda c: (_popcount(c), _mask_to_tuple(c)))
        c_edges = _mask_to_tuple(c_first)
        filtration = []
        current = self
        current_edges = tuple(range(self.n))  # indices into self
        while True:
            filtration.append(current_edges)
            if len(current_edges) == len(c_edges):
                break
            # the circuit's indices inside the current restriction
            local_c = tuple(current_edges.index(e) for e in c_edges)
            h = current.find_connective_handle(local_c)
            keep_local = [i for i in range(current.n) if i not in set(h.edges)]
            current_edges = tuple(current_edges[i] for i in keep_local)
            current = current.restrict_to(keep_local)
        filtration.reverse()
        return [tuple(sorted(f)) for f in filtration]

    def truncate(self, t: int) -> "Matroid":
        """Bases become the independent sets of size rank − t."""
        if not 0 <= t <= self._rank:
            raise InputError(f"truncation amount {t} outside 0..{self._rank}")
        if t == 0:
            return self
        size = self._rank - t
        subsets = [
            _mask_from(c, self.n)
            for c in itertools.combinations(range(self.n), size)
        ]
        return Matroid(self.labels,
                       (s for s in subsets if self.rank(s) == _popcount(s)))

    # -- relations --------------------------------------------------------------

    def same_ground(self, other: "Matroid") -> bool:
        return self.labels == other.labels

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.labels == other.labels and self.bases == other.bases

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.labels, self.bases))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        fam = [",".join(map(str, _mask_to_tuple(b))) for b in self.bases[:6]]
        more = "" if len(self.bases) <= 6 else f", +{len(self.bases) - 6}"
        return (f"Matroid(n={self.n}, rank={self._rank}, "
                f"bases=[{'; '.join(fam)}{more}])")


def is_quotient(M: Matroid, N: Matroid) -> bool:
    """True when N is a quotient of M: every circuit of M is a union of
    circuits of N. Cross-checked against the rank inequality."""
    if M.labels != N.labels:
        raise InputError("quotient test requires a common ground set")
    ok = True
    n_circs = N.circuits()
    for cm in M.circuits():
        cover = 0
        for cn in n_circs:
            if cn & ~cm == 0:
                cover |= cn
        if cover != cm:
            ok = False
            break
    if ok:
        if N.full_rank() > M.full_rank():
            raise StructureError(
                "circuit criterion held with rank(N) > rank(M)")
        if N.full_rank() == M.full_rank() and M != N:
            raise StructureError(
                "circuit criterion held at equal rank for distinct matroids")
    return ok


def special_handle(M: Matroid, N: Matroid) -> Handle:
    """For a quotient pair (rank difference ≥ 1, N connected, rank(N) ≥ 2,
    N not a circuit) find the first proper independent handle H of N with
    N∖H connected, rank(M∖H) > rank(N∖H) ≥ 2 and rank(N/H) ≥ 1."""
    if M.labels != N.labels:
        raise InputError("special handle needs matroids on one ground set")
    if not is_quotient(M, N):
        raise PreconditionError("N is not a quotient of M")
    if N.full_rank() < 2:
        raise PreconditionError("rank(N) must be at least 2")
    if M.full_rank() <= N.full_rank():
        raise PreconditionError("rank(M) must exceed rank(N)")
    if not N.is_connected():
        raise PreconditionError("N must be connected")
    if N.ground_mask() in N.circuits():
        raise PreconditionError("N must not be a circuit")
    n = N.n
    for size in range(1, n):
        for combo in itertools.combinations(range(n), size):
            hmask = _mask_from(combo, n)
            if not N.is_independent(hmask):
                continue
            if not N.is_handle(hmask):
                continue
            keep = [e for e in range(n) if not hmask >> e & 1]
            n_res = N.restrict_to(keep)
            if not (n_res.n >= 1 and n_res.is_connected()):
                continue
            m_res = M.restrict_to(keep)
            if not (m_res.full_rank() > n_res.full_rank() >= 2):
                continue
            n_con = N.remove_all(combo, "contract")
            if n_con.full_rank() < 1:
                continue
            return Handle(edges=combo, proper=True)
    raise StructureError("no special handle exists under the hypotheses")


# -- constructors ---------------------------------------------------------------

def default_labels(n: int) -> tuple:
    return tuple(f"x{i + 1}" for i in range(n))


def uniform(k: int, n: int, labels: Optional[Sequence[str]] = None) -> Matroid:
    if not 0 <= k <= n:
        raise InputError(f"uniform({k},{n}) needs 0 <= k <= n")
    labels = default_labels(n) if labels is None else labels
    if k == 0:
        return Matroid(labels, (0,))
    return Matroid(
        labels,
        (_mask_from(c, n) for c in itertools.combinations(range(n), k)))


def graphic(num_vertices: int, edge_list: Sequence, labels=None) -> Matroid:
    """Cycle matroid of a multigraph: bases are the spanning forests (the
    maximal circuit-free edge sets). Self-loops are matroid loops."""
    m = len(edge_list)
    if m > MAX_GROUND:
        raise InputError(f"more than {MAX_GROUND} edges")
    labels = default_labels(m) if labels is None else labels
    edges = []
    for u, v in edge_list:
        u, v = int(u), int(v)
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise InputError(f"edge ({u},{v}) out of vertex range")
        edges.append((u, v))

    def forest_mask(combo) -> bool:
        parent = list(range(num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in combo:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    components = num_vertices
    parent = list(range(num_vertices))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    rank = num_vertices - components
    bases = [
        _mask_from(c, m)
        for c in itertools.combinations(range(m), rank)
        if forest_mask(c)
    ]
    return Matroid(labels, bases)


def _det(rows) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    a = [list(map(Fraction, r)) for r in rows]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                for c2 in range(col, n):
                    a[r][c2] -= f * a[col][c2]
    return det


def matrix_rank(A) -> int:
    a = [list(map(Fraction, r)) for r in A]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, rows) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        for r in range(rows):
            if r != row and a[r][col]:
                f = a[r][col] * inv
                for c2 in range(cols):
                    a[r][c2] -= f * a[row][c2]
        row += 1
        rank += 1
        if row == rows:
            break
    return rank


def column_matroid(A: Sequence[Sequence], labels=None) -> Matroid:
    """Matroid of the columns of a rational matrix: bases are the column
    subsets of size rank(A) with nonvanishing maximal minor."""
    A = [list(map(Fraction, r)) for r in A]
    if not A or not A[0]:
        raise InputError("empty matrix")
    ncols = len(A[0])
    if ncols > MAX_GROUND:
        raise InputError(f"more than {MAX_GROUND} columns")
    if any(len(r) != ncols for r in A):
        raise InputError("ragged matrix")
    labels = default_labels(ncols) if labels is None else labels
    r = matrix_rank(A)
    if r == 0:
        return Matroid(labels, (0,))
    bases = []
    for combo in itertools.combinations(range(ncols), r):
        sub = [[row[c] for c in combo] for row in A]
        # square it up: pick r independent rows once via rank of submatrix
        if matrix_rank(sub) == r:
            bases.append(_mask_from(combo, ncols))
    return Matroid(labels, bases)


def submatrix_det(A: Sequence[Sequence], row_idx, col_idx) -> Fraction:
    sub = [[Fraction(A[r][c]) for c in col_idx] for r in row_idx]
    return _det(sub)


# Free-function spellings of the Matroid methods, so callers can use either
# style; each simply forwards.

def rank(M: Matroid, S=None) -> int:
    return M.rank(S)


def circuits(M: Matroid) -> tuple:
    return M.circuits()


def delete(M: Matroid, e: int) -> Matroid:
    return M.delete(e)


def contract(M: Matroid, e: int) -> Matroid:
    return M.contract(e)


def dual(M: Matroid) -> Matroid:
    return M.dual()


def is_connected(M: Matroid) -> bool:
    return M.is_connected()


def is_handle(M: Matroid, H) -> bool:
    return M.is_handle(H)


def find_connective_handle(M: Matroid, C) -> Handle:
    return M.find_connective_handle(C)


def handle_decomposition(M: Matroid) -> list:
    return M.handle_decomposition()


def truncate(M: Matroid, t: int) -> Matroid:
    return M.truncate(t)


# -- JSON -------------------------------------------------------------------------

def matroid_to_json(M: Matroid) -> dict:
    return {
        "labels": list(M.labels),
        "bases": [list(_mask_to_tuple(b)) for b in M.bases],
    }


def matroid_from_json(obj) -> Matroid:
    try:
        labels = obj["labels"]
        bases = obj["bases"]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed matroid JSON: {exc}") from None
    return Matroid.from_subsets(labels, bases)


def mask_to_edges(mask: int) -> tuple:
    return _mask_to_tuple(mask)


def edges_to_mask(edges: Iterable[int], n: int) -> int:
    return _mask_from(edges, n)
