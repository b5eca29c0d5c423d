"""Sparse multivariate polynomials with exact coefficients over ℚ or F_p.

A variable is a pair ``(label, level)``; level 0 is the plain variable and
level q ≥ 1 is its q-th jet. Variables serialize as ``"label"`` (level 0) or
``"label@q"``. Polynomials are immutable; every constructor and operation
returns a canonical form: no zero coefficients, the variable universe pruned
to the variables that actually occur, variables sorted, exponent vectors
aligned. Consequently semantic equality is structural equality and Poly
values are hashable.

The coefficient field is either the tag ``"Q"`` (rationals, stored as
Fraction in lowest terms) or an int p — a prime below 2**16 — for F_p
(coefficients stored as ints in [1, p-1]).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .errors import InputError, ResourceError

Var = tuple  # (label: str, level: int)

FIELD_Q = "Q"
_PRIME_CAP = 1 << 16


def mkvar(label, level: int = 0) -> Var:
    """Build a variable; passing an existing ``(label, level)`` pair through
    is allowed (the level argument must then stay 0)."""
    if isinstance(label, tuple):
        if level:
            raise InputError("cannot combine a Var with a level offset")
        label, level = label
    if not isinstance(label, str) or not label:
        raise InputError("variable label must be a nonempty string")
    if not isinstance(level, int) or level < 0:
        raise InputError("jet level must be a nonnegative integer")
    return (label, level)


def var_to_str(v: Var) -> str:
    label, level = v
    return label if level == 0 else f"{label}@{level}"


def var_from_str(s: str) -> Var:
    if "@" in s:
        label, _, lvl = s.rpartition("@")
        try:
            level = int(lvl)
        except ValueError:
            raise InputError(f"bad jet level in variable {s!r}") from None
        return mkvar(label, level)
    return mkvar(s, 0)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_field(field):
    if field == FIELD_Q:
        return field
    if isinstance(field, int):
        if not _is_prime(field):
            raise InputError(f"modulus {field} is not prime")
        if field >= _PRIME_CAP:
            raise InputError(f"prime {field} too large (cap 2^16)")
        return field
    raise InputError(f"unknown coefficient field {field!r}")


def _coeff(field, c):
    """Normalize a raw coefficient into the field; may normalize to zero."""
    if field == FIELD_Q:
        if isinstance(c, Fraction):
            return c
        if isinstance(c, int):
            return Fraction(c)
        if isinstance(c, str):
            return Fraction(c)
        raise InputError(f"bad rational coefficient {c!r}")
    # prime field
    if isinstance(c, str):
        if "/" in c:
            num, _, den = c.partition("/")
            d = int(den) % field
            if d == 0:
                raise InputError(f"denominator of {c!r} vanishes mod {field}")
            return (int(num) * pow(d, -1, field)) % field
        c = int(c)
    if isinstance(c, Fraction):
        d = c.denominator % field
        if d == 0:
            raise InputError(f"denominator of {c} vanishes mod {field}")
        return (c.numerator * pow(d, -1, field)) % field
    if isinstance(c, int):
        return c % field
    raise InputError(f"bad coefficient {c!r} for F_{field}")


class Poly:
    """Immutable sparse polynomial in canonical form."""

    __slots__ = ("field", "vars", "terms", "_hash")

    def __init__(self, field, vars: Sequence[Var], terms: Mapping[tuple, object]):
        field = check_field(field)
        vars = tuple(tuple(v) for v in vars)
        if len(set(vars)) != len(vars):
            raise InputError("duplicate variables in universe")
        clean = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vars):
                raise InputError("exponent vector length does not match universe")
            if any(e < 0 for e in exps):
                raise InputError("negative exponent")
            c = clean.get(exps, 0) + _coeff(field, c)
            if field != FIELD_Q:
                c %= field
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        # prune unused variables, then sort the survivors
        used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
        pruned_vars = [vars[i] for i in used]
        order = sorted(range(len(pruned_vars)), key=lambda i: pruned_vars[i])
        final_vars = tuple(pruned_vars[i] for i in order)
        final_terms = {}
        for exps, c in clean.items():
            key = tuple(exps[used[i]] for i in order)
            final_terms[key] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "vars", final_vars)
        object.__setattr__(self, "terms", final_terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(field) -> "Poly":
        return Poly(field, (), {})

    @staticmethod
    def const(field, c) -> "Poly":
        return Poly(field, (), {(): c})

    @staticmethod
    def one(field) -> "Poly":
        return Poly.const(field, 1)

    @staticmethod
    def variable(field, label: str, level: int = 0) -> "Poly":
        v = mkvar(label, level)
        return Poly(field, (v,), {(1,): 1})

    @staticmethod
    def monomial(field, powers: Mapping[Var, int], coeff=1) -> "Poly":
        vars = tuple(powers)
        return Poly(field, vars, {tuple(powers[v] for v in vars): coeff})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.vars

    def constant_value(self):
        if self.vars:
            raise InputError("polynomial is not constant")
        if not self.terms:
            return Fraction(0) if self.field == FIELD_Q else 0
        return self.terms[()]

    def total_degree(self) -> int:
        """Degree of the zero polynomial is reported as -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, v: Var) -> int:
        v = tuple(v)
        if v not in self.vars:
            return 0
        i = self.vars.index(v)
        return max((e[i] for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, powers: Mapping[Var, int]):
        """Coefficient of the given monomial (zero if absent)."""
        want = {tuple(v): e for v, e in powers.items() if e}
        for exps, c in self.terms.items():
            got = {self.vars[i]: e for i, e in enumerate(exps) if e}
            if got == want:
                return c
        return Fraction(0) if self.field == FIELD_Q else 0

    def monomials(self):
        """Iterate (coefficient, {var: exponent}) pairs, graded-lex order."""
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            yield self.terms[exps], {
                self.vars[i]: e for i, e in enumerate(exps) if e
            }

    # -- comparison / hashing ----------------------------------------------

    def _key(self):
        return (self.field, self.vars, tuple(sorted(self.terms.items())))

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.vars == other.vars \
            and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self._key())
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for c, powers in self.monomials():
            mono = "*".join(
                var_to_str(v) + (f"^{e}" if e > 1 else "")
                for v, e in sorted(powers.items())
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            else:
                bits.append(f"{c}*{mono}")
        return "Poly(" + " + ".join(bits) + ")"

    # -- arithmetic ---------------------------------------------------------

    def _check_same_field(self, other: "Poly"):
        if self.field != other.field:
            raise InputError(
                f"field mismatch: {self.field!r} vs {other.field!r}")

    def _aligned(self, other: "Poly"):
        vars = tuple(sorted(set(self.vars) | set(other.vars)))
        index = {v: i for i, v in enumerate(vars)}

        def remap(p: "Poly"):
            cols = [index[v] for v in p.vars]
            out = {}
            for exps, c in p.terms.items():
                key = [0] * len(vars)
                for col, e in zip(cols, exps):
                    key[col] = e
                out[tuple(key)] = c
            return out

        return vars, remap(self), remap(other)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.field, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_field(other)
        vars, a, b = self._aligned(other)
        for exps, c in b.items():
            a[exps] = a.get(exps, 0) + c
        return Poly(self.field, vars, a)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, self.vars,
                    {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.field, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.field, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "Poly", max_terms: Optional[int] = None) -> "Poly":
        self._check_same_field(other)
        vars, a, b = self._aligned(other)
        out = {}
        p = self.field
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                c = out.get(key, 0) + ca * cb
                if p != FIELD_Q:
                    c %= p
                if c:
                    out[key] = c
                elif key in out:
                    del out[key]
            if max_terms is not None and len(out) > max_terms:
                raise ResourceError(
                    f"product exceeded term ceiling {max_terms}",
                    required=len(out))
        return Poly(self.field, vars, out)

    def __pow__(self, k):
        return self.pow(k)

    def pow(self, k: int, max_terms: Optional[int] = None) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise InputError("exponent must be a nonnegative integer")
        result = Poly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, max_terms=max_terms)
            k >>= 1
            if k:
                base = base.mul(base, max_terms=max_terms)
        return result


# -- derived operators -------------------------------------------------------

def derivative(f: Poly, v: Var) -> Poly:
    """Formal partial derivative ∂f/∂v. The variable must belong to f's
    universe; differentiating by a pruned (absent) variable is an input
    error at this level — callers that want the zero answer test membership
    first."""
    v = tuple(v)
    if v not in f.vars:
        raise InputError(f"unknown variable {var_to_str(v)}")
    i = f.vars.index(v)
    out = {}
    for exps, c in f.terms.items():
        e = exps[i]
        if e:
            key = exps[:i] + (e - 1,) + exps[i + 1:]
            out[key] = out.get(key, 0) + c * e
    return Poly(f.field, f.vars, out)


def euler_apply(f: Poly) -> Poly:
    """Σ_v x_v ∂_v f over every variable of f's universe: each term is
    scaled by its total degree."""
    out = {e: c * sum(e) for e, c in f.terms.items()}
    return Poly(f.field, f.vars, out)


def min_part(f: Poly) -> Poly:
    """Sum of the terms of minimal total degree."""
    if f.is_zero():
        raise InputError("min_part of the zero polynomial")
    d = min(sum(e) for e in f.terms)
    return Poly(f.field, f.vars,
                {e: c for e, c in f.terms.items() if sum(e) == d})


def cremona(f: Poly, S: Iterable[Var]) -> Poly:
    """x^S · f(x^{-1}): each monomial x^B (B ⊆ S) maps to x^{S∖B}.

    Requires f to use only variables of S, each with degree at most one;
    applying the map twice with the same S is the identity.
    """
    S = tuple(sorted({tuple(v) for v in S}))
    extra = set(f.vars) - set(S)
    if extra:
        raise InputError(
            "polynomial uses variables outside S: "
            + ", ".join(var_to_str(v) for v in sorted(extra)))
    for v in f.vars:
        if f.degree_in(v) > 1:
            raise InputError(
                f"degree > 1 in {var_to_str(v)}; transform undefined")
    col = {v: i for i, v in enumerate(f.vars)}
    out = {}
    for exps, c in f.terms.items():
        key = tuple(
            1 - (exps[col[v]] if v in col else 0) for v in S)
        out[key] = out.get(key, 0) + c
    return Poly(f.field, S, out)


def substitute(f: Poly, assignment: Mapping[Var, Union[Poly, int, Fraction]]) -> Poly:
    """Substitute polynomials (or scalars) for variables. Variables absent
    from f's universe are ignored; unassigned variables stay put."""
    assignment = {tuple(v): a for v, a in assignment.items()}
    live = [v for v in f.vars if v in assignment]
    if not live:
        return f
    values = {}
    for v in live:
        a = assignment[v]
        if not isinstance(a, Poly):
            a = Poly.const(f.field, a)
        elif a.field != f.field:
            raise InputError("substitution value in a different field")
        values[v] = a
    result = Poly.zero(f.field)
    for exps, c in f.terms.items():
        keep = {}
        piece = Poly.const(f.field, c)
        for i, e in enumerate(exps):
            v = f.vars[i]
            if not e:
                continue
            if v in values:
                piece = piece * values[v].pow(e)
            else:
                keep[v] = e
        if keep:
            piece = piece * Poly.monomial(f.field, keep)
        result = result + piece
    return result


def evaluate(f: Poly, point: Mapping[Var, Union[int, Fraction]]):
    """Evaluate at a total assignment; every universe variable must get a
    value. Returns a Fraction over ℚ, an int in [0, p) over F_p."""
    point = {tuple(v): c for v, c in point.items()}
    missing = [v for v in f.vars if v not in point]
    if missing:
        raise InputError(
            "missing assignment for "
            + ", ".join(var_to_str(v) for v in missing))
    vals = [_coeff(f.field, point[v]) for v in f.vars]
    if f.field == FIELD_Q:
        total = Fraction(0)
        for exps, c in f.terms.items():
            term = c
            for x, e in zip(vals, exps):
                if e:
                    term *= x ** e
            total += term
        return total
    p = f.field
    total = 0
    for exps, c in f.terms.items():
        term = c
        for x, e in zip(vals, exps):
            if e:
                term = term * pow(x, e, p) % p
        total = (total + term) % p
    return total


def support(f: Poly):
    """The set of exponent vectors, aligned with f.vars."""
    return set(f.terms)


def support_sets(f: Poly):
    """The monomials of f as sets of variables (only meaningful when f is
    multilinear — raises otherwise)."""
    if not is_multilinear(f):
        raise InputError("support_sets requires a multilinear polynomial")
    return {
        frozenset(f.vars[i] for i, e in enumerate(exps) if e)
        for exps in f.terms
    }


def is_multilinear(f: Poly) -> bool:
    return all(e <= 1 for exps in f.terms for e in exps)


def is_squarefree_support(f: Poly) -> bool:
    """True when every monomial of f is squarefree (no exponent above 1)."""
    return is_multilinear(f)


def reduce_mod(f: Poly, p: int) -> Poly:
    """Image of a rational polynomial in F_p[vars]. Every coefficient's
    denominator must be invertible mod p."""
    if f.field != FIELD_Q:
        raise InputError("reduce_mod expects a polynomial over Q")
    check_field(p)
    return Poly(p, f.vars, dict(f.terms))


# -- JSON ---------------------------------------------------------------------

def _coeff_to_json(field, c):
    if field == FIELD_Q:
        return str(c)
    return c


def field_to_json(field):
    return "Q" if field == FIELD_Q else {"Fp": field}


def field_from_json(obj):
    if obj == "Q":
        return FIELD_Q
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        return check_field(int(obj["Fp"]))
    raise InputError(f"bad field descriptor {obj!r}")


def poly_to_json(f: Poly) -> dict:
    ordered = sorted(f.terms, key=lambda e: (sum(e), e))
    return {
        "field": field_to_json(f.field),
        "vars": [var_to_str(v) for v in f.vars],
        "terms": [
            {"c": _coeff_to_json(f.field, f.terms[e]), "e": list(e)}
            for e in ordered
        ],
    }


def poly_from_json(obj) -> Poly:
    try:
        field = field_from_json(obj["field"])
        vars = tuple(var_from_str(s) for s in obj["vars"])
        coeff = Fraction if field == FIELD_Q else int
        terms = {tuple(t["e"]): coeff(str(t["c"])) for t in obj["terms"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed polynomial JSON: {exc}") from None
    return Poly(field, vars, terms)


# Method-style aliases for the free functions above, purely for call-site
# convenience; both spellings are supported.
Poly.derivative = derivative
Poly.euler_apply = euler_apply
Poly.min_part = min_part
Poly.cremona = cremona
Poly.substitute = substitute
Poly.evaluate = evaluate
Poly.support = support
Poly.support_sets = support_sets
Poly.is_multilinear = is_multilinear
Poly.is_squarefree_support = is_squarefree_support
Poly.reduce_mod = reduce_mod
