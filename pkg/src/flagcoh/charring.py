"""Exact multivariate (Laurent) polynomial arithmetic for torus characters.

A character of a torus representation is the Laurent polynomial in
z_1, ..., z_n recording the dimensions of the weight spaces; evaluating at
z_1 = ... = z_n = 1 recovers the dimension.  Everything in this package that
looks like a cohomology group or a symmetric function is stored as a
:class:`CharacterPoly`.

The constructors provided here are the symmetric polynomials that the
cohomology formulas consume:

* ``complete_h(n, d)`` -- the complete homogeneous symmetric polynomial
  h_d = sum of all monomials of degree d,
* ``truncated_h(n, d, p)`` -- the p-truncated version, restricted to
  exponents < p,
* ``schur_two_row(n, a, b)`` -- the two-row Schur polynomial
  s_(a,b) = h_a*h_b - h_{a+1}*h_{b-1},
* ``truncated_schur(n, q, a, b)`` -- the same expression in q-truncated h's,
* ``nim_poly(n, m)`` -- the Nim symmetric polynomial: all monomials of degree
  2m whose exponents have bitwise XOR equal to zero.

All coefficients are exact Python integers.  Out-of-range degrees (negative,
or beyond the truncation support) give the zero polynomial rather than an
error; the cohomology recursions index past their support and rely on silent
vanishing.

>>> complete_h(2, 3).render()
'z1^3 + z1^2*z2 + z1*z2^2 + z2^3'
>>> dimension_of(complete_h(2, 3))
4
>>> nim_poly(3, 1).render()
'z1*z2 + z1*z3 + z2*z3'
"""

from __future__ import annotations

import json
from functools import lru_cache

import numpy as np

__all__ = [
    "CharacterPoly",
    "complete_h",
    "truncated_h",
    "schur_two_row",
    "truncated_schur",
    "nim_poly",
    "frobenius_twist",
    "dualize",
    "dimension_of",
]

# Packed-key multiplication is used when every exponent fits in _PACK_BITS
# bits (after a per-polynomial bias) and coefficients cannot overflow int64.
_PACK_BITS = 9
_PACK_BASE = 1 << _PACK_BITS
_COEF_LIMIT = 1 << 62


class CharacterPoly:
    """A sparse integer polynomial in n variables, optionally Laurent.

    ``terms`` maps exponent tuples of length n to nonzero integer
    coefficients.  Instances are treated as immutable: all arithmetic
    returns new objects, so values can be shared freely (including across
    threads and memo caches).
    """

    __slots__ = ("n", "laurent", "terms")

    def __init__(self, n, terms=None, laurent=False):
        if n < 1:
            raise ValueError("variable count must be positive")
        clean = {}
        for exps, coef in (terms or {}).items():
            if coef == 0:
                continue
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError("exponent vector of wrong length")
            if not laurent and any(e < 0 for e in exps):
                raise ValueError("negative exponent in non-Laurent polynomial")
            clean[exps] = coef
        self.n = n
        self.laurent = bool(laurent)
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n, laurent=False):
        return cls(n, {}, laurent)

    @classmethod
    def one(cls, n, laurent=False):
        return cls(n, {(0,) * n: 1}, laurent)

    @classmethod
    def monomial(cls, n, exps, coef=1, laurent=False):
        return cls(n, {tuple(exps): coef}, laurent)

    # -- ring structure ----------------------------------------------------

    def _check_compatible(self, other):
        if not isinstance(other, CharacterPoly):
            raise TypeError("expected a CharacterPoly")
        if self.n != other.n:
            raise ValueError("variable counts differ: %d vs %d" % (self.n, other.n))

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for exps, coef in other.terms.items():
            c = terms.get(exps, 0) + coef
            if c:
                terms[exps] = c
            else:
                terms.pop(exps, None)
        return CharacterPoly(self.n, terms, self.laurent or other.laurent)

    def __neg__(self):
        return CharacterPoly(
            self.n, {e: -c for e, c in self.terms.items()}, self.laurent
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_compatible(other)
        laurent = self.laurent or other.laurent
        if not self.terms or not other.terms:
            return CharacterPoly.zero(self.n, laurent)
        f, g = self.terms, other.terms
        if len(f) > len(g):
            f, g = g, f
        terms = _mul_packed(self.n, f, g)
        if terms is None:
            terms = _mul_dict(f, g)
        return CharacterPoly(self.n, terms, laurent)

    __rmul__ = __mul__

    def scale(self, k):
        if k == 0:
            return CharacterPoly.zero(self.n, self.laurent)
        return CharacterPoly(
            self.n, {e: k * c for e, c in self.terms.items()}, self.laurent
        )

    def __eq__(self, other):
        # The laurent flag is a representation mode, not part of the value.
        return (
            isinstance(other, CharacterPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical order: descending lexicographic exponents."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def render(self, names=None):
        """Canonical text: ``c*z1^a1*...*zn^an``, unit coefficients and zero
        exponents elided, terms in descending lex order."""
        if not self.terms:
            return "0"
        if names is None:
            names = ["z%d" % (i + 1) for i in range(self.n)]
        pieces = []
        for exps, coef in self.sorted_terms():
            factors = []
            for name, e in zip(names, exps):
                if e == 0:
                    continue
                factors.append(name if e == 1 else "%s^%d" % (name, e))
            mono = "*".join(factors)
            acoef = abs(coef)
            if not mono:
                body = str(acoef)
            elif acoef == 1:
                body = mono
            else:
                body = "%d*%s" % (acoef, mono)
            if not pieces:
                pieces.append(body if coef > 0 else "-" + body)
            else:
                pieces.append(("+ " if coef > 0 else "- ") + body)
        return " ".join(pieces)

    def to_json_dict(self):
        return {
            "n": self.n,
            "laurent": self.laurent,
            "terms": [
                {"e": list(exps), "c": coef} for exps, coef in self.sorted_terms()
            ],
        }

    def to_json(self):
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data):
        return cls(
            data["n"],
            {tuple(t["e"]): t["c"] for t in data["terms"]},
            data["laurent"],
        )

    def __repr__(self):
        return "CharacterPoly(%d, %s)" % (self.n, self.render())


# -- multiplication back ends ----------------------------------------------


def _mul_dict(f, g):
    """Exact dict-of-tuples product; always correct, used as fallback."""
    out = {}
    for ef, cf in f.items():
        for eg, cg in g.items():
            key = tuple(a + b for a, b in zip(ef, eg))
            c = out.get(key, 0) + cf * cg
            if c:
                out[key] = c
            else:
                del out[key]
    return out


def _mul_packed(n, f, g):
    """Product via int64-packed exponent keys and numpy; returns None when
    exponent ranges or coefficient bounds make packing unsafe."""
    if n > 7 or len(f) * len(g) < 512:
        return None
    cf_max = max(abs(c) for c in f.values())
    cg_max = max(abs(c) for c in g.values())
    if cf_max * cg_max * min(len(f), len(g)) >= _COEF_LIMIT:
        return None
    ef = np.array(list(f.keys()), dtype=np.int64)
    eg = np.array(list(g.keys()), dtype=np.int64)
    lo = ef.min(axis=0) + eg.min(axis=0)
    spread = (ef.max(axis=0) + eg.max(axis=0)) - lo
    if (spread >= _PACK_BASE).any():
        return None
    weights = _PACK_BASE ** np.arange(n, dtype=np.int64)
    kf = (ef - ef.min(axis=0)) @ weights
    kg = (eg - eg.min(axis=0)) @ weights
    cf = np.array(list(f.values()), dtype=np.int64)
    cg = np.array(list(g.values()), dtype=np.int64)
    keys = (kf[:, None] + kg[None, :]).ravel()
    coefs = (cf[:, None] * cg[None, :]).ravel()
    order = np.argsort(keys, kind="stable")
    keys = keys[order]
    coefs = coefs[order]
    boundaries = np.flatnonzero(np.diff(keys)) + 1
    starts = np.concatenate(([0], boundaries))
    sums = np.add.reduceat(coefs, starts)
    ukeys = keys[starts]
    keep = sums != 0
    ukeys, sums = ukeys[keep], sums[keep]
    exps = np.empty((len(ukeys), n), dtype=np.int64)
    rem = ukeys
    for i in range(n):
        exps[:, i] = rem % _PACK_BASE
        rem = rem >> _PACK_BITS
    exps += lo
    return {
        tuple(int(x) for x in row): int(c) for row, c in zip(exps, sums)
    }


# -- symmetric-function constructors ----------------------------------------


def _compositions(total, parts, cap):
    """Yield exponent tuples of length `parts` summing to `total` with every
    entry <= cap (cap=None for unbounded)."""
    if parts == 1:
        if total >= 0 and (cap is None or total <= cap):
            yield (total,)
        return
    top = total if cap is None else min(total, cap)
    for head in range(top, -1, -1):
        for tail in _compositions(total - head, parts - 1, cap):
            yield (head,) + tail


@lru_cache(maxsize=None)
def complete_h(n, d):
    """Complete homogeneous symmetric polynomial
    h_d = sum_{i1+...+in=d} z1^i1 ... zn^in; zero for d < 0."""
    if d < 0:
        return CharacterPoly.zero(n)
    if d == 0:
        return CharacterPoly.one(n)
    if d <= 64:
        return CharacterPoly(n, {e: 1 for e in _compositions(d, n, None)})
    # Iterated single-variable convolution; same result, avoids deep
    # recursion in the composition generator for very large degrees.
    acc = {(i,): 1 for i in range(d + 1)}
    for _ in range(n - 1):
        nxt = {}
        for exps in acc:
            used = sum(exps)
            for i in range(d - used + 1):
                nxt[exps + (i,)] = 1
        acc = nxt
    terms = {e: 1 for e in acc if sum(e) == d}
    return CharacterPoly(n, terms)


@lru_cache(maxsize=None)
def truncated_h(n, d, p):
    """p-truncated complete symmetric polynomial: the part of h_d with all
    exponents < p.  Zero outside 0 <= d <= n(p-1)."""
    if p < 1:
        raise ValueError("truncation level must be >= 1")
    if d < 0 or d > n * (p - 1):
        return CharacterPoly.zero(n)
    return CharacterPoly(n, {e: 1 for e in _compositions(d, n, p - 1)})


def schur_two_row(n, a, b):
    """Two-row Schur polynomial s_(a,b) = h_a*h_b - h_{a+1}*h_{b-1}."""
    return complete_h(n, a) * complete_h(n, b) - complete_h(n, a + 1) * complete_h(
        n, b - 1
    )


def truncated_schur(n, q, a, b):
    """q-truncated two-row Schur polynomial built from truncated_h."""
    return truncated_h(n, a, q) * truncated_h(n, b, q) - truncated_h(
        n, a + 1, q
    ) * truncated_h(n, b - 1, q)


@lru_cache(maxsize=None)
def nim_poly(n, m):
    """Nim symmetric polynomial: the sum of all monomials of degree 2m whose
    exponent vector has Nim-sum (bitwise XOR) zero."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    terms = {}
    for exps in _compositions(2 * m, n, None):
        acc = 0
        for e in exps:
            acc ^= e
        if acc == 0:
            terms[exps] = 1
    return CharacterPoly(n, terms)


# -- character operations ----------------------------------------------------


def frobenius_twist(f, p):
    """Raise every variable to the p-th power: z_i -> z_i^p."""
    if p < 1:
        raise ValueError("twist exponent must be >= 1")
    if p == 1:
        return f
    return CharacterPoly(
        f.n,
        {tuple(p * e for e in exps): c for exps, c in f.terms.items()},
        f.laurent,
    )


def dualize(f):
    """Invert every variable: z_i -> z_i^{-1}.  The result is Laurent."""
    return CharacterPoly(
        f.n,
        {tuple(-e for e in exps): c for exps, c in f.terms.items()},
        laurent=True,
    )


def dimension_of(f):
    """Evaluate at z_1 = ... = z_n = 1, i.e. the sum of all coefficients."""
    return sum(f.terms.values())
