"""Cohomology characters of twisted divided powers of the universal subsheaf.

Let R denote the universal rank (n-1) subsheaf on the projective space of
k^n, i.e. the kernel of the evaluation V (x) O -> O(1), where V has
dimension n.  For d >= 0 and e >= -1 the sheaf D^d R(e) has cohomology only
in degrees 0 and 1, and ``divided_cohomology(i, p, d, e, n)`` returns the
character of H^i over a field of characteristic p (p = 0 allowed).

Three routes are implemented:

* ``method="recursive"`` -- reduces d below p with a Frobenius-twist
  recursion whose coefficients are the truncated symmetric polynomials
  Phi_{D,E}, then applies the characteristic-zero closed form (two-row
  Schur polynomials),
* ``method="nim"`` -- characteristic 2 only: h^1 is a closed sum of
  Frobenius twists of Nim polynomials times truncated Schur polynomials,
  and h^0 follows from the Euler characteristic,
* ``method="oracle"`` -- brute force: the sections complex
  D^d V (x) Sym^e V -> D^{d-1} V (x) Sym^{e+1} V is built explicitly and
  kernel/cokernel dimensions are computed one torus weight at a time.

All three agree; the test suite enforces this on sizeable grids.
"""

from __future__ import annotations

from functools import lru_cache

from . import guards
from .charring import (
    CharacterPoly,
    complete_h,
    dimension_of,
    frobenius_twist,
    nim_poly,
    schur_two_row,
    truncated_h,
    truncated_schur,
)
from .exactla import is_prime, rank_mod_p

__all__ = [
    "divided_cohomology",
    "base_char_zero",
    "phi_factor",
    "nim_h1",
    "euler_characteristic",
    "oracle_divided",
    "clear_caches",
]

_memo = {}


def _validate(i, p, d, e, n):
    if i not in (0, 1):
        raise ValueError("cohomological degree must be 0 or 1")
    if d < 0:
        raise ValueError("divided-power degree must be >= 0")
    if e < -1:
        raise ValueError("twist must be >= -1")
    if n < 2:
        raise ValueError("dimension parameter must be >= 2")
    if p != 0 and not is_prime(p):
        raise ValueError("characteristic must be 0 or prime")


def base_char_zero(i, n, d, e):
    """Characteristic-zero (equivalently d < p) cohomology character:
    h^0 = s_(e,d) when e >= d, h^1 = s_(d-1,e+1) when e <= d-2, else zero."""
    if i == 0:
        if e >= d:
            return schur_two_row(n, e, d)
        return CharacterPoly.zero(n)
    if e <= d - 2:
        return schur_two_row(n, d - 1, e + 1)
    return CharacterPoly.zero(n)


@lru_cache(maxsize=None)
def phi_factor(n, p, D, E):
    """Recursion coefficient
    Phi_{D,E} = sum_j (h^(p)_{E+jp} h^(p)_{D-jp} - h^(p)_{E+1+jp} h^(p)_{D-1-jp}),
    a finite sum since the truncated polynomials vanish outside [0, n(p-1)]."""
    acc = CharacterPoly.zero(n)
    j = 0
    while D - 1 - j * p >= 0 or D - j * p >= 0:
        acc = acc + truncated_h(n, E + j * p, p) * truncated_h(n, D - j * p, p)
        acc = acc - truncated_h(n, E + 1 + j * p, p) * truncated_h(n, D - 1 - j * p, p)
        j += 1
    return acc


def euler_characteristic(n, d, e):
    """h^0 - h^1 = h_d*h_e - h_{d-1}*h_{e+1}, independent of characteristic."""
    return complete_h(n, d) * complete_h(n, e) - complete_h(n, d - 1) * complete_h(
        n, e + 1
    )


def nim_h1(n, d, e):
    """Characteristic-2 closed form for h^1(D^d R(e)) when e >= d-1:
    the sum of F^{2q}(Nim_m) * s^(q)_(e-(2m-2j-1)q, d-(2m+2j+1)q) over
    q = 2^r with r >= 1 and m, j >= 0 such that (2m+2j+1) q <= d."""
    if e < d - 1:
        raise ValueError("closed form requires e >= d-1")
    acc = CharacterPoly.zero(n)
    q = 2
    while q <= d:
        umax = d // q  # 2m + 2j + 1 <= umax
        for u in range(1, umax + 1, 2):
            half = (u - 1) // 2
            for m in range(half + 1):
                j = half - m
                s = truncated_schur(n, q, e - (2 * m - 2 * j - 1) * q, d - u * q)
                if s.is_zero():
                    continue
                acc = acc + frobenius_twist(nim_poly(n, m), 2 * q) * s
        q *= 2
    return acc


def divided_cohomology(i, p, d, e, n, method="recursive"):
    """Character of H^i(P(k^n), D^d R(e)) in characteristic p.

    The dimension is ``dimension_of`` of the result.  ``method`` selects the
    recursive route (any p), the characteristic-2 closed form ("nim"), or
    the explicit linear-algebra oracle ("oracle", prime p, size-guarded).
    """
    _validate(i, p, d, e, n)
    if method == "recursive":
        return _recursive(i, p, d, e, n)
    if method == "nim":
        if p != 2:
            raise ValueError("the Nim method requires characteristic 2")
        return _nim(i, d, e, n)
    if method == "oracle":
        return oracle_divided(i, p, d, e, n)
    raise ValueError("unknown method %r" % (method,))


def _recursive(i, p, d, e, n):
    if e < d - 1:
        # h^i(D^d R(e)) = h^{1-i}(D^{e+1} R(d-1)).
        return _recursive(1 - i, p, e + 1, d - 1, n)
    if p == 0 or d < p:
        return base_char_zero(i, n, d, e)
    if i == 0:
        # The Frobenius recursion below computes h^1; h^0 follows from the
        # characteristic-free Euler characteristic.  (Running the same sum
        # with h^0 sub-values overshoots: cross-checked against the
        # explicit-complex oracle.)
        return euler_characteristic(n, d, e) + _recursive(1, p, d, e, n)
    key = (i, p, d, e, n)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    acc = CharacterPoly.zero(n)
    for a in range(d // p + 1):
        D = d - a * p
        for b in range(-1, (e + n * (p - 1)) // p + 1):
            E = e - b * p
            phi = phi_factor(n, p, D, E)
            if phi.is_zero():
                continue
            sub = _recursive(i, p, a, b, n)
            if sub.is_zero():
                continue
            acc = acc + phi * frobenius_twist(sub, p)
    _memo[key] = acc
    return acc


def _nim(i, d, e, n):
    if e < d - 1:
        return _nim(1 - i, e + 1, d - 1, n)
    h1 = nim_h1(n, d, e)
    if i == 1:
        return h1
    return h1 + euler_characteristic(n, d, e)


def _oracle_guard(d, e, n):
    budget = guards.size_budget()
    if budget is None:
        if n <= 4 and d <= 12 and e <= 12:
            return
        raise guards.SizeGuardExceeded(
            "divided oracle limited to n <= 4, d <= 12, e <= 12 "
            "(set FLAGCOH_SIZE_GUARD to raise)"
        )
    work = dimension_of(complete_h(n, d)) * dimension_of(complete_h(n, max(e, 0)))
    if work > budget:
        raise guards.SizeGuardExceeded(
            "divided oracle instance exceeds FLAGCOH_SIZE_GUARD=%d" % budget
        )


def oracle_divided(i, p, d, e, n):
    """Brute-force character of H^i(D^d R(e)) for prime p.

    Global sections of the two-step resolution of D^d R(e) give the map
    D^d V (x) Sym^e V -> D^{d-1} V (x) Sym^{e+1} V sending mu (x) nu to
    sum_t (mu - eps_t) (x) (nu + eps_t) over variables t with mu_t > 0
    (divided-power comultiplication followed by multiplication).  The map
    preserves the torus weight mu + nu, so h^0 (kernel) and h^1 (cokernel)
    are computed one weight block at a time.
    """
    _validate(i, p, d, e, n)
    if not is_prime(p):
        raise ValueError("the oracle requires a prime characteristic")
    _oracle_guard(d, e, n)

    from .charring import _compositions

    dom_by_weight = {}
    if e >= 0:
        for mu in _compositions(d, n, None):
            for nu in _compositions(e, n, None):
                w = tuple(a + b for a, b in zip(mu, nu))
                dom_by_weight.setdefault(w, []).append((mu, nu))
    cod_by_weight = {}
    cod_index = {}
    for mu in _compositions(d - 1, n, None) if d >= 1 else ():
        for nu in _compositions(e + 1, n, None):
            w = tuple(a + b for a, b in zip(mu, nu))
            cod_index[(mu, nu)] = len(cod_by_weight.setdefault(w, []))
            cod_by_weight[w].append((mu, nu))

    terms = {}
    for w in set(dom_by_weight) | set(cod_by_weight):
        dom = dom_by_weight.get(w, [])
        cod = cod_by_weight.get(w, [])
        if dom and cod:
            matrix = [[0] * len(dom) for _ in cod]
            for ci, (mu, nu) in enumerate(dom):
                for t in range(n):
                    if mu[t] == 0:
                        continue
                    mu2 = mu[:t] + (mu[t] - 1,) + mu[t + 1 :]
                    nu2 = nu[:t] + (nu[t] + 1,) + nu[t + 1 :]
                    matrix[cod_index[(mu2, nu2)]][ci] = 1
            rank = rank_mod_p(matrix, p)
        else:
            rank = 0
        mult = (len(dom) - rank) if i == 0 else (len(cod) - rank)
        if mult:
            terms[w] = mult
    return CharacterPoly(n, terms)


def clear_caches():
    """Drop the recursion memo (used for repeatable benchmark timings)."""
    _memo.clear()
    phi_factor.cache_clear()
