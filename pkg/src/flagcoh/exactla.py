"""Exact linear algebra: ranks over prime fields and over the rationals,
plus binomial and multinomial coefficients modulo a prime.

Everything is tolerance-free.  Prime-field ranks use dense Gaussian
elimination on int64 numpy arrays; characteristic-zero ranks use
fraction-free (Bareiss) elimination with exact Python integers, never
floating point.  The matrices arising in this package are small (at most a
few hundred rows), so dense elimination is the right tool.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "is_prime",
    "rank_mod_p",
    "kernel_dim_mod_p",
    "rank_exact_integer",
    "binomial_mod_p",
    "multinomial_mod_p",
    "binomial_row_mod_p",
]


def is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def _check_prime(p):
    if not is_prime(p):
        raise ValueError("modulus %r is not prime" % (p,))


def _as_mod_p_array(matrix, p):
    a = np.array(matrix, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return a % p


def rank_mod_p(matrix, p):
    """Rank of an integer matrix over the field with p elements."""
    _check_prime(p)
    a = _as_mod_p_array(matrix, p)
    return _rank_mod_p_inplace(a, p)


def _rank_mod_p_inplace(a, p):
    """Gaussian elimination on a reduced int64 array; destroys `a`."""
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivots = np.flatnonzero(a[rank:, col])
        if pivots.size == 0:
            continue
        piv = rank + pivots[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), -1, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1 :, col]
        nz = np.flatnonzero(below)
        if nz.size:
            rows_nz = rank + 1 + nz
            a[rows_nz] = (a[rows_nz] - np.outer(a[rows_nz, col], a[rank])) % p
        rank += 1
    return rank


def kernel_dim_mod_p(matrix, p):
    """Dimension of the null space over F_p: columns minus rank."""
    _check_prime(p)
    a = _as_mod_p_array(matrix, p)
    cols = a.shape[1]
    return cols - _rank_mod_p_inplace(a, p)


def rank_exact_integer(matrix):
    """Rank over the rationals via fraction-free Bareiss elimination.

    Rows are Python lists of exact integers; intermediate entries stay
    integral and determinant-bounded.
    """
    a = [[int(x) for x in row] for row in matrix]
    if not a or not a[0]:
        return 0
    rows, cols = len(a), len(a[0])
    if any(len(row) != cols for row in a):
        raise ValueError("ragged matrix")
    rank = 0
    prev = 1
    for col in range(cols):
        piv = None
        for r in range(rank, rows):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        for r in range(rank + 1, rows):
            cur = a[r]
            f1, f2 = pr[col], cur[col]
            for c in range(col, cols):
                cur[c] = (f1 * cur[c] - f2 * pr[c]) // prev
        prev = pr[col]
        rank += 1
        if rank == rows:
            break
    return rank


@lru_cache(maxsize=None)
def _small_binomials(p):
    """Table of C(i, j) mod p for 0 <= j <= i < p."""
    table = [[0] * p for _ in range(p)]
    for i in range(p):
        table[i][0] = 1
        for j in range(1, i + 1):
            table[i][j] = (table[i - 1][j - 1] + table[i - 1][j]) % p
    return table


def binomial_mod_p(r, a, p):
    """C(r, a) mod p by Lucas' theorem (digit-wise products base p)."""
    _check_prime(p)
    if a < 0 or a > r:
        return 0
    table = _small_binomials(p)
    out = 1
    while r or a:
        rd, ad = r % p, a % p
        if ad > rd:
            return 0
        out = (out * table[rd][ad]) % p
        r //= p
        a //= p
    return out


def multinomial_mod_p(parts, p):
    """Multinomial coefficient (sum parts)! / prod(part!) mod p, as a
    product of iterated binomials."""
    _check_prime(p)
    total = 0
    out = 1
    for part in parts:
        if part < 0:
            return 0
        total += part
        out = (out * binomial_mod_p(total, part, p)) % p
    return out


def binomial_row_mod_p(N, length, p):
    """Vectorized row of Pascal's triangle: [C(N, 0..length-1)] mod p."""
    _check_prime(p)
    if length <= 0:
        return np.zeros(0, dtype=np.int64)
    xs = np.arange(length, dtype=np.int64)
    out = np.ones(length, dtype=np.int64)
    table = np.array(_small_binomials(p), dtype=np.int64)
    n = N
    while True:
        nd = n % p
        xd = xs % p
        out = np.where(xd > nd, 0, out * table[nd, np.minimum(xd, nd)]) % p
        xs = xs // p
        n //= p
        if n == 0:
            out = np.where(xs > 0, 0, out)
            break
    return out
