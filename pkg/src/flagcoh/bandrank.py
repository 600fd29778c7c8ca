"""Ranks of windowed binomial band matrices over a prime field.

The matrices handled here have entries C(k, c - rho) for row indices rho in
[row_lo, row_hi] and column indices c in [col_lo, col_hi]; row rho reads the
column window [rho, rho + k].  They encode multiplication by (1 + T)^k
between windowed spans of monomials, and show up twice in this package: as
the torus-weight blocks of the kernel-bundle section maps on the projective
line, and as the graded pieces of multiplication by T^k on a two-factor
monomial complete intersection.

Rank computation uses a window reduction.  A kernel vector, extended by
zero, satisfies the order-k linear recurrence with coefficients C(k, *)
on the row window (both extreme coefficients are 1, so values on any k
consecutive positions determine the rest).  The solution space of that
recurrence on the integers is spanned by the binomial functions
x -> C(x, j), j < k, up to an alternating sign; a kernel vector therefore
corresponds to a solution vanishing on the two windows flanking the column
window.  Expanding in the binomial basis at each window turns vanishing
into triangular conditions, leaving one small "conditions" matrix
C(dx, j - j') whose rank finishes the computation.

`band_rank_bruteforce` builds the matrix explicitly; the tests hold the
reduced route to it on exhaustive small grids.
"""

from __future__ import annotations

import numpy as np

from .exactla import binomial_row_mod_p, is_prime, rank_mod_p

__all__ = ["band_rank", "band_rank_bruteforce", "band_matrix", "SuffixRankProfile"]


def band_matrix(p, k, row_lo, row_hi, col_lo, col_hi):
    """Explicit dense matrix [C(k, c - rho) mod p] on the given windows."""
    rows = max(0, row_hi - row_lo + 1)
    cols = max(0, col_hi - col_lo + 1)
    m = np.zeros((rows, cols), dtype=np.int64)
    if rows == 0 or cols == 0:
        return m
    binoms = binomial_row_mod_p(k, k + 1, p)
    for ri, rho in enumerate(range(row_lo, row_hi + 1)):
        for ci, c in enumerate(range(col_lo, col_hi + 1)):
            a = c - rho
            if 0 <= a <= k:
                m[ri, ci] = binoms[a]
    return m


def band_rank_bruteforce(p, k, row_lo, row_hi, col_lo, col_hi):
    return rank_mod_p(band_matrix(p, k, row_lo, row_hi, col_lo, col_hi), p)


_conditions_rank_cache = {}


def _conditions_rank(p, dx, lam1, lam2, k):
    """Rank of [C(dx, j - j')] with j in [lam1, k), j' in [0, lam2)."""
    key = (p, dx, lam1, lam2, k)
    hit = _conditions_rank_cache.get(key)
    if hit is not None:
        return hit
    ncols = k - lam1
    row = binomial_row_mod_p(dx, k, p)
    m = np.zeros((lam2, ncols), dtype=np.int64)
    for jp in range(lam2):
        lo = max(lam1, jp)
        m[jp, lo - lam1 : ncols] = row[lo - jp : k - jp]
    r = rank_mod_p(m, p)
    _conditions_rank_cache[key] = r
    return r


def band_rank(p, k, row_lo, row_hi, col_lo, col_hi):
    """Rank of the windowed band matrix via the window reduction."""
    if not is_prime(p):
        raise ValueError("modulus %r is not prime" % (p,))
    if k < 0 or row_lo > row_hi or col_lo > col_hi:
        return 0
    # Columns outside [row_lo, row_hi + k] are identically zero.
    col_lo = max(col_lo, row_lo)
    col_hi = min(col_hi, row_hi + k)
    if col_lo > col_hi:
        return 0
    ncols = col_hi - col_lo + 1
    lam1 = col_lo - row_lo
    lam2 = row_hi + k - col_hi
    if lam1 >= k or lam2 >= k:
        return ncols
    dx = col_hi + 1 - row_lo
    nullity = (k - lam1) - _conditions_rank(p, dx, lam1, lam2, k)
    return ncols - nullity


class SuffixRankProfile:
    """Incremental suffix ranks of the conditions matrix C(N, j - j').

    The matrix has rows j' in [0, n_rows) and columns j in [0, n_cols);
    ``suffix_rank(j0)`` is the rank of the column block [j0, n_cols).
    Columns are adjoined right to left on demand and kept as a reduced
    echelon basis; extension stops for good once the row space saturates.

    Columns are processed in panels: each panel is reduced against the
    existing basis with a single matrix product (BLAS, float storage; exact
    since all values stay far below the float mantissa), then echelonized
    among its own members, after which the old basis rows are cleaned up
    against the new pivots with one more matrix product.  This keeps the
    cubic part of the work inside gemm calls.
    """

    _PANEL = 64

    def __init__(self, p, N, n_rows, n_cols):
        self.p = p
        self.n_rows = n_rows
        self.n_cols = n_cols
        # Exactness: gemm accumulates <= n_rows products of residues.
        dtype = np.float32 if n_rows * (p - 1) ** 2 < (1 << 24) else np.float64
        self.row = binomial_row_mod_p(N, n_cols, p).astype(dtype)
        self.basis = np.zeros((n_rows, n_rows), dtype=dtype)
        self.pivots = []
        self.rank = 0
        self.saturated = n_rows == 0
        self.next_col = n_cols - 1
        self.suffix = np.zeros(n_cols + 1, dtype=np.int64)

    def _panel(self, hi, lo):
        """Columns j = hi, hi-1, ..., lo as rows of a matrix."""
        width = hi - lo + 1
        P = np.zeros((width, self.n_rows), dtype=self.row.dtype)
        for idx, j in enumerate(range(hi, lo - 1, -1)):
            m = min(j + 1, self.n_rows)
            if m > 0:
                P[idx, :m] = self.row[j - m + 1 : j + 1][::-1]
        return P

    def _extend_to(self, j0):
        p = self.p
        while self.next_col >= j0 and not self.saturated:
            hi = self.next_col
            lo = max(j0, hi - self._PANEL + 1)
            P = self._panel(hi, lo)
            if self.rank:
                coeffs = P[:, self.pivots]
                if coeffs.any():
                    P = (P - coeffs @ self.basis[: self.rank]) % p
            new_rows = []
            new_pivots = []
            for idx in range(P.shape[0]):
                v = P[idx]
                if new_pivots:
                    coeffs = v[new_pivots]
                    if coeffs.any():
                        v = (v - coeffs @ np.asarray(new_rows)) % p
                nz = np.flatnonzero(v)
                if nz.size:
                    lead = int(nz[0])
                    inv = pow(int(v[lead]), -1, p)
                    v = (v * inv) % p
                    for w in new_rows:
                        if w[lead]:
                            w -= w[lead] * v
                            w %= p
                    new_rows.append(v)
                    new_pivots.append(lead)
                self.suffix[hi - idx] = self.rank + len(new_pivots)
                if self.rank + len(new_pivots) == self.n_rows:
                    self.next_col = hi - idx - 1
                    self.saturated = True
                    self.basis = None
                    self.pivots = None
                    return
            if new_rows:
                block = np.asarray(new_rows)
                if self.rank:
                    coeffs = self.basis[: self.rank, new_pivots]
                    if coeffs.any():
                        self.basis[: self.rank] = (
                            self.basis[: self.rank] - coeffs @ block
                        ) % p
                self.basis[self.rank : self.rank + len(new_rows)] = block
                self.rank += len(new_rows)
                self.pivots.extend(new_pivots)
            self.next_col = lo - 1

    def suffix_rank(self, j0):
        if j0 >= self.n_cols:
            return 0
        if j0 > self.next_col:
            return int(self.suffix[j0])
        if self.saturated:
            return self.n_rows
        self._extend_to(j0)
        if j0 > self.next_col:
            return int(self.suffix[j0])
        return self.n_rows
