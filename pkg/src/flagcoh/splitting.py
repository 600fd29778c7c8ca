"""Torus-equivariant splitting types on the projective line.

For 1 <= r <= d the kernel bundle F^d_r on P^1 = P(k^2) sits in the exact
sequence

    0 -> F^d_r -> D^d(k^2) (x) O -> D^{d-r}(k^2) (x) O(r) -> 0,

where the right map is divided-power comultiplication followed by the
canonical map D^r -> Sym^r (so the matrix carries binomial coefficients
C(r, a) mod p).  F^d_r is equivariant for the diagonal torus T of GL_2 and
therefore splits as a direct sum of line bundles L_{u,v}(i), where L_{u,v}
is the one-dimensional T-representation of weight (u, v).

``splitting_fdr`` recovers the summands by peeling global sections twist by
twist: in twist t, each already-found summand L_{u,v}(i) predicts sections
of weights (u, v) + (degree i+t weights of Sym(k^2)); any excess of the
actual kernel dimensions over the prediction is a batch of new summands
L_{u,v}(-t).  Kernel dimensions come either from explicit weight-block
matrices (``method="direct"``) or from the window reduction of
:mod:`flagcoh.bandrank` (``method="fast"``, the default), which handles
instances the size of F^2249_1112 in seconds.

Bundles of principal parts P^k(O(m)) reduce to the F^d_r by three
case-by-case identifications (``splitting_pparts``).
"""

from __future__ import annotations

from .bandrank import SuffixRankProfile
from .exactla import binomial_row_mod_p, is_prime, kernel_dim_mod_p
from .guards import SizeGuardExceeded

__all__ = [
    "EquivariantSplitting",
    "kernel_weight_dims",
    "splitting_fdr",
    "splitting_pparts",
    "forget_equivariance",
]


class EquivariantSplitting:
    """A multiset of equivariant line-bundle summands L_{u,v}(i), stored as
    (i, u, v) triples in canonical ascending order."""

    __slots__ = ("summands",)

    def __init__(self, summands):
        self.summands = sorted(tuple(s) for s in summands)

    @property
    def rank(self):
        return len(self.summands)

    def degrees(self):
        """Non-equivariant splitting type: the sorted multiset of twists."""
        return sorted(i for i, _, _ in self.summands)

    def to_json_dict(self):
        return {"summands": [{"i": i, "u": u, "v": v} for i, u, v in self.summands]}

    def __eq__(self, other):
        return (
            isinstance(other, EquivariantSplitting)
            and self.summands == other.summands
        )

    def __iter__(self):
        return iter(self.summands)

    def __repr__(self):
        return "EquivariantSplitting(%r)" % (self.summands,)


def kernel_weight_dims(p, d, r, t):
    """Kernel dimensions of H^0 of the defining map in twist t, one torus
    weight at a time.

    The domain D^d(k^2) (x) Sym^t(k^2) has basis x^(i) y^(d-i) (x) x^c y^(t-c)
    of weight (i+c, d-i+t-c); the map sends it to
    sum_a C(r, a) x^(i-a) y^(d-i-r+a) (x) x^(c+a) y^(t-c+r-a), dropping terms
    with invalid divided-power indices.  Weights are preserved, so the map is
    block diagonal; returns {(w1, w2): kernel dimension} for the nonzero
    kernels only.
    """
    if not is_prime(p):
        raise ValueError("characteristic must be prime")
    if not 0 <= r <= d:
        raise ValueError("need 0 <= r <= d")
    if t < 0:
        raise ValueError("twist must be >= 0")
    binoms = binomial_row_mod_p(r, r + 1, p)
    out = {}
    for s in range(d + t + 1):
        dom = range(max(0, s - t), min(d, s) + 1)
        cod = range(max(0, s - t - r), min(d - r, s) + 1)
        if not dom:
            continue
        if not cod:
            out[(s, d + t - s)] = len(dom)
            continue
        matrix = [
            [int(binoms[i - ip]) if 0 <= i - ip <= r else 0 for i in dom]
            for ip in cod
        ]
        k = kernel_dim_mod_p(matrix, p)
        if k:
            out[(s, d + t - s)] = k
    return out


def _peel(p, d, r, kernel_fn):
    """Shared peeling loop: kernel_fn(t) returns a callable s -> kernel dim
    at twist t.  Returns the list of summands (i, u, v) with multiplicity.

    Kernel dimensions and the prediction table are both symmetric under the
    weight swap (s, d+t-s) <-> (d+t-s, s), so only the upper half of each
    weight row is inspected; an excess found off-center is booked at the
    mirrored weight as well, which keeps the generator multiset
    swap-symmetric twist by twist.
    """
    import numpy as np

    gens = []  # (u, twist, multiplicity)
    total = 0
    t_limit = r * (d - r + 1) + 1
    for t in range(t_limit + 1):
        kernel_at = kernel_fn(t)
        width = d + t
        # Kernels vanish outside the open band d-r < s < t+r, so the scan
        # covers the upper half of that band; predictions never extend
        # beyond it (checked when generators are created).
        mid = (width + 1) // 2
        lo = max(mid, d - r + 1)
        hi = min(width, t + r - 1)
        if lo > hi:
            continue
        diff = np.zeros(hi - lo + 2, dtype=np.int64)
        for u, tau, mult in gens:
            a, b = u, u + (t - tau)  # prediction interval at this twist
            if b < lo or a > hi:
                continue
            diff[max(a, lo) - lo] += mult
            diff[min(b, hi) - lo + 1] -= mult
        predicted = np.cumsum(diff[:-1])
        new = []
        for s in range(lo, hi + 1):
            excess = kernel_at(s) - int(predicted[s - lo])
            if excess < 0:
                raise RuntimeError(
                    "peeling produced negative excess at twist %d, weight %d; "
                    "the section matrix normalization is inconsistent" % (t, s)
                )
            if excess:
                new.append((s, t, excess))
                if s != width - s:
                    new.append((width - s, t, excess))
        gens.extend(new)
        total += sum(m for _, _, m in new)
        if total > r:
            raise RuntimeError("peeling found more than rank-many summands")
        if total == r:
            break
    else:
        raise RuntimeError(
            "peeling failed to reach %d summands within twist %d" % (r, t_limit)
        )
    summands = []
    for u, tau, mult in gens:
        summands.extend([(-tau, u, d + tau - u)] * mult)
    return summands


def _fast_kernel_fn(p, d, r):
    profiles = {}

    def kernel_fn(t):
        def kernel_at(s):
            if s <= d - r or s - t >= r:
                return 0
            lam1 = max(0, s - t)
            if s >= d:
                return r - lam1
            prof = profiles.get(s)
            if prof is None:
                prof = SuffixRankProfile(p, s + 1, d - s, r)
                profiles[s] = prof
            return (r - lam1) - prof.suffix_rank(lam1)

        return kernel_at

    return kernel_fn


def _direct_kernel_fn(p, d, r):
    def kernel_fn(t):
        table = kernel_weight_dims(p, d, r, t)

        def kernel_at(s):
            return table.get((s, d + t - s), 0)

        return kernel_at

    return kernel_fn


def _smallest_prime_above(n):
    q = max(2, n + 1)
    while not is_prime(q):
        q += 1
    return q


def _check_invariants(summands, d, r):
    assert len(summands) == r
    assert sum(i for i, _, _ in summands) == -r * (d - r + 1)
    assert all(u + v == d - i for i, u, v in summands)
    weights = sorted((u, v) for _, u, v in summands)
    assert weights == sorted((v, u) for _, u, v in summands)


def splitting_fdr(p, d, r, multidegree=False, method="fast"):
    """Splitting type of F^d_r in characteristic p (p = 0 or prime).

    Returns the sorted list of twists, or the :class:`EquivariantSplitting`
    when ``multidegree`` is true.  p = 0 is served by the smallest prime
    exceeding d: the splitting is constant for all p > d.
    """
    if not 1 <= r <= d:
        raise ValueError("need 1 <= r <= d")
    if p == 0:
        p = _smallest_prime_above(d)
    elif not is_prime(p):
        raise ValueError("characteristic must be 0 or prime")
    if method == "fast":
        kernel_fn = _fast_kernel_fn(p, d, r)
    elif method == "direct":
        kernel_fn = _direct_kernel_fn(p, d, r)
    else:
        raise ValueError("unknown method %r" % (method,))
    summands = _peel(p, d, r, kernel_fn)
    _check_invariants(summands, d, r)
    splitting = EquivariantSplitting(summands)
    return splitting if multidegree else splitting.degrees()


def splitting_pparts(p, m, k, multidegree=False, method="fast"):
    """Splitting type of the k-th order principal parts P^k(O(m)) on P^1.

    m >= k+1:  P^k(O(m)) = (F^m_{k+1})^v (x) L_{m,m}, so each summand
               L_{u,v}(i) of F^m_{k+1} becomes L_{m-u, m-v}(-i);
    -1 <= m <= k:  the defining extension splits and the answer is the
               explicit list O^{m+1} + O(-k-1)^{k-m}, equivariantly
               L_{i,m-i}(0) and L_{m+1+i, k-i}(-k-1);
    m <= -2:   P^k(O(m)) = F^{k-1-m}_{k+1} (x) L_{1+m,1+m}(-k-1), so each
               L_{u,v}(i) becomes L_{u+1+m, v+1+m}(i-k-1).
    """
    if k < 0:
        raise ValueError("jet order must be >= 0")
    if m >= k + 1:
        base = splitting_fdr(p, m, k + 1, multidegree=True, method=method)
        summands = [(-i, m - u, m - v) for i, u, v in base]
    elif m >= -1:
        summands = [(0, i, m - i) for i in range(m + 1)]
        summands += [(-k - 1, m + 1 + i, k - i) for i in range(k - m)]
    else:
        base = splitting_fdr(p, k - 1 - m, k + 1, multidegree=True, method=method)
        summands = [(i - k - 1, u + 1 + m, v + 1 + m) for i, u, v in base]
    splitting = EquivariantSplitting(summands)
    return splitting if multidegree else splitting.degrees()


def forget_equivariance(splitting):
    """Project an equivariant splitting to its plain twist multiset."""
    return splitting.degrees()
