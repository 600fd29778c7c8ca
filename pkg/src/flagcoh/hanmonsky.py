"""Multiplication in the graded Han-Monsky representation ring.

The graded Han-Monsky ring is the Grothendieck ring of finite-length graded
k[T]-modules with the twisted tensor product T(m (x) n) = Tm (x) n + m (x) Tn.
Its indecomposables are the shifted cyclic modules delta_c(-j) =
k[T]/(T^c) generated in degree j; a general element is stored as an
:class:`HMElement`, a multiset of (length, shift) pairs.

Pairwise products delta_a * delta_b = sum_j delta_{c_j(a,b)}(-j) are
computed two ways:

* ``method="conjecture"`` -- a recursive description of c_j(a,b) in
  characteristic p (exact closed form a+b-2j-1 when p = 0 or p > a+b-1).
  The recursion is conjectural; if it ever steps outside its own domain a
  :class:`ConjectureDomainError` is raised, and ``hm_product`` falls back
  to the oracle for that pair while recording the event.
* ``method="oracle"`` -- ranks of powers of T on the graded module
  k[T_1]/(T_1^a) (x) k[T_2]/(T_2^b) recover the block decomposition
  directly.  For pairs the graded pieces of T^k are windowed binomial
  matrices, handled by :mod:`flagcoh.bandrank`; longer lists use explicit
  iterated images.

>>> hm_product(3, [4, 6]).blocks
{3: {3: 1}, 6: {1: 1, 2: 1}, 9: {0: 1}}
"""

from __future__ import annotations

import logging
from functools import lru_cache

import numpy as np

from . import guards
from .bandrank import band_rank
from .exactla import is_prime, rank_mod_p

__all__ = [
    "HMElement",
    "ConjectureDomainError",
    "cj_conjectural",
    "delta_pair",
    "hm_product",
    "oracle_jordan",
    "jordan_type",
    "hilbert_series",
    "consume_fallback_events",
]

logger = logging.getLogger(__name__)

# Conjecture-domain fallbacks are collected here so callers (CLI, tests)
# can report them; see consume_fallback_events().
_fallback_events = []


class ConjectureDomainError(ValueError):
    """The conjectural recursion for c_j(a,b) left its own domain."""


class HMElement:
    """A multiset of graded cyclic-module classes delta_c(-j).

    ``blocks`` maps a block length c >= 1 to a map from shift j >= 0 to a
    positive multiplicity.  Serialization lists lengths ascending and
    shifts ascending.
    """

    __slots__ = ("blocks",)

    def __init__(self, blocks=None):
        clean = {}
        for c, shifts in (blocks or {}).items():
            row = {j: m for j, m in shifts.items() if m}
            if any(m < 0 for m in row.values()):
                raise ValueError("negative multiplicity")
            if row:
                clean[c] = dict(sorted(row.items()))
        self.blocks = dict(sorted(clean.items()))

    @classmethod
    def single(cls, c, j=0, mult=1):
        return cls({c: {j: mult}})

    def items(self):
        """Iterate (length, shift, multiplicity) triples."""
        for c, shifts in self.blocks.items():
            for j, m in shifts.items():
                yield c, j, m

    def shifted(self, extra):
        return HMElement(
            {c: {j + extra: m for j, m in shifts.items()} for c, shifts in self.blocks.items()}
        )

    def part_count(self):
        """Number of summands counted with multiplicity (the number of
        parts of the Jordan type)."""
        return sum(m for _, _, m in self.items())

    def total_dimension(self):
        return sum(c * m for c, _, m in self.items())

    def to_json_dict(self):
        return {
            "blocks": [
                {"length": c, "shifts": {str(j): m for j, m in shifts.items()}}
                for c, shifts in self.blocks.items()
            ]
        }

    def __eq__(self, other):
        return isinstance(other, HMElement) and self.blocks == other.blocks

    def __repr__(self):
        return "HMElement(%r)" % (self.blocks,)


def _add_block(blocks, c, j, mult):
    row = blocks.setdefault(c, {})
    row[j] = row.get(j, 0) + mult


@lru_cache(maxsize=None)
def cj_conjectural(p, a, b, j):
    """The length c_j(a,b) of the j-th block of delta_a * delta_b in
    characteristic p, by the conjectural recursion.

    Arguments are sorted by commutativity first; requires 0 <= j < min(a,b).
    Raises :class:`ConjectureDomainError` if a recursive step produces
    arguments outside the domain.
    """
    if a > b:
        a, b = b, a
    if not (1 <= a and 0 <= j < a):
        raise ConjectureDomainError(
            "c_j outside domain: p=%r a=%r b=%r j=%r" % (p, a, b, j)
        )
    if a == 1:
        return b
    if p == 0 or p > a + b - 1:
        return a + b - 2 * j - 1
    if not is_prime(p):
        raise ValueError("characteristic must be 0 or prime")
    q = p
    while q < a:
        q *= p
    qp = q // p  # q' = p^{e-1} < a <= q = p^e
    r = (a + b - 1 - j) // q
    if b - j <= r * q:
        return r * q
    m = a // qp
    ap = a - m * qp
    i = j // qp
    if j <= i * qp + ap - 1:
        return cj_conjectural(p, ap, b + (m - 2 * i) * qp, j - i * qp)
    return cj_conjectural(p, qp - ap, b + (m - 1 - 2 * i) * qp, j - i * qp - ap)


def delta_pair(p, a, b, method="conjecture"):
    """The product delta_a * delta_b as an HMElement."""
    if a < 1 or b < 1:
        raise ValueError("block lengths must be >= 1")
    if a > b:
        a, b = b, a
    if method == "conjecture":
        blocks = {}
        for j in range(a):
            _add_block(blocks, cj_conjectural(p, a, b, j), j, 1)
        return HMElement(blocks)
    if method == "oracle":
        return oracle_jordan(p, (a, b))
    raise ValueError("unknown method %r" % (method,))


def hm_product(p, lengths, method="conjecture"):
    """The product delta_{a_1} ... delta_{a_n}, folded pairwise left to
    right; shifts compose additively.

    In conjecture mode a :class:`ConjectureDomainError` in some pair
    triggers a logged oracle fallback for that pair instead of aborting;
    the instances are recorded for ``consume_fallback_events``.
    """
    lengths = list(lengths)
    if not lengths:
        raise ValueError("empty length list")
    if any(a < 1 for a in lengths):
        raise ValueError("block lengths must be >= 1")
    acc = HMElement.single(lengths[0])
    for b in lengths[1:]:
        blocks = {}
        for c, j, mult in acc.items():
            try:
                pair = delta_pair(p, c, b, method)
            except ConjectureDomainError as err:
                _fallback_events.append((p, c, b, str(err)))
                logger.warning(
                    "conjecture domain error for delta_%d*delta_%d at p=%d; "
                    "falling back to the rank oracle",
                    c,
                    b,
                    p,
                )
                pair = delta_pair(p, c, b, "oracle")
            for c2, j2, m2 in pair.items():
                _add_block(blocks, c2, j + j2, mult * m2)
        acc = HMElement(blocks)
    return acc


def consume_fallback_events():
    """Return and clear the recorded conjecture-domain fallbacks."""
    events = list(_fallback_events)
    _fallback_events.clear()
    return events


# -- the rank oracle ---------------------------------------------------------


def _oracle_guard(lengths):
    total = 1
    for a in lengths:
        total *= a
    budget = guards.size_budget()
    limit = budget if budget is not None else guards.DEFAULT_MODULE_GUARD
    if total > limit:
        raise guards.SizeGuardExceeded(
            "module dimension %d exceeds the oracle size guard %d" % (total, limit)
        )


def _jordan_from_ranks(R, dims, top):
    """Recover block multiplicities from the rank table.

    R[(j, k)] is the rank of T^k : M_j -> M_{j+k} (k >= 1), dims[j] the
    graded dimensions.  A block delta_c(-j0) contributes to R[(j, k)]
    exactly when j0 <= j and j0 >= j+k-c+1, whence the multiplicity of
    delta_c(-j) is R_{c-1}(j) - R_c(j) - R_c(j-1) + R_{c+1}(j-1) with
    R_0(j) = dims[j].
    """

    def rk(j, k):
        if j < 0 or j > top:
            return 0
        if k == 0:
            return dims[j]
        return R.get((j, k), 0)

    blocks = {}
    for j in range(top + 1):
        cmax = top - j + 1
        for c in range(1, cmax + 1):
            mult = rk(j, c - 1) - rk(j, c) - rk(j - 1, c) + rk(j - 1, c + 1)
            if mult < 0:
                raise RuntimeError("inconsistent rank table at j=%d c=%d" % (j, c))
            if mult:
                _add_block(blocks, c, j, mult)
    return HMElement(blocks)


def _pair_window(j, a, b):
    """Index window of the degree-j monomials x^{j-t} y^t in
    k[x,y]/(x^a, y^b): t in [max(0, j-a+1), min(j, b-1)]."""
    return max(0, j - a + 1), min(j, b - 1)


def _oracle_pair(p, a, b):
    top = a + b - 2
    dims = [0] * (top + 1)
    for j in range(top + 1):
        lo, hi = _pair_window(j, a, b)
        dims[j] = hi - lo + 1
    R = {}
    for j in range(top + 1):
        rlo, rhi = _pair_window(j, a, b)
        for k in range(1, top - j + 1):
            clo, chi = _pair_window(j + k, a, b)
            # The matrix of T^k has entries C(k, t'-t); transposing makes
            # the domain window the reading rows of the band convention.
            rank = band_rank(p, k, rlo, rhi, clo, chi)
            if rank == 0:
                break
            R[(j, k)] = rank
    return _jordan_from_ranks(R, dims, top)


def _oracle_general(p, lengths):
    # Explicit graded module: exponent vectors e < lengths componentwise.
    n = len(lengths)
    top = sum(lengths) - n
    by_degree = [[] for _ in range(top + 1)]

    def fill(prefix, degree):
        if len(prefix) == n:
            by_degree[degree].append(prefix)
            return
        for e in range(lengths[len(prefix)]):
            fill(prefix + (e,), degree + e)

    fill((), 0)
    index = [
        {mono: i for i, mono in enumerate(level)} for level in by_degree
    ]
    dims = [len(level) for level in by_degree]

    # Matrices of multiplication by T = T_1 + ... + T_n, degree j -> j+1.
    steps = []
    for j in range(top):
        m = np.zeros((dims[j + 1], dims[j]), dtype=np.int64)
        for ci, mono in enumerate(by_degree[j]):
            for t in range(n):
                if mono[t] + 1 < lengths[t]:
                    target = mono[:t] + (mono[t] + 1,) + mono[t + 1 :]
                    m[index[j + 1][target], ci] = 1
        steps.append(m)

    R = {}
    for j in range(top + 1):
        image = None  # row basis of the image of T^k restricted to M_j
        for k in range(1, top - j + 1):
            if image is None:
                image = steps[j].T % p
            else:
                image = (image @ steps[j + k - 1].T) % p
            rank = rank_mod_p(image, p)
            if rank == 0:
                break
            R[(j, k)] = rank
    return _jordan_from_ranks(R, dims, top)


def oracle_jordan(p, lengths):
    """Graded Jordan decomposition of T = T_1 + ... + T_n acting on
    k[T_1, ..., T_n]/(T_1^{a_1}, ..., T_n^{a_n}) over F_p, as an HMElement.

    This is the conjecture-free route: it only uses ranks of powers of T
    on the graded pieces.
    """
    if not is_prime(p):
        raise ValueError("the oracle requires a prime characteristic")
    lengths = tuple(lengths)
    if not lengths or any(a < 1 for a in lengths):
        raise ValueError("block lengths must be >= 1")
    _oracle_guard(lengths)
    if len(lengths) == 1:
        return HMElement.single(lengths[0])
    if len(lengths) == 2:
        a, b = sorted(lengths)
        return _oracle_pair(p, a, b)
    return _oracle_general(p, lengths)


# -- derived readings --------------------------------------------------------


def jordan_type(x):
    """Block lengths with multiplicity, sorted descending."""
    parts = []
    for c, _, m in x.items():
        parts.extend([c] * m)
    return sorted(parts, reverse=True)


def hilbert_series(x):
    """Graded dimension of the underlying module: the map degree -> dim,
    i.e. sum of mult * q^j (1 + q + ... + q^{c-1}) as a coefficient dict."""
    out = {}
    for c, j, m in x.items():
        for t in range(c):
            out[j + t] = out.get(j + t, 0) + m
    return {k: v for k, v in sorted(out.items()) if v}
