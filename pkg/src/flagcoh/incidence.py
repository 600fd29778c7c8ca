"""Cohomology characters of line bundles on the incidence correspondence.

X is the variety of pairs (point, hyperplane through it) in the projective
space of k^n and its dual; it has dimension 2n-3, and its line bundles
O_X(a,b) are restricted from the product of the two projective spaces.
``incidence_cohomology(i, p, a, b, n)`` returns the character (a Laurent
polynomial: the hyperplane side contributes inverse weights) of
H^i(X, O_X(a,b)) over a field of characteristic p.

The computation is a five-way case split on (a, b):

1. a, b >= 0: only H^0 is nonzero, with character
   h_a * h_b^v - h_{a-1} * h_{b-1}^v  (v denotes inverting the variables);
2. 2-n <= a <= -1 or 2-n <= b <= -1: everything vanishes;
3. a >= 0, b <= 1-n: H^i = H^{i-n+2}(D^d R(e)) * z_1...z_n with
   d = 1-n-b, e = a-1, nonzero only for i in {n-2, n-1};
4. a <= 1-n, b >= 0: swap duality  h^i(a,b) = h^i(b,a)^v;
5. a, b <= 1-n: Serre duality with canonical bundle O_X(1-n, 1-n):
   h^i(a,b) = h^{2n-3-i}(1-n-a, 1-n-b)^v, landing in case 1.

Case 5 is dispatched before case 4 when both apply, so results are
deterministic.
"""

from __future__ import annotations

from .charring import CharacterPoly, complete_h, dimension_of, dualize
from .divided import divided_cohomology
from .exactla import is_prime

__all__ = ["incidence_cohomology", "incidence_dimension"]


def _validate(i, p, a, b, n):
    if n < 2:
        raise ValueError("dimension parameter must be >= 2")
    if not 0 <= i <= 2 * n - 3:
        raise ValueError("cohomological degree out of range [0, %d]" % (2 * n - 3))
    if p != 0 and not is_prime(p):
        raise ValueError("characteristic must be 0 or prime")


def incidence_cohomology(i, p, a, b, n, method="recursive"):
    """Laurent character of H^i(X, O_X(a,b)) in characteristic p."""
    _validate(i, p, a, b, n)
    zero = CharacterPoly.zero(n, laurent=True)
    if a >= 0 and b >= 0:
        if i != 0:
            return zero
        sections = complete_h(n, a) * dualize(complete_h(n, b)) - complete_h(
            n, a - 1
        ) * dualize(complete_h(n, b - 1))
        return CharacterPoly(n, sections.terms, laurent=True)
    if (2 - n <= a <= -1) or (2 - n <= b <= -1):
        return zero
    if a <= 1 - n and b <= 1 - n:
        return dualize(
            incidence_cohomology(2 * n - 3 - i, p, 1 - n - a, 1 - n - b, n, method)
        )
    if a >= 0 and b <= 1 - n:
        if i not in (n - 2, n - 1):
            return zero
        f = divided_cohomology(i - n + 2, p, 1 - n - b, a - 1, n, method=method)
        ones = CharacterPoly.monomial(n, (1,) * n, laurent=True)
        return f * ones
    # a <= 1-n, b >= 0: swap duality into case 3.
    return dualize(incidence_cohomology(i, p, b, a, n, method))


def incidence_dimension(i, p, a, b, n, method="recursive"):
    return dimension_of(incidence_cohomology(i, p, a, b, n, method))
