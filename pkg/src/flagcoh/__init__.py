"""Exact computations around line bundles on the incidence correspondence.

The package computes, over a field of any characteristic and in exact
integer arithmetic:

* characters and dimensions of the cohomology of twisted divided powers of
  the universal subsheaf on projective space (:mod:`flagcoh.divided`),
* cohomology of line bundles on the incidence correspondence
  (:mod:`flagcoh.incidence`),
* torus-equivariant splitting types of kernel bundles and principal parts
  on the projective line (:mod:`flagcoh.splitting`),
* products in the graded Han-Monsky representation ring
  (:mod:`flagcoh.hanmonsky`),
* weak and strong Lefschetz property tests (:mod:`flagcoh.lefschetz`).

Every fast algorithm is paired with an independent brute-force oracle, and
the two are held together across sizeable grids by the test suite.
"""

from .charring import (
    CharacterPoly,
    complete_h,
    dimension_of,
    dualize,
    frobenius_twist,
    nim_poly,
    schur_two_row,
    truncated_h,
    truncated_schur,
)
from .divided import (
    base_char_zero,
    divided_cohomology,
    euler_characteristic,
    nim_h1,
    oracle_divided,
    phi_factor,
)
from .hanmonsky import (
    HMElement,
    ConjectureDomainError,
    cj_conjectural,
    delta_pair,
    hilbert_series,
    hm_product,
    jordan_type,
    oracle_jordan,
)
from .incidence import incidence_cohomology, incidence_dimension
from .lefschetz import (
    DualGenerator,
    MonomialIdeal,
    has_slp_ci,
    has_wlp_ci,
    has_wlp_gorenstein,
    has_wlp_monomial,
    monomial_cis_without_wlp,
    sperner_number,
)
from .splitting import (
    EquivariantSplitting,
    forget_equivariance,
    kernel_weight_dims,
    splitting_fdr,
    splitting_pparts,
)

__version__ = "0.1.0"
