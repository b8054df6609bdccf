"""Exact arithmetic for twisted polynomials and twisted power series.

The coefficient field carries an endomorphism sigma and the variable obeys
``T a = sigma(a) T``.  The package provides the polynomial ring and its left
fraction field, truncated power series, rationality tests (determinant scan
and denominator guessing), sigma-linear representations with minimization and
similarity, syntactic annihilators, minimal fractions and the Hadamard
algebra, plus CLI and HTTP front ends.
"""

from .errors import OreSeriesError
from .fields import FieldCtx, FieldElement, apply_endo, make_context
from .linrep import (
    LinRep,
    SimilarityWitness,
    minimize,
    rep_coeff,
    rep_expand,
    rep_hadamard,
    rep_inverse,
    rep_product,
    rep_scale_left,
    rep_scale_right,
    rep_sum,
    similarity_witness,
    to_fraction,
)
from .ore_poly import (
    NEG_INF,
    OreFraction,
    OrePoly,
    frac_add,
    frac_degree,
    frac_inv,
    frac_mul,
    left_divmod,
    left_gcd,
    poly_mul,
    reciprocal,
    right_divmod,
    right_gcd,
)
from .rational import (
    CanonicalData,
    RationalityReport,
    RegularityEvidence,
    canonical_data,
    guess_left_denominator,
    is_regular,
    kronecker_test,
    minimal_left_fraction,
    minimal_polynomial,
    minimal_right_fraction,
    rank,
)
from .tseries import (
    Recurrence,
    TwistedSeries,
    expand_fraction,
    hadamard,
    module_action,
    recurrence_extend,
    series_inv,
    series_mul,
    shift,
)

__version__ = "0.1.0"
