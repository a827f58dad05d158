"""Exact deciders for affine and product-type holographic transformations.

The package decides, for finite sets of Boolean-domain constraint
functions, whether a holographic transformation carries them into the
affine or the product-type tractable family, with exact cyclotomic
arithmetic, verifiable witness transformations, and a brute-force Holant
evaluator for cross-checks.
"""

from .affine import (
    decide_A_transformable,
    is_affine,
    is_affine_alpha,
    is_so2_invariant,
    so2_candidates_affine,
    so2_candidates_affine_alpha,
)
from .decision import Decision
from .holant import SignatureGrid, eval_holant, fixtures, transform_grid, two_stretch
from .product import (
    decide_P_transformable,
    factor,
    in_transformed_product,
    is_generalized_equality,
    is_product_type,
    so2_candidates_product,
)
from .scalars import (
    AlgebraicScalar,
    Rational,
    ZeroStatus,
    decide_zero,
    field_arithmetic,
    is_power_of_i,
    kth_roots,
)
from .cyclotomic import CyclotomicScalar, cyclotomic_polynomial
from .signatures import (
    DenseSignature,
    SignatureSet,
    SymmetricSignature,
    Transform,
    apply_transform,
    compress,
    expand,
    hat_transform,
    is_degenerate,
    signature_matrix,
)
from .symmetric import (
    classify_affine,
    classify_product,
    construct_H_theta0,
    decide_A_transformable_sym,
    decide_P_transformable_sym,
    decompose,
    fit_recurrence,
    sym_in_affine,
    sym_in_product,
    theta,
)

__version__ = "0.1.0"
