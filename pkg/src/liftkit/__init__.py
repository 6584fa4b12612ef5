"""Exact algebra of lifting factorizations for two-channel FIR filter banks."""

from .exceptions import LiftkitError, NotFactorableError, PreconditionError
from .laurent import W2, Z, LaurentPoly, Scalar, Symmetry, as_poly, as_scalar
from .polyphase import (
    HAAR,
    IDENTITY,
    LAZY_CAUSAL,
    FilterPair,
    PolyMatrix,
    from_filters,
    inverse,
    is_fir_pr,
    is_hs,
    is_unimodular,
    is_ws,
    matrix_order,
    matrix_support,
    to_filters,
)
from .lifting import (
    Cascade,
    LiftingStep,
    gain_conjugate,
    gain_conjugate_step,
    gain_matrix,
    invert_cascade,
    is_irreducible,
    lower_lift,
    nonuniqueness_witness,
    partial_products,
    product,
    reduce_to_irreducible,
    rescale,
    upper_lift,
)
from .structures import (
    ELASF,
    HS,
    HS_REVERSIBLE,
    WS,
    WS_REVERSIBLE,
    EquivalenceVerdict,
    GroupLiftingStructure,
    Verdict,
    cascade_in_structure,
    dc_normalized,
    equivalent_mod_rescaling,
    is_d_invariant,
    is_order_increasing,
    presets,
)
from .factorize import factor_gain, factor_generic, factor_in_structure, peel_step

__version__ = "0.1.0"

__all__ = [
    "LiftkitError",
    "NotFactorableError",
    "PreconditionError",
    "W2",
    "Z",
    "LaurentPoly",
    "Scalar",
    "Symmetry",
    "as_poly",
    "as_scalar",
    "HAAR",
    "IDENTITY",
    "LAZY_CAUSAL",
    "FilterPair",
    "PolyMatrix",
    "from_filters",
    "inverse",
    "is_fir_pr",
    "is_hs",
    "is_unimodular",
    "is_ws",
    "matrix_order",
    "matrix_support",
    "to_filters",
    "Cascade",
    "LiftingStep",
    "gain_conjugate",
    "gain_conjugate_step",
    "gain_matrix",
    "invert_cascade",
    "is_irreducible",
    "lower_lift",
    "nonuniqueness_witness",
    "partial_products",
    "product",
    "reduce_to_irreducible",
    "rescale",
    "upper_lift",
    "ELASF",
    "HS",
    "HS_REVERSIBLE",
    "WS",
    "WS_REVERSIBLE",
    "EquivalenceVerdict",
    "GroupLiftingStructure",
    "Verdict",
    "cascade_in_structure",
    "dc_normalized",
    "equivalent_mod_rescaling",
    "is_d_invariant",
    "is_order_increasing",
    "presets",
    "factor_gain",
    "factor_generic",
    "factor_in_structure",
    "peel_step",
]
