"""Exact cohomology of GL_k-equivariant vector bundles on Grassmannians Gr(k, m)."""
from .bott import (
    CohomologyProfile,
    bott_cohomology,
    grassmannian_cohomology,
    rho,
    vanishing_threshold,
)
from .closed_forms import (
    SymmetryCheck,
    det_power_dim,
    pluecker_relations_dim,
    sym_det_dim,
    sym_dim,
    symmetry_check,
    tensor_det_dim,
)
from .errors import (
    BadRange,
    BBWError,
    MTooSmall,
    NegativeLowestEntry,
    NegativeTwistUnsupported,
    NotDominant,
    NotNegative,
    NotNonincreasing,
    TooLarge,
)
from .oracle import (
    bounded_shape_word_count,
    projective_cohomology,
    rsk_row_count,
    ssyt_count,
)
from .weights import (
    GeneralWeight,
    Partition,
    Weight,
    conjugate,
    extend_with_zeros,
    format_weight,
    hook_lengths,
    make_weight,
    parse_weight,
    partitions_of,
    syt_count,
    twist,
)
from .weyl import dimension_table, h0_dim, weyl_dim_full, weyl_product

__version__ = "0.1.0"
