"""Exact rational matrices of edge-weighted trees.

Builds every matrix attached to a weighted tree (distance, squared
distance, Laplacian, incidence, edge orientation), evaluates the
closed-form determinant and inverse formulas for them, and differentially
tests each closed form against independent exact elimination kernels.
All arithmetic is exact rational; equality checks are bit-exact.
"""

from .closedforms import (
    DetDeltaResult,
    HypothesisViolation,
    InverseCertificate,
    Regime,
    beta,
    cof_delta_closed,
    det_d_closed,
    det_delta_closed,
    det_delta_unweighted,
    det_h_closed,
    eta_vector,
    inv_d_closed,
    inv_delta_closed,
    inv_h_closed,
    ones_inv_ones,
)
from .matrices import TreeMatrixBundle, build_bundle, build_edge_orientation, build_incidence
from .rational import (
    Rational,
    RationalMatrix,
    ShapeError,
    SingularMatrixError,
    as_rational,
    cofactor_sum,
    det,
    hadamard,
    inverse,
    mat_mul,
)
from .tree import (
    DegreeData,
    Orientation,
    OrientedEdge,
    TreeError,
    TreeParseError,
    WeightedTree,
    build_tree,
    degree_data,
    distances,
    format_tree_text,
    hop_distances,
    orientation_relation,
    parse_tree_file,
    parse_tree_text,
)
from .verify import (
    DEFAULT_WEIGHT_POOL,
    IDENTITY_IDS,
    IdentityReport,
    Status,
    TreeGenSpec,
    TreeShape,
    generate_tree,
    orientation_disagreements,
    polynomial_identity_check,
    run_identity_suite,
)

__version__ = "0.1.0"
