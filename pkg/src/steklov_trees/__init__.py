"""Steklov spectra of trees with leaf boundary.

Three independent routes to the first nonzero eigenvalue (Laplacian
Schur complement, leaf distance matrix, scalar root equations), the
classification of the maximizers of that eigenvalue among trees of fixed
order and odd diameter, and a brute-force enumeration harness that
certifies the classification at small orders.
"""

from .trees import (
    ASParams,
    DoubleSpiderProfile,
    SpiderProfile,
    Tree,
    canonical_code,
    count_trees,
    diameter,
    enumerate_trees,
    format_tree_text,
    leaf_set,
    make_as_tree,
    make_double_spider,
    make_path,
    make_spider,
    parse_tree,
    parse_tree_text,
    recognize_double_spider,
    recognize_spider,
    render_shorthand,
    tree_centers,
)
from .spectral import (
    BoundaryValues,
    Spectrum,
    dtn_matrix,
    harmonic_extension,
    jacobi_eigenvalues,
    lambda2_numeric,
    laplacian_matrix,
    steklov_spectrum,
)
from .flux import (
    BoundaryFlux,
    CutDecomposition,
    cut_sums,
    flux_potential,
    lambda2_via_distance,
    leaf_distance_matrix,
    q_form,
)
from .roots import (
    RootResult,
    ThresholdData,
    double_spider_maximizer,
    double_spider_rho,
    q_range_continuous,
    q_range_integer,
    sigma_rM,
    spider_lambda2,
    threshold_data,
)
from .classify import (
    CandidateComparison,
    CandidatePair,
    ClassificationResult,
    candidate_profiles,
    classify,
    compare_candidates,
)
from .reduce import (
    arm_transfer,
    balance_main_step,
    balance_side_step,
    dominating_double_spider,
    greedy_ascent,
    greedy_ascent_trace,
)
from .verify import (
    CrossMethodReport,
    DominationReport,
    UnimodalityReport,
    VerificationReport,
    brute_force_extremizers,
    verify_classification,
    verify_cross_methods,
    verify_domination,
    verify_unimodality,
)

__all__ = [
    "ASParams",
    "BoundaryFlux",
    "BoundaryValues",
    "CandidateComparison",
    "CandidatePair",
    "ClassificationResult",
    "CrossMethodReport",
    "CutDecomposition",
    "DominationReport",
    "DoubleSpiderProfile",
    "RootResult",
    "Spectrum",
    "SpiderProfile",
    "ThresholdData",
    "Tree",
    "UnimodalityReport",
    "VerificationReport",
    "arm_transfer",
    "balance_main_step",
    "balance_side_step",
    "brute_force_extremizers",
    "candidate_profiles",
    "canonical_code",
    "classify",
    "compare_candidates",
    "count_trees",
    "cut_sums",
    "diameter",
    "dominating_double_spider",
    "double_spider_maximizer",
    "double_spider_rho",
    "dtn_matrix",
    "enumerate_trees",
    "flux_potential",
    "format_tree_text",
    "greedy_ascent",
    "greedy_ascent_trace",
    "harmonic_extension",
    "jacobi_eigenvalues",
    "lambda2_numeric",
    "lambda2_via_distance",
    "laplacian_matrix",
    "leaf_distance_matrix",
    "leaf_set",
    "make_as_tree",
    "make_double_spider",
    "make_path",
    "make_spider",
    "parse_tree",
    "parse_tree_text",
    "q_form",
    "q_range_continuous",
    "q_range_integer",
    "recognize_double_spider",
    "recognize_spider",
    "render_shorthand",
    "sigma_rM",
    "spider_lambda2",
    "steklov_spectrum",
    "threshold_data",
    "tree_centers",
    "verify_classification",
    "verify_cross_methods",
    "verify_domination",
    "verify_unimodality",
]
