"""Exact certification of few-distance bounds on rational point sets."""

from fewdist.clp import (
    Certificate,
    Check,
    DistanceProductPoly,
    SparsePairPoly,
    build_clp_matrix,
    certify_bbs,
    check_inertia_bound,
    check_rank_bound,
    distance_product_poly,
    eval_pair,
    key_observation_check,
    minor_vanishing_check,
)
from fewdist.generators import cross_polytope, hypercube, johnson, simplex_standard
from fewdist.geometry import (
    DistanceSpectrum,
    PointSet,
    bbs_bound,
    distance_spectrum,
    squared_distance,
)
from fewdist.linalg import Inertia, Matrix, determinant, inertia, nullspace, rank
from fewdist.polyspace import (
    Monomial,
    dim_s,
    evaluation_matrix,
    monomials_up_to_degree,
    omega_basis,
)
from fewdist.search import SearchResult, exhaustive_oracle, max_s_distance_subset

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "Check",
    "DistanceProductPoly",
    "DistanceSpectrum",
    "Inertia",
    "Matrix",
    "Monomial",
    "PointSet",
    "SearchResult",
    "SparsePairPoly",
    "bbs_bound",
    "build_clp_matrix",
    "certify_bbs",
    "check_inertia_bound",
    "check_rank_bound",
    "cross_polytope",
    "determinant",
    "dim_s",
    "distance_product_poly",
    "distance_spectrum",
    "eval_pair",
    "evaluation_matrix",
    "exhaustive_oracle",
    "hypercube",
    "inertia",
    "johnson",
    "key_observation_check",
    "max_s_distance_subset",
    "minor_vanishing_check",
    "monomials_up_to_degree",
    "nullspace",
    "omega_basis",
    "rank",
    "simplex_standard",
    "squared_distance",
]
