"""Additive homology of polyhedral products over a field.

Given a simplicial complex K on vertices 1..m and, per vertex, the
homology of a pointed CW pair (X_i, A_i), this package computes exact
Hilbert-Poincare series of the polyhedral product Z(K;(X,A)) and the
smash polyhedral product, together with the wedge-summand decomposition
behind the smash series, and cross-checks everything against an
independent cellular chain-level oracle.
"""

from .cartan import (
    WedgeSummand,
    join_factor,
    product_series,
    smash_block_series,
    smash_series,
    summand,
    trivial_kernel_series,
    wedge_summands,
)
from .chains import (
    CellPair,
    ChainComplexOverField,
    catalog_pair,
    disk_circle,
    homology_series,
    pair_homology_from_cells,
    product_chain_complex,
    rp3_rp2,
    smash_chain_complex,
    sphere_pair,
    wedge_sphere_pair,
)
from .linalg import RATIONALS, Field, left_kernel_basis, matrix_rank
from .pairs import PairHomology, WedgeModel, model_from_series, wedge_model
from .series import GradedSeries, from_betti
from .simplicial import (
    DEFAULT_MAX_VERTICES,
    BettiVector,
    SimplicialComplex,
    new_complex,
)

__all__ = [
    "BettiVector",
    "CellPair",
    "ChainComplexOverField",
    "DEFAULT_MAX_VERTICES",
    "Field",
    "GradedSeries",
    "PairHomology",
    "RATIONALS",
    "SimplicialComplex",
    "WedgeModel",
    "WedgeSummand",
    "catalog_pair",
    "disk_circle",
    "from_betti",
    "homology_series",
    "join_factor",
    "left_kernel_basis",
    "matrix_rank",
    "model_from_series",
    "new_complex",
    "pair_homology_from_cells",
    "product_chain_complex",
    "product_series",
    "rp3_rp2",
    "smash_block_series",
    "smash_chain_complex",
    "smash_series",
    "sphere_pair",
    "summand",
    "trivial_kernel_series",
    "wedge_model",
    "wedge_sphere_pair",
    "wedge_summands",
]
