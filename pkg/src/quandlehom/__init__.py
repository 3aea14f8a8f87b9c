"""Exact quandle homology and pseudo-cycle analysis of colored
surface-knot triple-point data."""

from .chains import (
    Chain,
    boundary_quandle,
    boundary_rack,
    is_degenerate,
    matrix_of_boundary,
    project_quandle,
    quandle_basis,
)
from .cocycles import (
    Cocycle3,
    CocycleCheck,
    is_quandle_3cocycle,
    mochizuki_theta,
    mochizuki_theta_p,
    pair,
)
from .homology import HomologyGroup, homology_group, is_null_homologous
from .intlinalg import IntMatrix, SmithDecomposition, det, snf, solve_in_image
from .pseudocycles import (
    PseudoCycleReport,
    TriplePoint,
    TriplePointDataset,
    chain_of,
    dataset_from_json,
    enumerate_pseudo_cycles,
    is_pseudo_cycle,
    max_disjoint_packing,
    pseudo_cycle_report,
)
from .quandle import Quandle

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "Cocycle3",
    "CocycleCheck",
    "HomologyGroup",
    "IntMatrix",
    "PseudoCycleReport",
    "Quandle",
    "SmithDecomposition",
    "TriplePoint",
    "TriplePointDataset",
    "boundary_quandle",
    "boundary_rack",
    "chain_of",
    "dataset_from_json",
    "det",
    "enumerate_pseudo_cycles",
    "homology_group",
    "is_degenerate",
    "is_null_homologous",
    "is_pseudo_cycle",
    "is_quandle_3cocycle",
    "matrix_of_boundary",
    "max_disjoint_packing",
    "mochizuki_theta",
    "mochizuki_theta_p",
    "pair",
    "project_quandle",
    "pseudo_cycle_report",
    "quandle_basis",
    "snf",
    "solve_in_image",
]
