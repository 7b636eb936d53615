"""Exact computation of dim W_0 H^1(X, Q) from combinatorial branch data."""

from .covers import CoveringSpec, compile, irreducibility_hint
from .exactlin import Permutation, QMatrix, kernel_basis, orbit_count
from .kunneth import CyclicAction, quotient_h1_dim
from .spectrum import bp_spectrum, unipotent_h1_dim
from .strata import Adjacency, StratifiedBranchData, Stratum, global_sections_dim
from .weights import CurveDualGraph, WeightReport, curve_w0_from_graph, full_pipeline

__version__ = "0.1.0"

__all__ = [
    "Adjacency",
    "CoveringSpec",
    "CurveDualGraph",
    "CyclicAction",
    "Permutation",
    "QMatrix",
    "StratifiedBranchData",
    "Stratum",
    "WeightReport",
    "bp_spectrum",
    "compile",
    "curve_w0_from_graph",
    "full_pipeline",
    "global_sections_dim",
    "irreducibility_hint",
    "kernel_basis",
    "orbit_count",
    "quotient_h1_dim",
    "unipotent_h1_dim",
]
