"""Orbits, Steinberg maps and finite type checks for double flag varieties of type AIII."""

from .ci import CiOrbit, complete_xi, enumerate_ci_orbits, is_symplectic, sigma
from .finiteness import (
    DimensionVector,
    JointTriple,
    ParabolicShape,
    classify_table,
    is_finite_bruteforce,
    is_finite_fast,
    is_finite_triple_flag_A,
    tits_form,
)
from .oracle import hom_dim, oracle_phi_k, oracle_phi_s
from .orbits import (
    Indecomposable,
    OrbitColumn,
    StackedPartialPermutation,
    closure_leq,
    dim_orbit,
    edge,
    enumerate_orbits,
    indec_decomposition,
    marked_minus,
    marked_plus,
    orbit,
    rank_matrix,
)
from .steinberg import GrsQuintuple, fiber, grs, grs_inverse, phi_k, phi_s
from .young import PartialBijection, SignedYoungDiagram, StandardTableau, plactic_product, rowinsert, rs

__version__ = "0.1.0"

__all__ = [
    "CiOrbit",
    "DimensionVector",
    "GrsQuintuple",
    "Indecomposable",
    "JointTriple",
    "OrbitColumn",
    "ParabolicShape",
    "PartialBijection",
    "SignedYoungDiagram",
    "StackedPartialPermutation",
    "StandardTableau",
    "classify_table",
    "closure_leq",
    "complete_xi",
    "dim_orbit",
    "edge",
    "enumerate_ci_orbits",
    "enumerate_orbits",
    "fiber",
    "grs",
    "grs_inverse",
    "hom_dim",
    "indec_decomposition",
    "is_finite_bruteforce",
    "is_finite_fast",
    "is_finite_triple_flag_A",
    "is_symplectic",
    "marked_minus",
    "marked_plus",
    "oracle_phi_k",
    "oracle_phi_s",
    "orbit",
    "phi_k",
    "phi_s",
    "plactic_product",
    "rank_matrix",
    "rowinsert",
    "rs",
    "sigma",
    "tits_form",
]
