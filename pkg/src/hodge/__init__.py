"""Inner products, codifferential, Laplacian and Hodge decompositions."""

from .inner_product import InnerProductSpace, WeightDocument, load_weights
from .decomposition import (
    codifferential,
    laplacian,
    adjointness_residual,
    HarmonicSpace,
    harmonic_space,
    HodgeDecomposition,
    hodge_decompose,
    decomposition_report,
    hodge_check,
)
from .equivariant import equivariant_hodge_check

__all__ = [
    "InnerProductSpace",
    "WeightDocument",
    "load_weights",
    "codifferential",
    "laplacian",
    "adjointness_residual",
    "HarmonicSpace",
    "harmonic_space",
    "HodgeDecomposition",
    "hodge_decompose",
    "decomposition_report",
    "hodge_check",
    "equivariant_hodge_check",
]
