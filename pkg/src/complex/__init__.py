"""Cell complexes, cochains, subcomplexes and exact cohomology."""

from .cells import Cell, CellComplex, Cochain, build_complex, apply_map, columns_as_cochains, cochains_matrix
from .subspace import GradedSubspace
from .cohomology import (
    coboundary,
    apply_coboundary,
    cocycle_basis,
    coboundary_basis,
    cohomology_rank,
    cohomology_ranks,
    cohomology_basis,
    class_coordinates,
    coordinate_matrix,
    is_coboundary,
    induced_inclusion_check,
    betti_numbers,
    euler_characteristic,
    face_closure,
    compact_support_subspace,
    ClassCoordinates,
)
from .sequence import ChainView, LinkMap, NodeCheck, LongExactSequence, long_exact_sequence
from .library import (
    simplicial_complex,
    polygon,
    hexagon,
    triangle,
    path_graph,
    octahedron,
    two_points,
    single_edge,
    disjoint_union,
    two_circles,
    cubical_grid,
    cubical_torus,
    cubical_circle,
    bundled_complex,
    BUNDLED_COMPLEXES,
)
from .formats import ComplexDocument, load_complex

__all__ = [
    "Cell",
    "CellComplex",
    "Cochain",
    "build_complex",
    "apply_map",
    "columns_as_cochains",
    "cochains_matrix",
    "GradedSubspace",
    "coboundary",
    "apply_coboundary",
    "cocycle_basis",
    "coboundary_basis",
    "cohomology_rank",
    "cohomology_ranks",
    "cohomology_basis",
    "class_coordinates",
    "coordinate_matrix",
    "is_coboundary",
    "induced_inclusion_check",
    "betti_numbers",
    "euler_characteristic",
    "face_closure",
    "compact_support_subspace",
    "ClassCoordinates",
    "ChainView",
    "LinkMap",
    "NodeCheck",
    "LongExactSequence",
    "long_exact_sequence",
    "simplicial_complex",
    "polygon",
    "hexagon",
    "triangle",
    "path_graph",
    "octahedron",
    "two_points",
    "single_edge",
    "disjoint_union",
    "two_circles",
    "cubical_grid",
    "cubical_torus",
    "cubical_circle",
    "bundled_complex",
    "BUNDLED_COMPLEXES",
    "ComplexDocument",
    "load_complex",
]
