"""Coboundaries and exact cohomology of complexes and their subcomplexes."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Set, Tuple

from sympy.polys.matrices import DomainMatrix

from src.errors import CollarError, InputError, SubspaceError
from src.linalg import exact
from src.utils.logging import get_logger
from src.utils.performance import measure_performance

from .cells import CellComplex, Cochain
from .subspace import GradedSubspace

logger = get_logger(__name__)


def coboundary(K: CellComplex, p: int) -> DomainMatrix:
    """The degree-p coboundary d_p : C^p -> C^{p+1} as an integer matrix."""
    K.check_degree(p, 0, K.dimension - 1)
    return K.d(p)


def apply_coboundary(K: CellComplex, cochain: Cochain) -> Cochain:
    cochain.validate(K)
    p = cochain.degree
    return Cochain(p + 1, exact.apply(K.d(p), cochain.coefficients))


def _subspace(K: CellComplex, S: Optional[GradedSubspace]) -> GradedSubspace:
    if S is None:
        return GradedSubspace.full(K)
    if S.complex is not K and S.complex != K:
        raise SubspaceError(f"{S.name} lives on {S.complex.name}, not {K.name}")
    S.require_closed()
    return S


def cocycle_basis(K: CellComplex, p: int, S: Optional[GradedSubspace] = None) -> DomainMatrix:
    """Basis of ker d_p ∩ S_p in cell coordinates."""
    K.check_degree(p)
    S = _subspace(K, S)
    B = S.basis(p)
    kernel = exact.nullspace_basis(exact.matmul(K.d(p), B))
    return exact.column_basis(exact.matmul(B, kernel))


def coboundary_spanning(K: CellComplex, p: int, S: Optional[GradedSubspace] = None) -> DomainMatrix:
    """d_{p-1} applied to the degree p-1 basis of S (columns may be dependent)."""
    S = _subspace(K, S)
    return exact.matmul(K.d(p - 1), S.basis(p - 1))


def coboundary_basis(K: CellComplex, p: int, S: Optional[GradedSubspace] = None) -> DomainMatrix:
    K.check_degree(p)
    return exact.column_basis(coboundary_spanning(K, p, S))


def cohomology_rank(K: CellComplex, p: int, S: Optional[GradedSubspace] = None) -> int:
    """dim(ker d_p ∩ S_p) − dim d_{p−1}(S_{p−1})."""
    K.check_degree(p)
    S = _subspace(K, S)
    B = S.basis(p)
    kernel_dim = B.shape[1] - exact.rank(exact.matmul(K.d(p), B))
    image_dim = exact.rank(exact.matmul(K.d(p - 1), S.basis(p - 1)))
    rank = kernel_dim - image_dim
    logger.debug(f"H^{p}({S.name}) = {rank} (cocycles {kernel_dim}, coboundaries {image_dim})")
    return rank


def cohomology_ranks(K: CellComplex, S: Optional[GradedSubspace] = None) -> List[int]:
    return [cohomology_rank(K, p, S) for p in range(K.dimension + 1)]


def betti_numbers(K: CellComplex) -> List[int]:
    return cohomology_ranks(K)


def euler_characteristic(K: CellComplex) -> int:
    return sum((-1) ** p * n for p, n in enumerate(K.counts()))


def cohomology_basis(K: CellComplex, p: int, S: Optional[GradedSubspace] = None) -> DomainMatrix:
    """Representative cocycles whose classes form a basis of H^p(S).

    Cocycles are appended after a coboundary basis and the pivot columns
    past the coboundary block are kept, so the choice is deterministic.
    """
    boundaries = coboundary_basis(K, p, S)
    cocycles = cocycle_basis(K, p, S)
    offset = boundaries.shape[1]
    pivots = exact.pivot_columns(exact.hstack([boundaries, cocycles], K.count(p)))
    keep = [c - offset for c in pivots if c >= offset]
    return exact.select_columns(cocycles, keep)


@dataclass(frozen=True)
class ClassCoordinates:
    """ω = Σ coordinates[k]·reps[k] + d(primitive)."""

    coordinates: Tuple[Fraction, ...]
    primitive: Cochain


def class_coordinates(K: CellComplex, p: int, reps: DomainMatrix, omega: Cochain,
                      S: Optional[GradedSubspace] = None) -> ClassCoordinates:
    """Express a cocycle in a cohomology basis, with a coboundary witness."""
    K.check_degree(p)
    if omega.degree != p:
        raise InputError(f"cochain has degree {omega.degree}, expected {p}")
    if not apply_coboundary(K, omega).is_zero():
        raise InputError(f"degree {p} cochain is not a cocycle")
    S = _subspace(K, S)
    spanning = exact.matmul(K.d(p - 1), S.basis(p - 1))
    solution = exact.solve(exact.hstack([reps, spanning], K.count(p)), omega.coefficients)
    if solution is None:
        raise SubspaceError(f"cocycle is not in the span of the given classes of {S.name}")
    r = reps.shape[1]
    coordinates = tuple(solution.get(k, Fraction(0)) for k in range(r))
    y = {k - r: v for k, v in solution.items() if k >= r}
    primitive = Cochain(p - 1, exact.apply(S.basis(p - 1), y)) if p > 0 else Cochain.zero(-1)
    return ClassCoordinates(coordinates=coordinates, primitive=primitive)


def coordinate_matrix(K: CellComplex, p: int, reps: DomainMatrix, images: DomainMatrix,
                      S: Optional[GradedSubspace] = None) -> DomainMatrix:
    """Columns of class coordinates for each cocycle column of ``images``."""
    S = _subspace(K, S)
    spanning = exact.matmul(K.d(p - 1), S.basis(p - 1))
    solutions, failed = exact.solve_many(exact.hstack([reps, spanning], K.count(p)), images)
    if failed is not None:
        raise SubspaceError(f"image column {failed} is not a cocycle of {S.name}")
    r = reps.shape[1]
    return exact.from_columns([{k: v for k, v in x.items() if k < r} for x in solutions], r)


def is_coboundary(K: CellComplex, omega: Cochain, S: Optional[GradedSubspace] = None) -> Optional[Cochain]:
    """A primitive α ∈ S with dα = ω, or None."""
    S = _subspace(K, S)
    p = omega.degree
    if p == 0:
        return None if not omega.is_zero() else Cochain.zero(-1)
    B = S.basis(p - 1)
    y = exact.solve(exact.matmul(K.d(p - 1), B), omega.coefficients)
    if y is None:
        return None
    return Cochain(p - 1, exact.apply(B, y))


def induced_inclusion_check(K: CellComplex, S: GradedSubspace, T: GradedSubspace, p: int) -> bool:
    """Every S-coboundary in degree p is a T-coboundary (S ⊆ T induces H(S) → H(T))."""
    S = _subspace(K, S)
    T = _subspace(K, T)
    _, failed = exact.solve_many(
        exact.matmul(K.d(p - 1), T.basis(p - 1)),
        exact.matmul(K.d(p - 1), S.basis(p - 1)),
    )
    return failed is None


def face_closure(K: CellComplex, cells: Iterable[Tuple[int, int]]) -> Set[Tuple[int, int]]:
    closed = set()
    stack = list(cells)
    while stack:
        p, i = stack.pop()
        if (p, i) in closed:
            continue
        closed.add((p, i))
        if p > 0:
            stack.extend((p - 1, f) for f, _ in K.faces(p, i))
    return closed


@measure_performance("complex.compact_support_subspace")
def compact_support_subspace(K: CellComplex, boundary_cells: Iterable[Tuple[int, int]],
                             name: Optional[str] = None) -> GradedSubspace:
    """Cochains vanishing on a face-closed collar of (degree, id) cells."""
    collar = set()
    for p, i in boundary_cells:
        K.check_degree(p, what="collar cell degree")
        if not 0 <= i < K.count(p):
            raise CollarError(f"collar cell ({p}, {i}) does not exist")
        collar.add((p, i))
    for p, i in sorted(collar):
        if p == 0:
            continue
        missing = [f for f, _ in K.faces(p, i) if (p - 1, f) not in collar]
        if missing:
            raise CollarError(
                f"collar is not closed under faces: {K.cells[p][i].label} is marked "
                f"but its face {K.cells[p - 1][missing[0]].label} is not"
            )
    interior = [
        (p, i)
        for p in range(K.dimension + 1)
        for i in range(K.count(p))
        if (p, i) not in collar
    ]
    S = GradedSubspace.supported_on(K, interior, name=name or f"{K.name}/compact")
    if not S.closed:
        raise SubspaceError(f"{S.name}: compact support subspace is not closed under d")
    return S
