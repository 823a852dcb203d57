"""Degree-indexed subspaces of the cochain spaces of a complex."""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from src.errors import SubspaceError
from src.linalg import exact
from src.utils.logging import get_logger

from .cells import CellComplex, Cochain, columns_as_cochains

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class GradedSubspace:
    """Per-degree bases (independent columns) plus the d-closure flag."""

    complex: CellComplex
    bases: Tuple[DomainMatrix, ...]
    closed: bool
    name: str = "subspace"

    def __post_init__(self):
        K = self.complex
        if len(self.bases) != K.dimension + 1:
            raise SubspaceError(f"{self.name}: need a basis for each of {K.dimension + 1} degrees")
        for p, basis in enumerate(self.bases):
            if basis.shape[0] != K.count(p):
                raise SubspaceError(
                    f"{self.name}: degree {p} basis has {basis.shape[0]} rows, expected {K.count(p)}"
                )

    @classmethod
    def from_spanning(cls, K: CellComplex, spans: Sequence[DomainMatrix], name: str = "subspace") -> "GradedSubspace":
        """Reduce spanning sets to bases and detect closure under d."""
        bases = tuple(exact.column_basis(span) for span in spans)
        closed = all(
            exact.in_span(bases[p + 1], exact.matmul(K.d(p), bases[p]))
            for p in range(K.dimension)
        )
        logger.debug(f"{name}: dims {[b.shape[1] for b in bases]}, closed={closed}")
        return cls(complex=K, bases=bases, closed=closed, name=name)

    @classmethod
    def full(cls, K: CellComplex, name: Optional[str] = None) -> "GradedSubspace":
        bases = tuple(exact.identity(K.count(p)) for p in range(K.dimension + 1))
        return cls(complex=K, bases=bases, closed=True, name=name or K.name)

    @classmethod
    def zero(cls, K: CellComplex, name: str = "zero") -> "GradedSubspace":
        bases = tuple(exact.zeros(K.count(p), 0) for p in range(K.dimension + 1))
        return cls(complex=K, bases=bases, closed=True, name=name)

    @classmethod
    def supported_on(cls, K: CellComplex, cells: Iterable[Tuple[int, int]], name: str = "supported") -> "GradedSubspace":
        """Cochains supported on the given (degree, id) cells."""
        keep: Dict[int, List[int]] = {p: [] for p in range(K.dimension + 1)}
        for p, i in sorted(set(cells)):
            keep[p].append(i)
        spans = [
            exact.from_columns([{i: 1} for i in keep[p]], K.count(p))
            for p in range(K.dimension + 1)
        ]
        return cls.from_spanning(K, spans, name=name)

    def dim(self, p: int) -> int:
        if not 0 <= p <= self.complex.dimension:
            return 0
        return self.bases[p].shape[1]

    def dims(self) -> List[int]:
        return [basis.shape[1] for basis in self.bases]

    def basis(self, p: int) -> DomainMatrix:
        """Basis matrix; empty outside the degree range of the complex."""
        if not 0 <= p <= self.complex.dimension:
            return exact.zeros(self.complex.count(p), 0)
        return self.bases[p]

    def generators(self, p: int) -> List[Cochain]:
        return columns_as_cochains(self.basis(p), p)

    def contains(self, cochain: Cochain) -> bool:
        return exact.in_span(self.basis(cochain.degree), cochain.column(self.complex))

    def is_within(self, other: "GradedSubspace") -> bool:
        if other.complex is not self.complex and other.complex != self.complex:
            return False
        return all(exact.in_span(other.bases[p], self.bases[p]) for p in range(len(self.bases)))

    def require_closed(self):
        if not self.closed:
            raise SubspaceError(f"{self.name} is not closed under the coboundary")

    def to_dict(self) -> Dict[str, object]:
        return {"name": self.name, "dims": self.dims(), "closed": self.closed}
