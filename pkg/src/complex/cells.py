"""Cell complexes, cells and cochains."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from src.errors import ComplexError, DegreeError, InputError
from src.linalg import exact
from src.utils.logging import get_logger
from src.utils.performance import lazy_property

logger = get_logger(__name__)

ORIENTATIONS = ("simplicial", "cubical", "cellular")

# faces of one cell: ((face id, coefficient), ...)
Faces = Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class Cell:
    """One oriented cell; ``id`` is its position among cells of its degree."""

    id: int
    degree: int
    key: Hashable
    orientation: str = "cellular"

    @property
    def label(self) -> str:
        if self.orientation == "simplicial":
            return "[" + ",".join(str(v) for v in self.key) + "]"
        if self.orientation == "cubical":
            corner, axes = self.key
            return f"{tuple(corner)}+{{{','.join(str(a) for a in axes)}}}"
        return str(self.key)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "degree": self.degree,
            "label": self.label,
            "orientation": self.orientation,
        }


@dataclass(frozen=True)
class CellComplex:
    """Finite cell complex with integer incidence data.

    ``boundaries[p][j]`` lists the faces of the p-cell ``j`` with their
    incidence coefficients. The degree-p coboundary has entry
    ``d_p[j, i]`` equal to the coefficient of face ``i`` in cell ``j``.
    """

    name: str
    orientation: str
    cells: Tuple[Tuple[Cell, ...], ...]
    boundaries: Tuple[Tuple[Faces, ...], ...]

    def __post_init__(self):
        if self.orientation not in ORIENTATIONS:
            raise ComplexError(f"unknown orientation convention '{self.orientation}'")
        if not self.cells:
            raise ComplexError("complex has no cells")
        if len(self.boundaries) != len(self.cells):
            raise ComplexError("boundary data must cover every degree")
        for p, cells in enumerate(self.cells):
            for position, cell in enumerate(cells):
                if cell.id != position or cell.degree != p:
                    raise ComplexError(
                        f"cell {cell.label} has id {cell.id} degree {cell.degree}, "
                        f"expected id {position} degree {p}"
                    )
            if len(self.boundaries[p]) != len(cells):
                raise ComplexError(f"degree {p}: boundary data for {len(self.boundaries[p])} of {len(cells)} cells")
            for j, faces in enumerate(self.boundaries[p]):
                if p == 0 and faces:
                    raise ComplexError(f"vertex {j} has faces")
                for i, coefficient in faces:
                    if not 0 <= i < len(self.cells[p - 1]):
                        raise ComplexError(f"degree {p} cell {j}: face id {i} out of range")
                    if not isinstance(coefficient, int) or coefficient == 0:
                        raise ComplexError(f"degree {p} cell {j}: bad coefficient {coefficient!r}")
                    if self.orientation != "cellular" and abs(coefficient) != 1:
                        raise ComplexError(
                            f"degree {p} cell {j}: coefficient {coefficient} outside {{-1, 0, 1}} "
                            f"for {self.orientation} orientation"
                        )
        self._check_square_zero()

    def _check_square_zero(self):
        for p in range(2, len(self.cells)):
            for j, faces in enumerate(self.boundaries[p]):
                total: Dict[int, int] = {}
                for i, a in faces:
                    for k, b in self.boundaries[p - 1][i]:
                        total[k] = total.get(k, 0) + a * b
                bad = [k for k, v in total.items() if v]
                if bad:
                    raise ComplexError(
                        f"d∘d ≠ 0: boundary of boundary of degree {p} cell {j} "
                        f"hits degree {p - 2} cell {bad[0]}"
                    )

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    @property
    def size(self) -> int:
        return sum(len(cells) for cells in self.cells)

    def count(self, p: int) -> int:
        if 0 <= p <= self.dimension:
            return len(self.cells[p])
        return 0

    def counts(self) -> List[int]:
        return [len(cells) for cells in self.cells]

    def check_degree(self, p: int, low: int = 0, high: Optional[int] = None, what: str = "degree"):
        high = self.dimension if high is None else high
        if not low <= p <= high:
            raise DegreeError(p, low, high, what)

    def faces(self, p: int, j: int) -> Faces:
        return self.boundaries[p][j]

    @lazy_property
    def cofaces(self) -> Tuple[Tuple[Tuple[int, ...], ...], ...]:
        """cofaces[p][i]: ids of (p+1)-cells having p-cell i as a face."""
        result: List[List[List[int]]] = [[[] for _ in cells] for cells in self.cells]
        for p in range(1, len(self.cells)):
            for j, faces in enumerate(self.boundaries[p]):
                for i, _ in faces:
                    result[p - 1][i].append(j)
        return tuple(tuple(tuple(c) for c in level) for level in result)

    @lazy_property
    def index(self) -> Tuple[Dict[Hashable, int], ...]:
        """Cell key -> id, per degree."""
        return tuple({cell.key: cell.id for cell in cells} for cells in self.cells)

    def d(self, p: int) -> DomainMatrix:
        """Coboundary C^p -> C^{p+1} for any p, zero-sized outside the complex."""
        return self._coboundaries[p + 1]

    @lazy_property
    def _coboundaries(self) -> Tuple[DomainMatrix, ...]:
        # position p+1 holds d_p, so d_{-1} and d_top are the empty ends
        mats = [exact.zeros(self.count(0), 0)]
        for p in range(self.dimension + 1):
            entries = {}
            if p < self.dimension:
                for j, faces in enumerate(self.boundaries[p + 1]):
                    for i, coefficient in faces:
                        entries[(j, i)] = entries.get((j, i), 0) + coefficient
            mats.append(exact.matrix((self.count(p + 1), self.count(p)), entries))
        return tuple(mats)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "orientation": self.orientation,
            "dimension": self.dimension,
            "cells": self.counts(),
        }


def build_complex(name: str, orientation: str, keys: Sequence[Sequence[Hashable]],
                  faces: Sequence[Sequence[Faces]]) -> CellComplex:
    """Assemble a CellComplex from per-degree cell keys and face lists."""
    cells = tuple(
        tuple(Cell(id=i, degree=p, key=key, orientation=orientation) for i, key in enumerate(level))
        for p, level in enumerate(keys)
    )
    boundaries = tuple(tuple(tuple(f) for f in level) for level in faces)
    complex_ = CellComplex(name=name, orientation=orientation, cells=cells, boundaries=boundaries)
    logger.debug(f"Built complex {name} with cells {complex_.counts()}")
    return complex_


@dataclass(frozen=True)
class Cochain:
    """Sparse rational cochain; ids missing from ``coefficients`` are zero."""

    degree: int
    coefficients: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for i, value in self.coefficients.items():
            value = Fraction(value)
            if value:
                cleaned[int(i)] = value
        object.__setattr__(self, "coefficients", dict(sorted(cleaned.items())))

    @classmethod
    def zero(cls, degree: int) -> "Cochain":
        return cls(degree, {})

    @classmethod
    def indicator(cls, degree: int, cell: int, value=1) -> "Cochain":
        return cls(degree, {cell: Fraction(value)})

    @classmethod
    def from_vector(cls, degree: int, vector: Mapping[int, Any]) -> "Cochain":
        return cls(degree, {i: exact.to_fraction(exact.to_qq(v)) for i, v in vector.items()})

    @classmethod
    def from_column(cls, degree: int, M: DomainMatrix, k: int) -> "Cochain":
        return cls(degree, exact.column(M, k))

    @classmethod
    def from_values(cls, degree: int, values: Sequence[Any]) -> "Cochain":
        return cls(degree, {i: Fraction(v) for i, v in enumerate(values)})

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, i: int) -> Fraction:
        return self.coefficients.get(i, Fraction(0))

    def _same_degree(self, other: "Cochain"):
        if other.degree != self.degree:
            raise DegreeError(other.degree, self.degree, self.degree, "cochain degree")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._same_degree(other)
        total = dict(self.coefficients)
        for i, v in other.coefficients.items():
            total[i] = total.get(i, Fraction(0)) + v
        return Cochain(self.degree, total)

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, {i: -v for i, v in self.coefficients.items()})

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scaled(self, factor) -> "Cochain":
        factor = Fraction(factor)
        return Cochain(self.degree, {i: factor * v for i, v in self.coefficients.items()})

    def validate(self, K: CellComplex) -> "Cochain":
        K.check_degree(self.degree, what="cochain degree")
        n = K.count(self.degree)
        bad = [i for i in self.coefficients if not 0 <= i < n]
        if bad:
            raise InputError(f"cochain references degree-{self.degree} cell {bad[0]}, complex has {n}")
        return self

    def column(self, K: CellComplex) -> DomainMatrix:
        self.validate(K)
        return exact.from_columns([self.coefficients], K.count(self.degree))

    def to_values(self, K: CellComplex) -> List[Fraction]:
        return [self[i] for i in range(K.count(self.degree))]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "coefficients": {str(i): str(v) for i, v in self.coefficients.items()},
        }


def apply_map(M: DomainMatrix, cochain: Cochain, degree: int) -> Cochain:
    """Image of a cochain under a matrix, tagged with the target degree."""
    return Cochain(degree, exact.apply(M, cochain.coefficients))


def columns_as_cochains(M: DomainMatrix, degree: int) -> List[Cochain]:
    return [Cochain.from_column(degree, M, k) for k in range(M.shape[1])]


def cochains_matrix(cochains: Iterable[Cochain], nrows: int) -> DomainMatrix:
    return exact.from_columns([c.coefficients for c in cochains], nrows)
