"""Periodic covers with a free ℤⁿ deck action, and finite windows into them.

A cover cell is a pair (quotient cell j, translation t ∈ ℤⁿ). The lift
data of a quotient p-cell j lists entries (face i, offset o, sign): the
boundary of the cover cell (j, t) contains sign·(i, t + o). Deck shifts
act by t ↦ t + g, so they commute with each other and with d by
construction, and act freely on cells of every degree.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Set, Tuple

from sympy.polys.matrices import DomainMatrix

from src.config import settings
from src.complex import CellComplex, Cochain, GradedSubspace, build_complex
from src.complex.cohomology import compact_support_subspace, face_closure
from src.errors import CollarError, ComplexError, SupportError, WindowTooSmallError
from src.linalg import exact
from src.utils.logging import get_logger
from src.utils.performance import lazy_property, measure_performance

logger = get_logger(__name__)

Translation = Tuple[int, ...]
# (face id, offset, sign)
LiftEntry = Tuple[int, Translation, int]
CoverCell = Tuple[int, Translation]


def shift(t: Translation, g: Translation, sign: int = 1) -> Translation:
    return tuple(a + sign * b for a, b in zip(t, g))


def norm(t: Translation) -> int:
    return max((abs(a) for a in t), default=0)


@dataclass(frozen=True, eq=False)
class PeriodicCover:
    """Quotient complex M/Γ plus the lift data of its cells to M."""

    name: str
    quotient: CellComplex
    deck_rank: int
    lifts: Tuple[Tuple[Tuple[LiftEntry, ...], ...], ...]
    quotient_collar: FrozenSet[Tuple[int, int]] = frozenset()
    contractible: bool = False
    family: str = "custom"
    description: str = ""

    def __post_init__(self):
        Q = self.quotient
        n = self.deck_rank
        if n < 1:
            raise ComplexError(f"{self.name}: deck rank must be at least 1")
        if len(self.lifts) != Q.dimension + 1:
            raise ComplexError(f"{self.name}: lift data needed for {Q.dimension + 1} degrees")
        for p, level in enumerate(self.lifts):
            if len(level) != Q.count(p):
                raise ComplexError(f"{self.name}: degree {p} lifts {len(level)} of {Q.count(p)} cells")
            for j, entries in enumerate(level):
                if p == 0 and entries:
                    raise ComplexError(f"{self.name}: vertex {j} has lifted faces")
                pushed: Dict[int, int] = {}
                for i, offset, sign in entries:
                    if len(offset) != n:
                        raise ComplexError(f"{self.name}: offset {offset} of cell {j} is not in ℤ^{n}")
                    if not 0 <= i < Q.count(p - 1) or sign not in (1, -1):
                        raise ComplexError(f"{self.name}: bad lift entry {(i, offset, sign)} of degree {p} cell {j}")
                    pushed[i] = pushed.get(i, 0) + sign
                pushed = {i: c for i, c in pushed.items() if c}
                if pushed != dict(Q.faces(p, j)):
                    raise ComplexError(
                        f"{self.name}: lifts of degree {p} cell {Q.cells[p][j].label} do not push down "
                        f"to its quotient boundary"
                    )
        for p in range(2, Q.dimension + 1):
            for j, entries in enumerate(self.lifts[p]):
                total: Dict[CoverCell, int] = {}
                for i, o, s in entries:
                    for k, o2, s2 in self.lifts[p - 1][i]:
                        key = (k, shift(o, o2))
                        total[key] = total.get(key, 0) + s * s2
                if any(total.values()):
                    raise ComplexError(f"{self.name}: d∘d ≠ 0 on the cover above degree {p} cell {j}")
        for p, i in self.quotient_collar:
            Q.check_degree(p, what="collar cell degree")
            if p > 0 and any((p - 1, f) not in self.quotient_collar for f, _ in Q.faces(p, i)):
                raise CollarError(f"{self.name}: quotient collar is not closed under faces")

    @property
    def dimension(self) -> int:
        return self.quotient.dimension

    @property
    def compact_quotient(self) -> bool:
        return not self.quotient_collar

    def cover_faces(self, p: int, j: int, t: Translation) -> Dict[CoverCell, int]:
        faces: Dict[CoverCell, int] = {}
        for i, o, s in self.lifts[p][j]:
            key = (i, shift(t, o))
            faces[key] = faces.get(key, 0) + s
        return {key: c for key, c in faces.items() if c}

    @lazy_property
    def colifts(self) -> Tuple[Tuple[Tuple[Tuple[int, Translation], ...], ...], ...]:
        """colifts[p][i]: (J, o) with (i, t) a face of the (p+1)-cell (J, t − o)."""
        result: List[List[List[Tuple[int, Translation]]]] = [[[] for _ in cells] for cells in self.quotient.cells]
        for p in range(1, self.dimension + 1):
            for J, entries in enumerate(self.lifts[p]):
                for i, o, _ in entries:
                    result[p - 1][i].append((J, o))
        return tuple(tuple(tuple(c) for c in level) for level in result)

    def cover_cofaces(self, p: int, i: int, t: Translation) -> List[CoverCell]:
        if p >= self.dimension:
            return []
        return [(J, shift(t, o, -1)) for J, o in self.colifts[p][i]]

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "quotient": self.quotient.to_dict(),
            "deck_rank": self.deck_rank,
            "family": self.family,
            "contractible": self.contractible,
            "quotient_collar": sorted(list(c) for c in self.quotient_collar),
        }


@dataclass(frozen=True)
class CoverCochain:
    """Finitely supported cochain on the cover, keyed by (quotient cell, translation)."""

    degree: int
    coefficients: Mapping[CoverCell, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        cleaned = {}
        for (j, t), value in self.coefficients.items():
            value = Fraction(value)
            if value:
                cleaned[(int(j), tuple(t))] = value
        object.__setattr__(self, "coefficients", dict(sorted(cleaned.items(), key=lambda kv: (kv[0][1], kv[0][0]))))

    @classmethod
    def zero(cls, degree: int) -> "CoverCochain":
        return cls(degree, {})

    @classmethod
    def indicator(cls, degree: int, cell: int, t: Translation, value=1) -> "CoverCochain":
        return cls(degree, {(cell, tuple(t)): value})

    @property
    def support(self) -> List[CoverCell]:
        return list(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, key: CoverCell) -> Fraction:
        return self.coefficients.get(key, Fraction(0))

    def __add__(self, other: "CoverCochain") -> "CoverCochain":
        if other.degree != self.degree:
            raise SupportError(f"cannot add degree {self.degree} and {other.degree} cover cochains")
        total = dict(self.coefficients)
        for key, v in other.coefficients.items():
            total[key] = total.get(key, Fraction(0)) + v
        return CoverCochain(self.degree, total)

    def __neg__(self) -> "CoverCochain":
        return CoverCochain(self.degree, {k: -v for k, v in self.coefficients.items()})

    def __sub__(self, other: "CoverCochain") -> "CoverCochain":
        return self + (-other)

    def scaled(self, factor) -> "CoverCochain":
        factor = Fraction(factor)
        return CoverCochain(self.degree, {k: factor * v for k, v in self.coefficients.items()})

    def translated(self, g: Translation) -> "CoverCochain":
        """The deck translate: (τ_g ω)(j, t) = ω(j, t − g)."""
        return CoverCochain(self.degree, {(j, shift(t, g)): v for (j, t), v in self.coefficients.items()})

    def radius(self) -> int:
        return max((norm(t) for _, t in self.coefficients), default=0)

    def to_dict(self) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "coefficients": {f"{j}@{list(t)}": str(v) for (j, t), v in self.coefficients.items()},
        }


def translations(n: int, radius: int) -> List[Translation]:
    return sorted(product(range(-radius, radius + 1), repeat=n))


@dataclass(frozen=True, eq=False)
class Window:
    """Cover cells with translation in [−R, R]ⁿ, closed under faces.

    The collar holds every window cell that is a face of a cover cell
    outside the window, the lifts of the quotient collar, and the faces
    of both. Cochains vanishing on the collar are the compactly supported
    ones.
    """

    cover: PeriodicCover
    radius: int
    complex: CellComplex
    collar: FrozenSet[Tuple[int, int]]
    _cache: Dict[object, object] = field(default_factory=dict, repr=False)

    def cell_id(self, p: int, j: int, t: Translation) -> Optional[int]:
        return self.complex.index[p].get((j, tuple(t)))

    def cell(self, p: int, i: int) -> CoverCell:
        return self.complex.cells[p][i].key

    def is_interior(self, p: int, j: int, t: Translation) -> bool:
        i = self.cell_id(p, j, t)
        return i is not None and (p, i) not in self.collar

    def interior(self, p: int) -> List[int]:
        return [i for i in range(self.complex.count(p)) if (p, i) not in self.collar]

    def compact_subspace(self) -> GradedSubspace:
        if "compact" not in self._cache:
            self._cache["compact"] = compact_support_subspace(
                self.complex, self.collar, name=f"compact({self.cover.name}, R={self.radius})"
            )
        return self._cache["compact"]

    def pushdown_matrix(self, p: int) -> DomainMatrix:
        """P_p: window p-cochains -> quotient p-cochains, summing over translates."""
        key = ("pushdown", p)
        if key not in self._cache:
            n = self.complex.count(p)
            entries = {(self.cell(p, i)[0], i): 1 for i in range(n)}
            self._cache[key] = exact.matrix((self.cover.quotient.count(p), n), entries)
        return self._cache[key]

    def coinvariant_spanning(self, p: int) -> DomainMatrix:
        """Columns e_(j,t) − e_(j,t+e_k) with both cells interior."""
        n = self.complex.count(p)
        cols = []
        for i in self.interior(p):
            j, t = self.cell(p, i)
            for k in range(self.cover.deck_rank):
                step = tuple(1 if a == k else 0 for a in range(self.cover.deck_rank))
                other = self.cell_id(p, j, shift(t, step))
                if other is not None and (p, other) not in self.collar:
                    cols.append({i: Fraction(1), other: Fraction(-1)})
        return exact.from_columns(cols, n)

    def coinvariant_subspace(self) -> GradedSubspace:
        if "coinvariant" not in self._cache:
            spans = [self.coinvariant_spanning(p) for p in range(self.complex.dimension + 1)]
            self._cache["coinvariant"] = GradedSubspace.from_spanning(
                self.complex, spans, name=f"coinvariant({self.cover.name}, R={self.radius})"
            )
        return self._cache["coinvariant"]

    def kernel_of_average(self, p: int) -> DomainMatrix:
        """ker P_p restricted to cochains supported on interior cells."""
        interior = self.interior(p)
        support = exact.from_columns([{i: Fraction(1)} for i in interior], self.complex.count(p))
        kernel = exact.nullspace_basis(exact.matmul(self.pushdown_matrix(p), support))
        return exact.matmul(support, kernel)

    def coinvariants_match_kernel(self, p: int) -> bool:
        span = self.coinvariant_subspace().basis(p)
        kernel = self.kernel_of_average(p)
        return exact.in_span(span, kernel) and exact.in_span(kernel, span)

    def to_window(self, omega: CoverCochain) -> Cochain:
        """Window cochain of a cover cochain; every support cell must lie in the window."""
        values = {}
        for (j, t), v in omega.coefficients.items():
            i = self.cell_id(omega.degree, j, t)
            if i is None:
                raise SupportError(
                    f"cover cell ({j}, {list(t)}) of degree {omega.degree} lies outside the radius "
                    f"{self.radius} window"
                )
            values[i] = v
        return Cochain(omega.degree, values)

    def to_cover(self, cochain: Cochain) -> CoverCochain:
        return CoverCochain(cochain.degree, {self.cell(cochain.degree, i): v for i, v in cochain.coefficients.items()})

    def to_dict(self) -> Dict[str, object]:
        return {
            "cover": self.cover.name,
            "radius": self.radius,
            "cells": self.complex.counts(),
            "collar": len(self.collar),
        }


@lru_cache(maxsize=32)
def build_window(cover: PeriodicCover, radius: int) -> Window:
    return _build_window(cover, radius)


@measure_performance("cover.build_window")
def _build_window(cover: PeriodicCover, radius: int) -> Window:
    if radius < 1:
        raise WindowTooSmallError(radius, 1)
    Q = cover.quotient
    top = Q.dimension
    box = translations(cover.deck_rank, radius)
    levels: List[Set[CoverCell]] = [set() for _ in range(top + 1)]
    for p in range(top + 1):
        levels[p].update((j, t) for j in range(Q.count(p)) for t in box)
    for p in range(top, 0, -1):
        for j, t in list(levels[p]):
            levels[p - 1].update(cover.cover_faces(p, j, t))
    keys = [sorted(level, key=lambda c: (c[1], c[0])) for level in levels]
    index = [{key: i for i, key in enumerate(level)} for level in keys]
    faces = []
    for p, level in enumerate(keys):
        if p == 0:
            faces.append([() for _ in level])
            continue
        level_faces = []
        for j, t in level:
            entries = cover.cover_faces(p, j, t)
            level_faces.append(tuple(sorted((index[p - 1][key], c) for key, c in entries.items())))
        faces.append(level_faces)
    K = build_complex(f"{cover.name}[R={radius}]", "cellular", keys, faces)

    seeds: Set[Tuple[int, int]] = set()
    for p, level in enumerate(keys):
        for i, (j, t) in enumerate(level):
            if (p, j) in cover.quotient_collar:
                seeds.add((p, i))
                continue
            if any(c not in index[p + 1] for c in cover.cover_cofaces(p, j, t)):
                seeds.add((p, i))
    collar = frozenset(face_closure(K, seeds))
    window = Window(cover=cover, radius=radius, complex=K, collar=collar)
    logger.debug(f"Window {K.name}: cells {K.counts()}, collar {len(collar)}")
    return window


def required_radius(cover: PeriodicCover, cells: Iterable[Tuple[int, int, Translation]],
                    start: int = 1, limit: Optional[int] = None) -> int:
    """Smallest radius whose window holds every (degree, j, t) in its interior."""
    cells = list(cells)
    limit = limit or settings.max_window_radius
    reach = max((norm(t) for _, _, t in cells), default=0)
    for radius in range(max(start, 1), limit + 1):
        if radius < reach:
            continue
        window = build_window(cover, radius)
        if all(window.is_interior(p, j, t) for p, j, t in cells):
            return radius
    raise WindowTooSmallError(limit, max(limit + 1, reach + 1))
