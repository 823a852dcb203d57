"""Bundled complexes: simplicial spheres, polygons, cubical grids and tori."""

from itertools import combinations, product
from typing import Dict, Hashable, Iterable, List, Sequence, Tuple

from src.errors import ComplexError

from .cells import CellComplex, Faces, build_complex

Simplex = Tuple[int, ...]
CubeKey = Tuple[Tuple[int, ...], Tuple[int, ...]]


def permutation_sign(sequence: Sequence[int]) -> int:
    """Sign of the permutation sorting ``sequence`` (entries distinct)."""
    sign = 1
    items = list(sequence)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if items[i] > items[j]:
                sign = -sign
            elif items[i] == items[j]:
                raise ComplexError(f"repeated vertex {items[i]} in simplex {tuple(sequence)}")
    return sign


def simplex_faces(simplex: Simplex) -> List[Tuple[Simplex, int]]:
    """Oriented boundary of a sorted simplex: Σ (−1)^i [v0..v̂i..vk]."""
    if len(simplex) == 1:
        return []
    return [(simplex[:i] + simplex[i + 1:], (-1) ** i) for i in range(len(simplex))]


def simplicial_complex(name: str, tops: Iterable[Sequence[int]]) -> CellComplex:
    """Closure of the given simplices, oriented by sorted vertex ids."""
    simplices = set()
    for top in tops:
        top = tuple(sorted(top))
        if len(set(top)) != len(top):
            raise ComplexError(f"repeated vertex in simplex {top}")
        for k in range(1, len(top) + 1):
            simplices.update(combinations(top, k))
    if not simplices:
        raise ComplexError(f"{name}: no simplices")
    dimension = max(len(s) for s in simplices) - 1
    keys = [sorted(s for s in simplices if len(s) == p + 1) for p in range(dimension + 1)]
    index = [{key: i for i, key in enumerate(level)} for level in keys]
    faces = [
        [tuple((index[p - 1][face], sign) for face, sign in simplex_faces(s)) if p else () for s in level]
        for p, level in enumerate(keys)
    ]
    return build_complex(name, "simplicial", keys, faces)


def polygon(k: int, name: str = None) -> CellComplex:
    if k < 3:
        raise ComplexError("a polygon needs at least 3 vertices")
    return simplicial_complex(name or f"polygon-{k}", [(i, (i + 1) % k) for i in range(k)])


def hexagon() -> CellComplex:
    return polygon(6, "hexagon")


def triangle() -> CellComplex:
    return polygon(3, "triangle")


def path_graph(k: int) -> CellComplex:
    """Path v0 – v1 – … – v(k−1)."""
    if k < 2:
        raise ComplexError("a path needs at least 2 vertices")
    return simplicial_complex(f"path-{k}", [(i, i + 1) for i in range(k - 1)])


def octahedron() -> CellComplex:
    """Boundary of the octahedron; antipodal vertex pairs (0,1), (2,3), (4,5)."""
    tops = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return simplicial_complex("octahedron", tops)


def two_points() -> CellComplex:
    return simplicial_complex("two-points", [(0,), (1,)])


def single_edge() -> CellComplex:
    return simplicial_complex("single-edge", [(0, 1)])


def disjoint_union(K: CellComplex, L: CellComplex, name: str = None) -> CellComplex:
    """K ⊔ L; simplicial inputs keep vertex ids of K and shift those of L."""
    name = name or f"{K.name}+{L.name}"
    dimension = max(K.dimension, L.dimension)
    if K.orientation == L.orientation == "simplicial":
        shift = 1 + max(v for cell in K.cells[0] for v in cell.key)
        tops = [cell.key for level in K.cells for cell in level]
        tops += [tuple(v + shift for v in cell.key) for level in L.cells for cell in level]
        return simplicial_complex(name, tops)

    keys: List[List[Hashable]] = []
    faces: List[List[Faces]] = []
    for p in range(dimension + 1):
        level_keys = [(0, cell.key) for cell in (K.cells[p] if p <= K.dimension else ())]
        level_faces = list(K.boundaries[p]) if p <= K.dimension else []
        offset = K.count(p - 1) if p > 0 else 0
        for cell in (L.cells[p] if p <= L.dimension else ()):
            level_keys.append((1, cell.key))
            level_faces.append(tuple((i + offset, c) for i, c in L.boundaries[p][cell.id]))
        keys.append(level_keys)
        faces.append(level_faces)
    return build_complex(name, "cellular", keys, faces)


def two_circles() -> CellComplex:
    """Two disjoint triangles on vertices 0-2 and 3-5."""
    return disjoint_union(triangle(), triangle(), "two-circles")


# Cubical grids -------------------------------------------------------------

def cube_keys(shape: Sequence[int], periodic: Sequence[bool]) -> List[List[CubeKey]]:
    """Cells (corner, axes) of a grid, per degree, sorted by (corner, axes)."""
    d = len(shape)
    levels: List[List[CubeKey]] = [[] for _ in range(d + 1)]
    for k in range(d + 1):
        for axes in combinations(range(d), k):
            ranges = []
            for axis in range(d):
                m = shape[axis]
                if periodic[axis] or axis in axes:
                    ranges.append(range(m))
                else:
                    ranges.append(range(m + 1))
            for corner in product(*ranges):
                levels[k].append((tuple(corner), axes))
        levels[k].sort()
    return levels


def cube_faces(key: CubeKey) -> List[Tuple[CubeKey, int]]:
    """Unreduced boundary Σ_j (−1)^j [(z + e_{i_j}, S∖i_j) − (z, S∖i_j)]."""
    corner, axes = key
    faces = []
    for j, axis in enumerate(axes):
        rest = axes[:j] + axes[j + 1:]
        shifted = tuple(c + 1 if a == axis else c for a, c in enumerate(corner))
        sign = (-1) ** j
        faces.append(((shifted, rest), sign))
        faces.append(((corner, rest), -sign))
    return faces


def wrap(corner: Sequence[int], shape: Sequence[int], periodic: Sequence[bool]) -> Tuple[int, ...]:
    return tuple(c % m if wrapped else c for c, m, wrapped in zip(corner, shape, periodic))


def cubical_grid(shape: Sequence[int], periodic: Sequence[bool] = None, name: str = None) -> CellComplex:
    """Cubical grid with ``shape[a]`` unit steps along axis ``a``.

    Periodic axes are glued (a torus factor); coincident faces from the
    gluing have their coefficients summed and dropped when they cancel.
    """
    shape = tuple(int(m) for m in shape)
    periodic = tuple(periodic) if periodic is not None else (False,) * len(shape)
    if len(periodic) != len(shape) or any(m < 1 for m in shape):
        raise ComplexError(f"bad grid shape {shape} / periodic {periodic}")
    levels = cube_keys(shape, periodic)
    index = [{key: i for i, key in enumerate(level)} for level in levels]
    faces: List[List[Faces]] = []
    for p, level in enumerate(levels):
        level_faces = []
        for key in level:
            total: Dict[int, int] = {}
            for (corner, axes), sign in cube_faces(key):
                face = index[p - 1][(wrap(corner, shape, periodic), axes)]
                total[face] = total.get(face, 0) + sign
            level_faces.append(tuple((i, c) for i, c in sorted(total.items()) if c))
        faces.append(level_faces)
    name = name or "grid-" + "x".join(f"{m}{'p' if w else ''}" for m, w in zip(shape, periodic))
    return build_complex(name, "cubical", levels, faces)


def cubical_torus(m: int = 3, n: int = 3) -> CellComplex:
    return cubical_grid((m, n), (True, True), name=f"torus-{m}x{n}")


def cubical_circle(m: int = 1) -> CellComplex:
    return cubical_grid((m,), (True,), name=f"circle-{m}")


BUNDLED_COMPLEXES = {
    "hexagon": (hexagon, "hexagon circle, 6 vertices and 6 edges"),
    "triangle": (triangle, "triangle boundary circle"),
    "octahedron": (octahedron, "octahedral 2-sphere, antipodal pairs (0,1),(2,3),(4,5)"),
    "two-points": (two_points, "two isolated vertices"),
    "single-edge": (single_edge, "one edge [v0,v1]"),
    "path-3": (lambda: path_graph(3), "path graph v0-v1-v2"),
    "two-circles": (two_circles, "two disjoint triangles"),
    "torus-3x3": (lambda: cubical_torus(3, 3), "periodic 3x3 cubical grid, the 2-torus"),
    "torus-3x3x3": (lambda: cubical_grid((3, 3, 3), (True, True, True), name="torus-3x3x3"),
                    "periodic 3x3x3 cubical grid, the 3-torus"),
}


def bundled_complex(name: str) -> CellComplex:
    try:
        factory, _ = BUNDLED_COMPLEXES[name]
    except KeyError:
        raise ComplexError(f"unknown bundled complex '{name}'") from None
    return factory()
