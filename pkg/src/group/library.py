"""Actions induced by vertex maps and grid symmetries, and the bundled actions."""

from typing import Callable, Dict, Mapping, Sequence, Tuple

from src.complex import CellComplex
from src.complex import library as complexes
from src.complex.library import permutation_sign, wrap
from src.errors import ActionValidationError

from .action import CochainAction
from .finite import Element


def vertex_map_element(K: CellComplex, vertex_map: Mapping[int, int]) -> Element:
    """Signed permutation of a simplicial complex induced by a vertex map."""
    if K.orientation != "simplicial":
        raise ActionValidationError(f"vertex maps need a simplicial complex, {K.name} is {K.orientation}")
    levels = []
    for p, cells in enumerate(K.cells):
        level = []
        for cell in cells:
            try:
                image = tuple(vertex_map[v] for v in cell.key)
            except KeyError as e:
                raise ActionValidationError(f"vertex map has no image for vertex {e.args[0]}", degree=0) from None
            key = tuple(sorted(image))
            if key not in K.index[p]:
                raise ActionValidationError(
                    f"vertex map sends {cell.label} to {list(image)}, which is not a cell", degree=p
                )
            level.append((K.index[p][key], permutation_sign(image)))
        levels.append(tuple(level))
    return tuple(levels)


def action_from_vertex_map(K: CellComplex, generators: Mapping[str, Mapping[int, int]], name: str = None,
                           order: int = None, relations: Sequence[str] = ()) -> CochainAction:
    maps = {g: vertex_map_element(K, vmap) for g, vmap in generators.items()}
    return CochainAction.from_generators(K, maps, name=name, order=order, relations=relations)


def grid_map_element(K: CellComplex, shape: Sequence[int], translation: Sequence[int],
                     axis_permutation: Sequence[int]) -> Element:
    """x ↦ P x + t on a fully periodic cubical grid; P permutes axes (a ↦ π(a))."""
    if K.orientation != "cubical":
        raise ActionValidationError(f"grid maps need a cubical complex, {K.name} is {K.orientation}")
    d = len(shape)
    periodic = (True,) * d
    if sorted(axis_permutation) != list(range(d)) or len(translation) != d:
        raise ActionValidationError(f"bad grid map: permutation {axis_permutation}, translation {translation}")
    if any(shape[a] != shape[axis_permutation[a]] for a in range(d)):
        raise ActionValidationError("axis permutation must preserve the grid shape")
    levels = []
    for p, cells in enumerate(K.cells):
        level = []
        for cell in cells:
            corner, axes = cell.key
            moved = [0] * d
            for a, c in enumerate(corner):
                moved[axis_permutation[a]] = c
            moved = wrap([c + t for c, t in zip(moved, translation)], shape, periodic)
            image_axes = [axis_permutation[a] for a in axes]
            key = (moved, tuple(sorted(image_axes)))
            level.append((K.index[p][key], permutation_sign(image_axes)))
        levels.append(tuple(level))
    return tuple(levels)


def action_from_cubical_map(K: CellComplex, shape: Sequence[int], generators: Mapping[str, Tuple[Sequence[int], Sequence[int]]],
                            name: str = None, order: int = None, relations: Sequence[str] = ()) -> CochainAction:
    """Generators given as (translation, axis permutation) pairs."""
    maps = {g: grid_map_element(K, shape, t, perm) for g, (t, perm) in generators.items()}
    return CochainAction.from_generators(K, maps, name=name, order=order, relations=relations)


def _cycle(n: int, step: int = 1) -> Dict[int, int]:
    return {i: (i + step) % n for i in range(n)}


def hexagon_rotation() -> CochainAction:
    return action_from_vertex_map(complexes.hexagon(), {"r": _cycle(6)}, name="hexagon-rotation",
                                  order=6, relations=["r^6"])


def hexagon_reflection() -> CochainAction:
    return action_from_vertex_map(complexes.hexagon(), {"s": {i: (-i) % 6 for i in range(6)}},
                                  name="hexagon-reflection", order=2, relations=["s^2"])


def hexagon_trivial() -> CochainAction:
    return action_from_vertex_map(complexes.hexagon(), {"e0": {i: i for i in range(6)}},
                                  name="hexagon-trivial", order=1)


def triangle_rotation() -> CochainAction:
    return action_from_vertex_map(complexes.triangle(), {"r": _cycle(3)}, name="triangle-rotation",
                                  order=3, relations=["r^3"])


def octahedron_antipodal() -> CochainAction:
    return action_from_vertex_map(complexes.octahedron(), {"a": {0: 1, 1: 0, 2: 3, 3: 2, 4: 5, 5: 4}},
                                  name="octahedron-antipodal", order=2, relations=["a^2"])


def octahedron_rotation() -> CochainAction:
    """Quarter turn about the axis through vertices 4 and 5."""
    return action_from_vertex_map(complexes.octahedron(), {"q": {0: 2, 2: 1, 1: 3, 3: 0, 4: 4, 5: 5}},
                                  name="octahedron-rotation", order=4, relations=["q^4"])


def octahedron_trivial() -> CochainAction:
    return action_from_vertex_map(complexes.octahedron(), {"e0": {i: i for i in range(6)}},
                                  name="octahedron-trivial", order=1)


def two_points_swap() -> CochainAction:
    return action_from_vertex_map(complexes.two_points(), {"s": {0: 1, 1: 0}},
                                  name="two-points-swap", order=2, relations=["s^2"])


def two_circles_swap() -> CochainAction:
    swap = {i: (i + 3) % 6 for i in range(6)}
    return action_from_vertex_map(complexes.two_circles(), {"s": swap}, name="two-circles-swap",
                                  order=2, relations=["s^2"])


def torus_translation() -> CochainAction:
    K = complexes.cubical_torus(3, 3)
    return action_from_cubical_map(K, (3, 3), {"t": ((1, 0), (0, 1))}, name="torus-translation",
                                   order=3, relations=["t^3"])


def torus_swap() -> CochainAction:
    K = complexes.cubical_torus(3, 3)
    return action_from_cubical_map(K, (3, 3), {"s": ((0, 0), (1, 0))}, name="torus-swap",
                                   order=2, relations=["s^2"])


def torus_translations() -> CochainAction:
    """ℤ3 × ℤ3 acting by all grid translations."""
    K = complexes.cubical_torus(3, 3)
    return action_from_cubical_map(
        K, (3, 3), {"x": ((1, 0), (0, 1)), "y": ((0, 1), (0, 1))}, name="torus-translations",
        order=9, relations=["x^3", "y^3", "x*y*x^-1*y^-1"],
    )


BUNDLED_ACTIONS: Dict[str, Tuple[Callable[[], CochainAction], str]] = {
    "hexagon-rotation": (hexagon_rotation, "ℤ/6 rotating the hexagon"),
    "hexagon-reflection": (hexagon_reflection, "ℤ/2 reflecting the hexagon through vertices 0 and 3"),
    "hexagon-trivial": (hexagon_trivial, "trivial group on the hexagon"),
    "triangle-rotation": (triangle_rotation, "ℤ/3 rotating the triangle boundary"),
    "octahedron-antipodal": (octahedron_antipodal, "ℤ/2 antipodal map of the octahedral sphere"),
    "octahedron-rotation": (octahedron_rotation, "ℤ/4 quarter turn of the octahedron"),
    "octahedron-trivial": (octahedron_trivial, "trivial group on the octahedron"),
    "two-points-swap": (two_points_swap, "ℤ/2 swapping two isolated vertices"),
    "two-circles-swap": (two_circles_swap, "ℤ/2 swapping two disjoint circles"),
    "torus-translation": (torus_translation, "ℤ/3 translating the 3x3 torus along x"),
    "torus-translations": (torus_translations, "ℤ/3 × ℤ/3 translations of the 3x3 torus"),
    "torus-swap": (torus_swap, "ℤ/2 exchanging the axes of the 3x3 torus"),
}


def bundled_action(name: str) -> CochainAction:
    try:
        factory, _ = BUNDLED_ACTIONS[name]
    except KeyError:
        raise ActionValidationError(f"unknown bundled action '{name}'") from None
    return factory()
