"""Bundled periodic covers built from cubical grids.

The deck group ℤⁿ translates the first n axes. The quotient is the
cubical grid with those axes glued with period m; any further axes are
bounded intervals whose end faces form the quotient collar.
"""

from typing import Dict, List, Sequence, Set, Tuple

from src.complex.library import cube_faces, cube_keys, cubical_grid, wrap
from src.errors import ComplexError

from .periodic import LiftEntry, PeriodicCover


def cubical_cover(name: str, deck_rank: int, period: int = 1, widths: Sequence[int] = (),
                  family: str = "custom", contractible: bool = False, description: str = "") -> PeriodicCover:
    """ℤ^deck_rank acting on ℝ^deck_rank × Π[0, w] by unit translations."""
    if deck_rank < 1 or period < 1 or any(w < 1 for w in widths):
        raise ComplexError(f"bad cubical cover: rank {deck_rank}, period {period}, widths {tuple(widths)}")
    shape = (period,) * deck_rank + tuple(widths)
    periodic = (True,) * deck_rank + (False,) * len(widths)
    quotient = cubical_grid(shape, periodic, name=f"{name}/deck")
    levels = cube_keys(shape, periodic)
    index = [{key: i for i, key in enumerate(level)} for level in levels]

    lifts: List[Tuple[Tuple[LiftEntry, ...], ...]] = []
    for p, level in enumerate(levels):
        level_lifts = []
        for key in level:
            entries = []
            if p > 0:
                for (corner, axes), sign in cube_faces(key):
                    reduced = wrap(corner, shape, periodic)
                    offset = tuple((corner[a] - reduced[a]) // period for a in range(deck_rank))
                    entries.append((index[p - 1][(reduced, axes)], offset, sign))
            level_lifts.append(tuple(entries))
        lifts.append(tuple(level_lifts))

    collar: Set[Tuple[int, int]] = set()
    for p, level in enumerate(levels):
        for i, (corner, axes) in enumerate(level):
            for b, width in enumerate(widths):
                axis = deck_rank + b
                if axis not in axes and corner[axis] in (0, width):
                    collar.add((p, i))
    return PeriodicCover(
        name=name,
        quotient=quotient,
        deck_rank=deck_rank,
        lifts=tuple(lifts),
        quotient_collar=frozenset(collar),
        contractible=contractible,
        family=family,
        description=description,
    )


def euclidean_cover(n: int, period: int = 1) -> PeriodicCover:
    """ℤⁿ on ℝⁿ; the quotient is the period^n cubical n-torus."""
    names = {1: "z-on-r", 2: "z2-on-r2", 3: "z3-on-r3"}
    name = names.get(n, f"z{n}-on-r{n}")
    if period != 1:
        name += f"-m{period}"
    return cubical_cover(name, n, period=period, family="euclidean", contractible=True,
                         description=f"ℤ^{n} translating the unit cubical grid of ℝ^{n}")


def line(period: int = 1) -> PeriodicCover:
    return euclidean_cover(1, period)


def plane(period: int = 1) -> PeriodicCover:
    return euclidean_cover(2, period)


def space(period: int = 1) -> PeriodicCover:
    return euclidean_cover(3, period)


def strip(width: int = 2, period: int = 1) -> PeriodicCover:
    """ℤ on ℝ × (0, width); the quotient is a cylinder with collared ends."""
    return cubical_cover(f"strip-{width}", 1, period=period, widths=(width,), family="strip",
                         description=f"ℤ translating ℝ × (0,{width}), quotient an open cylinder")


BUNDLED_COVERS: Dict[str, Tuple[object, str]] = {
    "z-on-r": (line, "ℤ on ℝ, quotient the circle"),
    "z2-on-r2": (plane, "ℤ² on ℝ², quotient the 2-torus"),
    "z3-on-r3": (space, "ℤ³ on ℝ³, quotient the 3-torus"),
    "strip": (strip, "ℤ on ℝ × (0,2), quotient an open cylinder"),
}


def bundled_cover(name: str) -> PeriodicCover:
    try:
        factory, _ = BUNDLED_COVERS[name]
    except KeyError:
        raise ComplexError(f"unknown bundled cover '{name}'") from None
    return _cached(name, factory)


_CACHE: Dict[str, PeriodicCover] = {}


def _cached(name: str, factory) -> PeriodicCover:
    # windows are cached per cover object, so hand out one object per name
    if name not in _CACHE:
        _CACHE[name] = factory()
    return _CACHE[name]
