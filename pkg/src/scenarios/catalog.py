"""Bundled scenarios and the example listing."""

from pathlib import Path
from typing import Dict, List, Tuple

from src.complex import BUNDLED_COMPLEXES
from src.cover import BUNDLED_COVERS
from src.errors import ScenarioError
from src.group import BUNDLED_ACTIONS
from src.utils.documents import load_document

from .models import Scenario

EXAMPLE_KINDS = ("complex", "action", "cover", "scenario")

_FINITE_ALL = [
    "split_check",
    "induced_action",
    "invariant_cohomology",
    "coinvariant_cohomology",
    "phi_map",
    "finite_exact_sequence",
    "equivariant_hodge",
    "h0_check",
    "oracle",
]

BUNDLED_SCENARIOS: Dict[str, Scenario] = {
    s.name: s
    for s in [
        Scenario(
            name="octahedron-antipodal",
            kind="finite-action",
            description="antipodal ℤ/2 on the octahedral sphere: H² is entirely coinvariant",
            action="octahedron-antipodal",
            operations=_FINITE_ALL,
        ),
        Scenario(
            name="hexagon-rotation",
            kind="finite-action",
            description="ℤ/6 rotating the hexagon: everything is invariant",
            action="hexagon-rotation",
            operations=_FINITE_ALL,
        ),
        Scenario(
            name="hexagon-reflection",
            kind="finite-action",
            description="reflection of the hexagon: H¹ is coinvariant",
            action="hexagon-reflection",
            operations=_FINITE_ALL,
        ),
        Scenario(
            name="two-circles-swap",
            kind="finite-action",
            description="ℤ/2 swapping two circles: H⁰ and H¹ both split one plus one",
            action="two-circles-swap",
            # disconnected, so H⁰ of the coinvariants is nonzero
            operations=[op for op in _FINITE_ALL if op != "h0_check"],
        ),
        Scenario(
            name="torus-swap",
            kind="finite-action",
            description="axis swap on the 3x3 torus",
            action="torus-swap",
            operations=_FINITE_ALL,
        ),
        Scenario(
            name="torus-hodge",
            kind="hodge",
            description="harmonic cochains of the 3x3 torus under the axis swap",
            action="torus-swap",
            operations=["hodge_check", "harmonic_space", "hodge_decompose", "equivariant_hodge"],
        ),
        Scenario(
            name="z-on-r",
            kind="cover",
            description="ℤ on ℝ: coinvariant compact cohomology of the line",
            cover="z-on-r",
            operations=["coinvariant_ranks", "cover_exact_sequence", "theta_class", "h0_check", "corollary_check"],
            parameters={"expected_ranks": [0, 1]},
        ),
        Scenario(
            name="z2-on-r2",
            kind="cover",
            description="ℤ² on ℝ²: ranks 0, 1, 2",
            cover="z2-on-r2",
            operations=["coinvariant_ranks", "cover_exact_sequence", "theta_class", "h0_check", "corollary_check"],
            parameters={"expected_ranks": [0, 1, 2]},
        ),
        Scenario(
            name="z3-on-r3",
            kind="cover",
            description="ℤ³ on ℝ³: ranks 0, 1, 3, 3",
            cover="z3-on-r3",
            operations=["coinvariant_ranks", "cover_exact_sequence", "h0_check", "corollary_check"],
            parameters={"expected_ranks": [0, 1, 3, 3], "window_radius": 1},
        ),
        Scenario(
            name="strip",
            kind="cover",
            description="ℤ on the open strip ℝ × (0,2): the inclusion into compact cohomology",
            cover="strip",
            operations=["coinvariant_ranks", "cover_exact_sequence", "h0_check", "iota_injectivity"],
            parameters={"expected_ranks": [0, 0, 1]},
        ),
    ]
}


def list_examples(kind: str = None) -> List[Tuple[str, str, str]]:
    """(kind, name, description) for every bundled example, optionally of one kind."""
    if kind is not None and kind not in EXAMPLE_KINDS:
        raise ScenarioError(f"unknown example kind '{kind}'; choose from {', '.join(EXAMPLE_KINDS)}")
    tables = {
        "complex": {name: text for name, (_, text) in BUNDLED_COMPLEXES.items()},
        "action": {name: text for name, (_, text) in BUNDLED_ACTIONS.items()},
        "cover": {name: text for name, (_, text) in BUNDLED_COVERS.items()},
        "scenario": {name: s.description for name, s in BUNDLED_SCENARIOS.items()},
    }
    rows = []
    for k in EXAMPLE_KINDS:
        if kind is None or k == kind:
            rows.extend((k, name, text) for name, text in sorted(tables[k].items()))
    return rows


def load_scenario(reference: str) -> Tuple[Scenario, Path]:
    """A bundled scenario name or a scenario file; also returns the base for relative references."""
    if reference in BUNDLED_SCENARIOS:
        return BUNDLED_SCENARIOS[reference], Path.cwd()
    path = Path(reference)
    if not path.exists() and path.suffix != ".json":
        raise ScenarioError(f"unknown scenario '{reference}'")
    return load_document(path, Scenario), path.parent
