"""Group actions on cochains: average, invariants, coinvariants."""

from .finite import FiniteGroup, FreeAbelianGroup, Element, compose, invert, parse_word
from .action import (
    CochainAction,
    InducedAction,
    act,
    pullback,
    average,
    invariant_subspace,
    coinvariant_subspace,
    split_check,
    induced_cohomology_action,
    induced_action_report,
)
from .library import (
    action_from_vertex_map,
    action_from_cubical_map,
    bundled_action,
    BUNDLED_ACTIONS,
)
from .formats import ActionDocument, load_action

__all__ = [
    "FiniteGroup",
    "FreeAbelianGroup",
    "Element",
    "compose",
    "invert",
    "parse_word",
    "CochainAction",
    "InducedAction",
    "act",
    "pullback",
    "average",
    "invariant_subspace",
    "coinvariant_subspace",
    "split_check",
    "induced_cohomology_action",
    "induced_action_report",
    "action_from_vertex_map",
    "action_from_cubical_map",
    "bundled_action",
    "BUNDLED_ACTIONS",
    "ActionDocument",
    "load_action",
]
