"""Invariant and coinvariant cohomology of finite actions, Φ and the finite exact sequence."""

from .phi import invariant_cohomology, coinvariant_cohomology, averaging_witness, phi_map
from .sequence import finite_exact_sequence, sequence_checks, sequence_rows

__all__ = [
    "invariant_cohomology",
    "coinvariant_cohomology",
    "averaging_witness",
    "phi_map",
    "finite_exact_sequence",
    "sequence_checks",
    "sequence_rows",
]
