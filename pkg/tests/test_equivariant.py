"""Tests for invariant/coinvariant cohomology, Φ and the finite exact sequence."""

import pytest

from src.complex import Cochain, apply_coboundary, cohomology_basis
from src.equivariant import (
    averaging_witness,
    coinvariant_cohomology,
    finite_exact_sequence,
    invariant_cohomology,
    phi_map,
)
from src.errors import GroupError
from src.group import CochainAction, act, bundled_action
from src.linalg.oracle import oracle_equivariant_ranks

SPLITS = [
    ("octahedron-antipodal", [1, 0, 0], [0, 0, 1]),
    ("hexagon-rotation", [1, 1], [0, 0]),
    ("hexagon-reflection", [1, 0], [0, 1]),
    ("torus-swap", [1, 1, 0], [0, 1, 1]),
    ("torus-translation", [1, 2, 1], [0, 0, 0]),
    ("two-circles-swap", [1, 1], [1, 1]),
    ("octahedron-trivial", [1, 0, 1], [0, 0, 0]),
]


class TestEquivariantCohomology:
    """Ranks of H(Ω^Γ) and H(Ω_Γ)."""

    @pytest.mark.parametrize("name, inv, coinv", SPLITS)
    def test_ranks(self, name, inv, coinv):
        A = bundled_action(name)
        assert invariant_cohomology(A) == inv
        assert coinvariant_cohomology(A) == coinv

    @pytest.mark.parametrize("name", ["octahedron-antipodal", "hexagon-reflection", "two-circles-swap"])
    def test_oracle_agrees(self, name):
        A = bundled_action(name)
        assert (invariant_cohomology(A), coinvariant_cohomology(A)) == tuple(oracle_equivariant_ranks(A))

    def test_free_group_rejected(self, hexagon_rotation):
        rotation = hexagon_rotation.generator_maps[0]
        free = CochainAction.from_generators(hexagon_rotation.complex, {"r": rotation}, free=True)
        with pytest.raises(GroupError):
            invariant_cohomology(free)


class TestPhi:
    """Φ : H(Ω^Γ) ⊕ H(Ω_Γ) → H(K)."""

    @pytest.mark.parametrize("name", ["octahedron-antipodal", "hexagon-rotation", "hexagon-reflection",
                                      "torus-swap", "two-circles-swap"])
    def test_ledger_passes(self, name):
        report = phi_map(bundled_action(name))
        assert report.passed, report.failures()
        assert all(d.bijective for d in report.degrees)

    def test_octahedron_split(self, antipodal):
        report = phi_map(antipodal)
        assert [d.invariant_rank for d in report.degrees] == [1, 0, 0]
        assert [d.coinvariant_rank for d in report.degrees] == [0, 0, 1]
        top = report.degrees[2].matrix
        assert len(top) == 1 and len(top[0]) == 1 and top[0][0] != "0"

    def test_averaging_witness_on_fixed_class(self, torus_swap):
        K = torus_swap.complex
        reps = cohomology_basis(K, 1)
        x = Cochain.from_column(1, reps, 0)
        y = Cochain.from_column(1, reps, 1)
        # ω + s.ω is fixed up to a coboundary
        candidates = [x + act(torus_swap, "s", x), y + act(torus_swap, "s", y)]
        assert any(averaging_witness(torus_swap, c) for c in candidates)

    def test_averaging_witness_fails_off_fixed_classes(self, hexagon_reflection):
        reps = cohomology_basis(hexagon_reflection.complex, 1)
        assert not averaging_witness(hexagon_reflection, Cochain.from_column(1, reps, 0))

    def test_averaging_witness_with_coboundary_noise(self, hexagon_rotation):
        K = hexagon_rotation.complex
        reps = cohomology_basis(K, 1)
        noisy = Cochain.from_column(1, reps, 0) + apply_coboundary(K, Cochain(0, {1: 2, 4: -1}))
        assert averaging_witness(hexagon_rotation, noisy)


class TestFiniteExactSequence:
    """… → H(Ω_Γ) → H(K) → H(Ω^Γ) → H(Ω_Γ)[+1] → …"""

    def test_octahedron_dimensions(self, antipodal):
        report = finite_exact_sequence(antipodal)
        assert report.passed, report.failures()
        assert report.regime == "finite"
        assert report.dimensions == [0, 1, 1, 0, 0, 0, 1, 1, 0]
        assert report.alternating_sum == 0

    @pytest.mark.parametrize("name, inv, coinv", SPLITS)
    def test_every_action(self, name, inv, coinv):
        report = finite_exact_sequence(bundled_action(name))
        assert report.passed, report.failures()
        assert [row.invariant_rank for row in report.rows] == inv
        assert [row.coinvariant_rank for row in report.rows] == coinv
        assert all(row.connecting_rank == 0 for row in report.rows)

    def test_truncated_sequence_skips_alternating_sum(self, torus_swap):
        report = finite_exact_sequence(torus_swap, max_degree=1)
        assert len(report.rows) == 2
        assert "sequence.alternating_sum" not in {c.invariant for c in report.checks}
        assert report.passed
