"""Tests for group actions: synthesis, averaging, invariants and coinvariants."""

import json
from fractions import Fraction

import pytest

from src.complex import Cochain, bundled_complex
from src.errors import ActionValidationError, DescriptionError, GroupError
from src.group import (
    BUNDLED_ACTIONS,
    act,
    action_from_vertex_map,
    average,
    bundled_action,
    coinvariant_subspace,
    induced_action_report,
    induced_cohomology_action,
    invariant_subspace,
    load_action,
    parse_word,
    pullback,
    split_check,
)
from src.linalg import exact


class TestGroupSynthesis:
    """Closing generators into finite groups."""

    @pytest.mark.parametrize("name, order", [
        ("hexagon-rotation", 6),
        ("hexagon-reflection", 2),
        ("octahedron-antipodal", 2),
        ("octahedron-rotation", 4),
        ("torus-translations", 9),
        ("torus-swap", 2),
    ])
    def test_orders(self, name, order):
        assert bundled_action(name).group.order == order

    def test_every_bundled_action_loads(self):
        for name in BUNDLED_ACTIONS:
            assert bundled_action(name).name == name

    def test_inverse_and_words(self, hexagon_rotation):
        group = hexagon_rotation.group
        r = group.evaluate("r")
        assert group.multiply(r, group.inverse(r)) == group.identity
        assert group.evaluate("r^6") == group.identity
        assert group.evaluate("r^-1") == group.evaluate("r^5")

    def test_declared_order_mismatch(self):
        with pytest.raises(ActionValidationError) as info:
            action_from_vertex_map(bundled_complex("hexagon"), {"r": {i: (i + 1) % 6 for i in range(6)}}, order=3)
        assert info.value.relation == "order=3"

    def test_failing_relation(self):
        with pytest.raises(ActionValidationError) as info:
            action_from_vertex_map(bundled_complex("hexagon"), {"r": {i: (i + 1) % 6 for i in range(6)}},
                                   relations=["r^3"])
        assert info.value.relation == "r^3"

    def test_vertex_map_must_send_cells_to_cells(self):
        with pytest.raises(ActionValidationError):
            action_from_vertex_map(bundled_complex("hexagon"), {"f": {0: 0, 1: 2, 2: 1, 3: 3, 4: 4, 5: 5}})

    def test_unknown_element(self, hexagon_rotation):
        with pytest.raises(GroupError):
            hexagon_rotation.group.element_index(17)
        with pytest.raises(GroupError):
            hexagon_rotation.group.evaluate("q")

    def test_parse_word(self):
        assert parse_word("a*b^-2") == [("a", 1), ("b", -2)]

    def test_unknown_bundled_action(self):
        with pytest.raises(ActionValidationError):
            bundled_action("cube-rotation")


class TestCochainAction:
    """Acting on cochains."""

    def test_act_and_pullback_are_inverse(self, hexagon_rotation):
        omega = Cochain(0, {0: 1, 2: Fraction(1, 2)})
        moved = act(hexagon_rotation, "r", omega)
        assert moved.coefficients == {1: Fraction(1), 3: Fraction(1, 2)}
        assert pullback(hexagon_rotation, "r", moved) == omega

    def test_average_of_a_vertex(self, hexagon_rotation):
        m = average(hexagon_rotation, Cochain.indicator(0, 0))
        assert m.coefficients == {i: Fraction(1, 6) for i in range(6)}

    def test_antipodal_pairs_triangles(self, antipodal):
        # sorted vertex order is preserved, so each triangle maps to its antipode with sign +1
        for i in range(8):
            m = average(antipodal, Cochain.indicator(2, i))
            assert len(m.support) == 2
            assert set(m.coefficients.values()) == {Fraction(1, 2)}

    @pytest.mark.parametrize("name, inv, coinv", [
        ("octahedron-antipodal", [3, 6, 4], [3, 6, 4]),
        ("hexagon-rotation", [1, 1], [5, 5]),
        ("hexagon-reflection", [4, 3], [2, 3]),
    ])
    def test_subspace_dimensions(self, name, inv, coinv):
        A = bundled_action(name)
        K = A.complex
        assert [invariant_subspace(A, p).shape[1] for p in range(K.dimension + 1)] == inv
        assert [coinvariant_subspace(A, p).shape[1] for p in range(K.dimension + 1)] == coinv

    def test_invariants_and_coinvariants_are_closed(self, torus_swap):
        assert torus_swap.invariant_complex().closed
        assert torus_swap.coinvariant_complex().closed


class TestSplitCheck:
    """V = V^Γ ⊕ V_Γ with every ledger entry passing."""

    @pytest.mark.parametrize("name", ["octahedron-antipodal", "hexagon-rotation", "two-circles-swap", "torus-swap"])
    def test_split_passes(self, name):
        A = bundled_action(name)
        for p in range(A.complex.dimension + 1):
            report = split_check(A, p)
            assert report.passed, report.failures()
            assert report.dims["intersection"] == 0
            assert report.dims["invariant"] + report.dims["coinvariant"] == report.ambient_dim

    def test_average_is_projection(self, antipodal):
        M = antipodal.average_matrix(1)
        assert exact.entries(exact.matmul(M, M)) == exact.entries(M)


class TestInducedAction:
    """The action on cohomology classes."""

    def test_reflection_negates_h1(self, hexagon_reflection):
        induced = induced_cohomology_action(hexagon_reflection, 1)
        assert exact.entries(induced.matrices["s"]) == {(0, 0): Fraction(-1)}
        assert induced.invariant_dim == 0
        assert induced.coinvariant_dim == 1

    def test_two_circles_h1_splits(self):
        induced = induced_cohomology_action(bundled_action("two-circles-swap"), 1)
        assert (induced.invariant_dim, induced.coinvariant_dim) == (1, 1)

    def test_report(self, torus_swap):
        report = induced_action_report(torus_swap, 1)
        assert report.passed
        assert (report.betti, report.invariant_dim, report.coinvariant_dim) == (2, 1, 1)


class TestActionDocuments:
    """Loading actions from JSON."""

    def test_vertex_map_document(self):
        K = bundled_complex("two-points")
        text = json.dumps({"name": "swap", "order": 2, "generators": {"s": {"vertex_map": {"0": 1, "1": 0}}}})
        A = load_action("swap.json", K, text)
        assert A.group.order == 2

    def test_non_commuting_generator_names_degree(self):
        K = bundled_complex("path-3")
        text = json.dumps({
            "name": "bad",
            "generators": {"g": {"cells": [[[0, 2, 1], [1, 1, 1], [2, 0, 1]], [[0, 0, 1], [1, 1, 1]]]}},
        })
        with pytest.raises(ActionValidationError) as info:
            load_action("bad.json", K, text)
        assert info.value.degree == 0
        assert "degree 0" in str(info.value)

    def test_cell_listed_twice(self):
        K = bundled_complex("two-points")
        text = json.dumps({"generators": {"g": {"cells": [[[0, 1, 1], [0, 0, 1]]]}}})
        with pytest.raises(ActionValidationError):
            load_action("twice.json", K, text)

    def test_wrong_complex(self):
        K = bundled_complex("two-points")
        text = json.dumps({"complex": "hexagon", "generators": {"s": {"vertex_map": {"0": 1, "1": 0}}}})
        with pytest.raises(DescriptionError) as info:
            load_action("wrong.json", K, text)
        assert info.value.field == "complex"
