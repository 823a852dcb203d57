"""Tests for complexes, cochains, subspaces and cohomology."""

import json
from fractions import Fraction

import pytest

from src.complex import (
    ChainView,
    Cochain,
    GradedSubspace,
    LinkMap,
    apply_coboundary,
    betti_numbers,
    bundled_complex,
    class_coordinates,
    coboundary,
    cohomology_basis,
    cohomology_ranks,
    compact_support_subspace,
    cubical_circle,
    cubical_grid,
    euler_characteristic,
    face_closure,
    is_coboundary,
    load_complex,
    long_exact_sequence,
    polygon,
    simplicial_complex,
)
from src.errors import CollarError, ComplexError, DegreeError, DescriptionError, InputError, SubspaceError
from src.linalg import exact


class TestBundledComplexes:
    """Betti numbers of the bundled complexes."""

    @pytest.mark.parametrize("name, betti", [
        ("hexagon", [1, 1]),
        ("triangle", [1, 1]),
        ("octahedron", [1, 0, 1]),
        ("two-points", [2]),
        ("single-edge", [1, 0]),
        ("path-3", [1, 0]),
        ("two-circles", [2, 2]),
        ("torus-3x3", [1, 2, 1]),
    ])
    def test_betti_numbers(self, name, betti):
        assert betti_numbers(bundled_complex(name)) == betti

    def test_euler_characteristic_matches_betti(self, octahedron, torus):
        for K in (octahedron, torus):
            betti = betti_numbers(K)
            assert euler_characteristic(K) == sum((-1) ** p * b for p, b in enumerate(betti))

    def test_cell_counts(self, octahedron, torus):
        assert octahedron.counts() == [6, 12, 8]
        assert torus.counts() == [9, 18, 9]

    def test_unit_circle_has_zero_coboundary(self):
        K = cubical_circle(1)
        assert K.counts() == [1, 1]
        assert exact.is_zero(K.d(0))
        assert betti_numbers(K) == [1, 1]

    def test_unknown_name(self):
        with pytest.raises(ComplexError):
            bundled_complex("klein-bottle")

    @pytest.mark.slow
    def test_three_torus(self):
        assert betti_numbers(bundled_complex("torus-3x3x3")) == [1, 3, 3, 1]


class TestCoboundary:
    """The coboundary operator d_p as an explicit matrix."""

    def test_single_edge_sign_convention(self):
        # d f(e) = f(head) - f(tail)
        d0 = coboundary(bundled_complex("single-edge"), 0)
        assert exact.entries(d0) == {(0, 0): -1, (0, 1): 1}

    def test_hexagon_rank(self, hexagon):
        assert exact.rank(coboundary(hexagon, 0)) == 5

    def test_octahedron_rank(self, octahedron):
        # 12 edges, 8 faces, b1 = 0, b2 = 1
        assert exact.rank(coboundary(octahedron, 0)) == 5
        assert exact.rank(coboundary(octahedron, 1)) == 7

    @pytest.mark.parametrize("fixture", ["octahedron", "torus"])
    def test_squares_to_zero(self, request, fixture):
        K = request.getfixturevalue(fixture)
        assert exact.is_zero(exact.matmul(coboundary(K, 1), coboundary(K, 0)))

    def test_top_degree_rejected(self, hexagon):
        with pytest.raises(DegreeError):
            coboundary(hexagon, 1)


class TestConstruction:
    """Validation of cell data."""

    def test_polygon_needs_three_vertices(self):
        with pytest.raises(ComplexError):
            polygon(2)

    def test_repeated_vertex(self):
        with pytest.raises(ComplexError):
            simplicial_complex("bad", [(0, 0, 1)])

    def test_bad_grid(self):
        with pytest.raises(ComplexError):
            cubical_grid((0, 2))

    def test_square_zero_violation(self):
        text = json.dumps({
            "name": "broken",
            "cells": [["a", "b"], ["e", "f"], ["s"]],
            "boundary": [
                {"e": {"a": -1, "b": 1}, "f": {"a": -1, "b": 1}},
                {"s": {"e": 1, "f": 1}},
            ],
        })
        with pytest.raises(DescriptionError) as info:
            load_complex("broken.json", text)
        assert "d∘d" in str(info.value)

    def test_cells_document(self):
        text = json.dumps({
            "name": "bigon",
            "cells": [["a", "b"], ["e", "f"]],
            "boundary": [{"e": {"a": -1, "b": 1}, "f": {"a": -1, "b": 1}}],
        })
        K = load_complex("bigon.json", text)
        assert betti_numbers(K) == [1, 1]

    def test_simplices_document(self):
        K = load_complex("sphere.json", json.dumps({"simplices": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]}))
        assert betti_numbers(K) == [1, 0, 1]

    def test_malformed_json_reports_line(self):
        with pytest.raises(DescriptionError) as info:
            load_complex("bad.json", '{\n  "simplices": [[0, 1]\n')
        assert info.value.line is not None

    def test_two_sources_rejected(self):
        text = json.dumps({"simplices": [[0, 1]], "grid": {"shape": [2]}})
        with pytest.raises(DescriptionError):
            load_complex("both.json", text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(DescriptionError):
            load_complex(tmp_path / "absent.json")


class TestCochains:
    """Sparse cochain arithmetic."""

    def test_zero_coefficients_dropped(self):
        c = Cochain(1, {0: 1, 3: 0})
        assert c.support == (0,)

    def test_arithmetic(self):
        a = Cochain(0, {0: 1, 1: Fraction(1, 2)})
        b = Cochain(0, {1: Fraction(1, 2), 2: 3})
        assert (a - b).coefficients == {0: Fraction(1), 2: Fraction(-3)}
        assert (a + b)[1] == 1
        assert a.scaled(2)[1] == 1
        assert (a - a).is_zero()

    def test_degree_mismatch(self):
        with pytest.raises(DegreeError):
            Cochain(0, {0: 1}) + Cochain(1, {0: 1})

    def test_validate_out_of_range(self, hexagon):
        with pytest.raises(InputError):
            Cochain(0, {6: 1}).validate(hexagon)
        with pytest.raises(DegreeError):
            Cochain(2, {0: 1}).validate(hexagon)

    def test_coboundary_of_vertex(self, hexagon):
        # vertex 0 is the first vertex of edges [0,1] and [0,5]
        d = apply_coboundary(hexagon, Cochain.indicator(0, 0))
        assert d.coefficients == {0: Fraction(-1), 1: Fraction(-1)}

    def test_coboundary_squares_to_zero(self, octahedron):
        for i in range(octahedron.count(0)):
            dd = apply_coboundary(octahedron, apply_coboundary(octahedron, Cochain.indicator(0, i)))
            assert dd.is_zero()


class TestCohomology:
    """Representatives, coordinates and coboundary witnesses."""

    def test_cohomology_basis_size(self, torus):
        assert cohomology_basis(torus, 1).shape == (18, 2)

    def test_is_coboundary(self, hexagon):
        omega = apply_coboundary(hexagon, Cochain(0, {2: 1, 4: -3}))
        primitive = is_coboundary(hexagon, omega)
        assert primitive is not None
        assert apply_coboundary(hexagon, primitive) == omega

    def test_generator_is_not_coboundary(self, hexagon):
        assert is_coboundary(hexagon, Cochain.indicator(1, 0)) is None

    def test_class_coordinates(self, hexagon):
        reps = cohomology_basis(hexagon, 1)
        omega = Cochain.from_column(1, reps, 0).scaled(3) + apply_coboundary(hexagon, Cochain.indicator(0, 1))
        coords = class_coordinates(hexagon, 1, reps, omega)
        assert coords.coordinates == (Fraction(3),)
        assert apply_coboundary(hexagon, coords.primitive) == omega - Cochain.from_column(1, reps, 0).scaled(3)

    def test_class_coordinates_rejects_non_cocycle(self, octahedron):
        reps = cohomology_basis(octahedron, 1)
        with pytest.raises(InputError):
            class_coordinates(octahedron, 1, reps, Cochain.indicator(1, 0))


class TestSubspaces:
    """Graded subspaces and compact support."""

    def test_supported_on_detects_non_closure(self, hexagon):
        S = GradedSubspace.supported_on(hexagon, [(0, 0)])
        assert not S.closed
        with pytest.raises(SubspaceError):
            cohomology_ranks(hexagon, S)

    def test_compact_support_of_an_edge(self):
        K = bundled_complex("single-edge")
        S = compact_support_subspace(K, [(0, 0), (0, 1)])
        assert S.dims() == [0, 1]
        assert cohomology_ranks(K, S) == [0, 1]

    def test_compact_support_of_a_path(self):
        K = bundled_complex("path-3")
        S = compact_support_subspace(K, [(0, 0), (0, 2)])
        assert cohomology_ranks(K, S) == [0, 1]

    def test_collar_must_be_face_closed(self):
        K = bundled_complex("path-3")
        with pytest.raises(CollarError):
            compact_support_subspace(K, [(1, 0)])

    def test_face_closure(self):
        K = bundled_complex("path-3")
        assert face_closure(K, [(1, 0)]) == {(1, 0), (0, 0), (0, 1)}

    def test_full_and_zero(self, torus):
        assert GradedSubspace.full(torus).dims() == [9, 18, 9]
        assert GradedSubspace.zero(torus).dims() == [0, 0, 0]
        assert GradedSubspace.zero(torus).is_within(GradedSubspace.full(torus))


class TestLongExactSequence:
    """Exactness certificates on a trivially exact sequence."""

    def test_zero_to_identity(self, torus):
        zero = ChainView(GradedSubspace.zero(torus), "zero")
        full = ChainView(GradedSubspace.full(torus), "full")
        same = ChainView(GradedSubspace.full(torus), "copy")
        f = LinkMap("f", zero, full, lambda p, cols: cols)
        g = LinkMap("g", full, same, lambda p, cols: cols)
        delta = LinkMap("delta", same, zero, lambda p, cols: exact.zeros(torus.count(p + 1), cols.shape[1]), shift=1)
        sequence = long_exact_sequence(zero, full, same, f, g, delta, torus.dimension)
        assert sequence.exact
        assert len(sequence.nodes) == 9
        assert sequence.alternating_sum == 0
        assert [n.dimension for n in sequence.nodes] == [0, 1, 1, 0, 2, 2, 0, 1, 1]

    def test_missing_map_is_not_exact(self, hexagon):
        zero = ChainView(GradedSubspace.zero(hexagon), "zero")
        full = ChainView(GradedSubspace.full(hexagon), "full")
        vanish = LinkMap("g", full, full, lambda p, cols: exact.zeros(hexagon.count(p), cols.shape[1]))
        f = LinkMap("f", zero, full, lambda p, cols: cols)
        delta = LinkMap("delta", full, zero, lambda p, cols: exact.zeros(hexagon.count(p + 1), cols.shape[1]), shift=1)
        sequence = long_exact_sequence(zero, full, full, f, vanish, delta, hexagon.dimension)
        assert not sequence.exact
