"""Tests for periodic covers, windows, cutoffs and the cover exact sequence."""

import json
from fractions import Fraction

import pytest

from src.complex import Cochain, class_coordinates
from src.cover import (
    BUNDLED_COVERS,
    CoverCochain,
    CutoffWeights,
    build_window,
    bundled_cover,
    coinvariant_compact_cohomology,
    coinvariant_ranks,
    coinvariant_ranks_report,
    connecting_map,
    corollary_check,
    cover_exact_sequence,
    cutoff,
    cutoff_independence_witness,
    deck_average,
    euclidean_cover,
    h0_check,
    iota_injectivity_check,
    kernel_certificate,
    load_cover,
    required_radius,
    section,
    stable_radius,
    theta_class,
)
from src.cover.sequence import coinvariant_view, quotient_view
from src.errors import ComplexError, DescriptionError, InputError, SupportError, UnsupportedGeometryError, WindowTooSmallError


def vertex(t, value=1):
    return CoverCochain.indicator(0, 0, (t,), value)


class TestWindows:
    """Finite windows and their collars."""

    def test_line_window(self, line):
        window = build_window(line, 1)
        # edges over t = -1, 0, 1 and the vertices they touch
        assert window.complex.counts() == [4, 3]
        assert len(window.collar) == 2
        assert window.is_interior(0, 0, (0,))
        assert window.is_interior(0, 0, (1,))
        assert not window.is_interior(0, 0, (-1,))
        assert not window.is_interior(0, 0, (5,))

    def test_radius_zero_rejected(self, line):
        with pytest.raises(WindowTooSmallError):
            build_window(line, 0)

    def test_required_radius(self, line):
        assert required_radius(line, [(0, 0, (0,))]) == 1
        assert required_radius(line, [(0, 0, (2,))]) == 2

    def test_strip_collar_covers_the_ends(self, strip):
        assert not strip.compact_quotient
        window = build_window(strip, 1)
        assert any(p == 0 for p, _ in window.collar)

    def test_unknown_bundled_cover(self):
        with pytest.raises(ComplexError):
            bundled_cover("z-on-circle")

    def test_bundled_names(self):
        assert set(BUNDLED_COVERS) == {"z-on-r", "z2-on-r2", "z3-on-r3", "strip"}


class TestCutoffs:
    """Weights, sections, the deck average and kernel certificates."""

    @pytest.mark.parametrize("kind", ["domain", "split"])
    def test_weights_sum_to_one(self, plane, kind):
        weights = cutoff(plane, kind)
        assert weights.orbit_sum == 1
        assert all(len(t) == 2 for t in weights.support)

    def test_unknown_kind(self, line):
        with pytest.raises(InputError):
            cutoff(line, "gaussian")

    def test_weights_must_sum_to_one(self):
        with pytest.raises(InputError):
            CutoffWeights("half", 1, (((0,), Fraction(1, 2)),))

    def test_split_section_of_a_vertex(self, line):
        window = build_window(line, 2)
        lifted = section(line, window, Cochain.indicator(0, 0), cutoff(line, "split"))
        assert lifted.coefficients == {(0, (0,)): Fraction(1, 2), (0, (1,)): Fraction(1, 2)}

    def test_section_needs_room(self, line):
        far = CutoffWeights("far", 1, (((2,), Fraction(1)),))
        with pytest.raises(WindowTooSmallError) as info:
            section(line, build_window(line, 1), Cochain.indicator(0, 0), far)
        assert info.value.required_radius == 2

    def test_section_rejects_quotient_collar(self, strip):
        p, j = min(c for c in strip.quotient_collar if c[0] == 0)
        with pytest.raises(SupportError):
            section(strip, build_window(strip, 2), Cochain.indicator(p, j), cutoff(strip))

    def test_deck_average_sums_orbits(self, line):
        window = build_window(line, 2)
        omega = CoverCochain(1, {(0, (0,)): 1, (0, (1,)): 2})
        assert deck_average(line, window, omega) == Cochain(1, {0: 3})

    def test_deck_average_of_section_is_identity(self, line):
        window = build_window(line, 2)
        omega = Cochain.indicator(1, 0, Fraction(5, 3))
        assert deck_average(line, window, section(line, window, omega, cutoff(line, "split"))) == omega

    def test_deck_average_on_the_plane(self, plane):
        window = build_window(plane, 2)
        omega = CoverCochain.indicator(0, 0, (0, 0)) + CoverCochain.indicator(0, 0, (1, 1))
        # two translates of the single quotient vertex
        assert deck_average(plane, window, omega) == Cochain(0, {0: 2})

    def test_deck_average_rejects_collar(self, line):
        with pytest.raises(SupportError):
            deck_average(line, build_window(line, 1), vertex(2))

    def test_kernel_certificate(self, line):
        omega = vertex(-1) + vertex(0, -2) + vertex(1)
        certificate = kernel_certificate(line, omega, cutoff(line))
        assert len(certificate.terms) == 2
        assert certificate.reconstructs()
        assert certificate.manifest()

    def test_kernel_certificate_needs_zero_average(self, line):
        with pytest.raises(SupportError):
            kernel_certificate(line, vertex(0) + vertex(3), cutoff(line))


class TestCoinvariantCohomology:
    """Ranks of the coinvariant compactly supported window complex."""

    def test_line(self, line):
        assert coinvariant_ranks(line) == [0, 1]
        assert coinvariant_compact_cohomology(line, 1, 2) == (1, True)

    def test_plane(self, plane):
        assert coinvariant_ranks(plane) == [0, 1, 2]

    def test_strip(self, strip):
        assert coinvariant_ranks(strip) == [0, 0, 1]

    def test_line_is_stable_from_the_smallest_window(self, line):
        assert coinvariant_ranks(line, 1) == [0, 1]
        assert stable_radius(line) == 1

    def test_report_with_expected_ranks(self, plane):
        report = coinvariant_ranks_report(plane, expected=[0, 1, 2])
        assert report.passed, report.failures()
        assert report.stabilized

    def test_report_flags_wrong_expectation(self, line):
        report = coinvariant_ranks_report(line, expected=[1, 1])
        assert not report.passed
        assert [c.invariant for c in report.failures()] == ["cover.expected_ranks"]

    def test_radius_below_one(self, line):
        with pytest.raises(InputError):
            coinvariant_ranks(line, 0)

    @pytest.mark.slow
    def test_three_space(self):
        assert coinvariant_ranks(bundled_cover("z3-on-r3"), 1) == [0, 1, 3, 3]

    @pytest.mark.slow
    def test_three_space_agrees_at_the_next_radius(self):
        space = bundled_cover("z3-on-r3")
        assert coinvariant_ranks(space, 1) == coinvariant_ranks(space, 2) == [0, 1, 3, 3]
        assert coinvariant_compact_cohomology(space, 3, 1) == (3, True)


class TestCoverExactSequence:
    """Exactness of A → B → C → A[+1] in a window."""

    @pytest.mark.parametrize("kind", ["domain", "split"])
    def test_line(self, line, kind):
        report = cover_exact_sequence(line, cutoff_kind=kind)
        assert report.passed, report.failures()
        assert report.regime == "cover"
        assert report.cutoff == kind
        assert report.stabilized

    def test_strip(self, strip):
        report = cover_exact_sequence(strip)
        assert report.passed, report.failures()
        assert [row.coinvariant_rank for row in report.rows] == [0, 0, 1]

    def test_plane(self, plane):
        report = cover_exact_sequence(plane)
        assert report.passed, report.failures()
        assert report.alternating_sum == 0

    def test_plane_connecting_ranks(self, plane):
        rows = cover_exact_sequence(plane).rows
        assert [row.connecting_rank for row in rows] == [1, 2, 0]
        assert [row.coinvariant_rank for row in rows] == [0, 1, 2]

    @pytest.mark.slow
    def test_three_space(self):
        report = cover_exact_sequence(bundled_cover("z3-on-r3"), 1)
        assert report.passed, report.failures()
        assert report.dimensions == [0, 0, 1, 1, 0, 3, 3, 0, 3, 3, 1, 1]


class TestConsequences:
    """θ, H⁰ vanishing, injectivity of ι and the rank identity."""

    def test_theta_on_the_line(self, line):
        report = theta_class(line)
        assert report.verdict
        assert report.values["rank_h1"] == 1
        assert report.values["spans_h1"]

    def test_theta_defaults_to_the_stable_radius(self, line):
        report = theta_class(line)
        assert report.values["radius"] == stable_radius(line) == 1
        assert report.values["stabilized"]
        assert report.values["rank_h1"] == coinvariant_compact_cohomology(line, 1, 1)[0]

    def test_theta_at_an_explicit_radius(self, line):
        report = theta_class(line, 3)
        assert report.values["radius"] == 3
        assert report.verdict

    def test_theta_needs_compact_quotient(self, strip):
        with pytest.raises(UnsupportedGeometryError):
            theta_class(strip)

    @pytest.mark.parametrize("fixture", ["line", "plane", "strip"])
    def test_h0_vanishes(self, request, fixture):
        report = h0_check(request.getfixturevalue(fixture))
        assert report.verdict
        assert report.values["rank"] == 0

    def test_iota_on_the_strip(self, strip):
        report = iota_injectivity_check(strip)
        assert report.verdict, report.failures()
        assert report.values["kernel_ranks"][:2] == [0, 0]

    def test_iota_needs_the_strip(self, line):
        with pytest.raises(UnsupportedGeometryError):
            iota_injectivity_check(line)

    def test_corollary_on_the_plane(self, plane):
        report = corollary_check(plane)
        assert report.passed, report.failures()
        assert [(r.coinvariant_rank, r.quotient_rank) for r in report.rows] == [(1, 1), (2, 2)]

    @pytest.mark.slow
    def test_corollary_on_three_space(self):
        report = corollary_check(bundled_cover("z3-on-r3"), 1)
        assert report.passed, report.failures()
        assert [(r.coinvariant_rank, r.quotient_rank) for r in report.rows] == [(1, 1), (3, 3), (3, 3)]

    def test_corollary_needs_contractible_cover(self, strip):
        with pytest.raises(UnsupportedGeometryError):
            corollary_check(strip)

    @pytest.mark.slow
    def test_plane_stabilizes(self, plane):
        assert stable_radius(plane) is not None


class TestCoverDocuments:
    """Loading covers from JSON."""

    def test_cubical_slab(self):
        text = json.dumps({"name": "slab", "cubical": {"deck_rank": 1, "widths": [2]}})
        cover = load_cover("slab.json", text)
        assert cover.quotient_collar
        assert coinvariant_ranks(cover) == [0, 0, 1]

    def test_explicit_line(self):
        text = json.dumps({
            "name": "hand-line",
            "deck_rank": 1,
            "contractible": True,
            "quotient": {"cells": [["v"], ["e"]], "boundary": [{"e": {}}]},
            "lifts": [{"e": [["v", [1], 1], ["v", [0], -1]]}],
        })
        cover = load_cover("hand-line.json", text)
        assert coinvariant_ranks(cover, 1) == [0, 1]
        assert theta_class(cover, 1).verdict

    def test_lifts_must_push_down(self):
        text = json.dumps({
            "deck_rank": 1,
            "quotient": {"cells": [["v"], ["e"]], "boundary": [{"e": {}}]},
            "lifts": [{"e": [["v", [1], 1]]}],
        })
        with pytest.raises(DescriptionError):
            load_cover("broken.json", text)

    def test_two_sources_rejected(self):
        text = json.dumps({"cubical": {"deck_rank": 1}, "deck_rank": 1,
                           "quotient": {"simplices": [[0, 1]]}})
        with pytest.raises(DescriptionError):
            load_cover("both.json", text)


class TestConnectingMap:
    """δ[ω] = [d(section ω)] on the line."""

    def test_constant_function(self, line):
        window = build_window(line, 2)
        delta = connecting_map(line, window, cutoff(line), Cochain.indicator(0, 0))
        assert delta.average_vanishes
        assert delta.coinvariant
        assert delta.nonzero
        # d of the vertex indicator at t = 0 on the edges t = -1 and t = 0
        assert len(delta.representative.support) == 2

    def test_cutoffs_give_the_same_class(self, line):
        window = build_window(line, 2)
        assert cutoff_independence_witness(line, window, Cochain.indicator(0, 0)) is not None

    def test_top_degree_maps_to_zero(self, line):
        window = build_window(line, 2)
        delta = connecting_map(line, window, cutoff(line, "split"), Cochain.indicator(1, 0))
        assert not delta.nonzero

    def test_requires_closed_cochain(self):
        circle2 = euclidean_cover(1, period=2)
        with pytest.raises(InputError):
            connecting_map(circle2, build_window(circle2, 1), cutoff(circle2), Cochain.indicator(0, 0))

    def test_torus_generators_map_to_independent_classes(self, plane):
        window = build_window(plane, 2)
        generators = quotient_view(plane).representatives(1)
        assert generators.shape[1] == 2
        A = coinvariant_view(window)
        classes = A.representatives(2)
        coordinates = []
        for k in range(2):
            delta = connecting_map(plane, window, cutoff(plane), Cochain.from_column(1, generators, k))
            assert delta.nonzero
            assert delta.average_vanishes
            coordinates.append(class_coordinates(window.complex, 2, classes, delta.representative,
                                                 A.subspace).coordinates)
        (a, b), (c, d) = coordinates
        assert a * d - b * c != 0
