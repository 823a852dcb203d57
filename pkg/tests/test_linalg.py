"""Tests for the exact linear algebra layer and the dense oracle."""

from fractions import Fraction

import pytest

from src.linalg import exact
from src.linalg.oracle import oracle_rank, row_echelon


class TestScalars:
    """Rational scalar conversion."""

    def test_string_fractions(self):
        assert exact.to_fraction(exact.to_qq("3/6")) == Fraction(1, 2)
        assert exact.fraction_text(Fraction(-4, 2)) == "-2"

    def test_booleans_rejected(self):
        with pytest.raises(TypeError):
            exact.to_qq(True)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            exact.to_qq(0.5)


class TestMatrices:
    """Sparse matrix helpers."""

    @pytest.fixture
    def m(self):
        # rows (1, 2, 3), (2, 4, 6), (0, 1, 1)
        return exact.matrix((3, 3), {
            (0, 0): 1, (0, 1): 2, (0, 2): 3,
            (1, 0): 2, (1, 1): 4, (1, 2): 6,
            (2, 1): 1, (2, 2): 1,
        })

    def test_rank(self, m):
        assert exact.rank(m) == 2
        assert exact.rank(exact.identity(4)) == 4
        assert exact.rank(exact.zeros(3, 2)) == 0

    def test_nullspace(self, m):
        kernel = exact.nullspace_basis(m)
        assert kernel.shape == (3, 1)
        assert exact.is_zero(exact.matmul(m, kernel))

    def test_column_basis_keeps_earliest(self, m):
        assert exact.pivot_columns(m) == (0, 1)
        assert exact.column_basis(m).shape == (3, 2)

    def test_solve(self):
        a = exact.matrix((2, 2), {(0, 0): 2, (1, 1): 3})
        assert exact.solve(a, {0: 1, 1: 1}) == {0: Fraction(1, 2), 1: Fraction(1, 3)}

    def test_solve_inconsistent(self, m):
        assert exact.solve(m, {0: 1}) is None
        solutions, failed = exact.solve_many(m, exact.from_columns([{0: 1, 1: 2}, {0: 1}], 3))
        assert solutions is None
        assert failed == 1

    def test_in_span(self, m):
        assert exact.in_span(m, exact.from_columns([{0: 2, 1: 4}], 3))
        assert not exact.in_span(m, exact.from_columns([{0: 1}], 3))

    def test_intersection(self):
        a = exact.from_columns([{0: 1}, {1: 1}], 3)
        b = exact.from_columns([{1: 1}, {2: 1}], 3)
        assert exact.intersection_dim(a, b) == 1
        assert exact.in_span(exact.intersection_basis(a, b), exact.from_columns([{1: 1}], 3))

    def test_stacking_empty_blocks(self):
        assert exact.hstack([], 3).shape == (3, 0)
        assert exact.hstack([exact.zeros(2, 0), exact.identity(2)]).shape == (2, 2)

    def test_apply(self, m):
        assert exact.apply(m, {0: 1, 2: Fraction(1, 3)}) == {0: Fraction(2), 1: Fraction(4), 2: Fraction(1, 3)}

    def test_gram(self):
        weights = exact.matrix((2, 2), {(0, 0): 2, (1, 1): 1})
        v = exact.from_columns([{0: 1, 1: 1}], 2)
        assert exact.entries(exact.gram(v, weights, v)) == {(0, 0): Fraction(3)}


class TestOracle:
    """Dense Fraction elimination."""

    def test_rank(self):
        rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
        assert oracle_rank(rows) == 1
        assert oracle_rank([]) == 0

    def test_row_echelon_pivots(self):
        rows = [[Fraction(0), Fraction(1), Fraction(1)], [Fraction(1), Fraction(0), Fraction(1)]]
        assert row_echelon(rows) == [0, 1]
