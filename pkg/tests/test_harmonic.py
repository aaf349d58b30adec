"""Multiplication grid, diagonal doublets and the integer-mean cross-check."""

from math import isqrt

import pytest

from goldmean import build_table, cross_check_integer_means, find_doublets, key_rows


class TestBuildTable:
    def test_sample_cells(self):
        table = build_table(10)
        assert table.cells[3][4] == 12
        assert table.cells[9][9] == 81

    def test_single_cell(self):
        assert build_table(1).cells == ((0,),)

    def test_symmetry_and_zero_row(self):
        table = build_table(10)
        for i in range(10):
            assert table.cells[0][i] == 0
            for j in range(10):
                assert table.cells[i][j] == table.cells[j][i]

    def test_size_validation(self):
        with pytest.raises(ValueError):
            build_table(0)


class TestDoublets:
    def test_q_values_for_size_ten(self):
        reports = find_doublets(build_table(10))
        assert [r.q for r in reports] == [0, 2, 6, 12, 20, 30, 42, 56, 72]

    def test_positions_of_twelve(self):
        reports = {r.q: r for r in find_doublets(build_table(10))}
        assert reports[12].positions == ((3, 4), (4, 3))

    def test_size_two_single_doublet(self):
        reports = find_doublets(build_table(2))
        assert len(reports) == 1 and reports[0].q == 0
        assert reports[0].positions == ((0, 1), (1, 0))

    def test_count_is_size_minus_one(self):
        for size in range(2, 13):
            assert len(find_doublets(build_table(size))) == size - 1

    def test_discriminant_link(self):
        for report in find_doublets(build_table(12)):
            disc = 1 + 4 * report.q
            assert isqrt(disc) ** 2 == disc

    def test_deterministic_and_ordered(self):
        table = build_table(10)
        first = find_doublets(table)
        second = find_doublets(table)
        assert first == second
        assert [r.q for r in first] == sorted(r.q for r in first)


class TestKeyRows:
    def test_row_seven(self):
        assert key_rows(7)[7] == (7, 56, 56)

    def test_row_nine(self):
        assert key_rows(9)[9] == (9, 90, 90)

    def test_row_zero(self):
        assert key_rows(0) == [(0, 0, 0)]

    def test_equality_for_all_k(self):
        for k, square_plus, product in key_rows(500):
            assert square_plus == product == k * (k + 1)

    def test_validation(self):
        with pytest.raises(ValueError):
            key_rows(-1)


class TestCrossCheck:
    def test_pairs_for_size_ten(self):
        pairs = cross_check_integer_means(build_table(10))
        assert pairs == [(k * (k + 1), (k, k + 1)) for k in range(9)]

    def test_examples(self):
        lookup = dict(cross_check_integer_means(build_table(10)))
        assert lookup[20] == (4, 5)
        assert lookup[2] == (1, 2)
        assert lookup[0] == (0, 1)
