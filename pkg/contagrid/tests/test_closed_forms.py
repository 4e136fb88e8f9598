# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
import pytest

from contagrid import closed_forms, loader
from contagrid.exceptions import InputNotValid
from contagrid.grid import CellSet, GridDims, closure


@pytest.mark.parametrize('dims, res', [
    pytest.param(GridDims(2, 7), 5, id='two rows, odd'),
    pytest.param(GridDims(1, 1), 1, id='single cell'),
    pytest.param(GridDims(4, 5), 3, id='4x5'),
    pytest.param(GridDims(3, 3), 2, id='3x3'),
    pytest.param(GridDims(7, 7), 4, id='7x7'),
    pytest.param(GridDims(7, 2), 5, id='vertical grid'),
    pytest.param(GridDims(1, 6), 4, id='path'),
])
def test_gamma(dims, res):
    value = closed_forms.gamma(dims)
    assert value.value == res  # noqa: S101  # nosec
    assert value.method is closed_forms.GammaMethod.theorem  # noqa: S101  # nosec


def test_gamma_matches_golden_table():
    for (n, m), value in loader.GAMMA_TABLE.items():
        assert closed_forms.gamma(GridDims(n, m)).value == value, f'{n}x{m}'  # noqa: S101  # nosec
    assert len(loader.GAMMA_TABLE) == 120  # noqa: S101  # nosec


class TestRecurrences:
    @pytest.mark.parametrize('m', range(4, 25))
    def test_path_by_fours(self, m):
        assert closed_forms.gamma_rec_path4(m) == closed_forms.gamma_path(m)  # noqa: S101  # nosec

    def test_column_recurrence(self):
        assert closed_forms.gamma_rec_col(GridDims(3, 4)) == 3  # noqa: S101  # nosec
        assert closed_forms.gamma_rec_col(GridDims(5, 9)) == 5  # noqa: S101  # nosec

    @pytest.mark.parametrize('dims, p, q', [
        pytest.param(GridDims(6, 10), 3, 3, id='both sides'),
        pytest.param(GridDims(3, 4), 0, 1, id='one odd column off an even grid'),
        pytest.param(GridDims(5, 8), 2, 5, id='largest reduction'),
    ])
    def test_pq_recurrence(self, dims, p, q):
        assert closed_forms.gamma_rec_pq(dims, p, q) == closed_forms.gamma(dims).value  # noqa: S101  # nosec

    @pytest.mark.parametrize('call', [
        pytest.param(lambda: closed_forms.gamma_rec_path4(3), id='short path'),
        pytest.param(lambda: closed_forms.gamma_rec_col(GridDims(3, 3)), id='square grid'),
        pytest.param(lambda: closed_forms.gamma_rec_col(GridDims(2, 5)), id='two rows'),
        pytest.param(lambda: closed_forms.gamma_rec_pq(GridDims(3, 3), 1, 0), id='p too large'),
        pytest.param(lambda: closed_forms.gamma_rec_pq(GridDims(4, 5), 0, 2), id='m - q < n - p'),
        pytest.param(lambda: closed_forms.gamma_path(0), id='empty path'),
    ])
    def test_outside_domain(self, call):
        with pytest.raises(InputNotValid):
            call()

    @pytest.mark.parametrize('dims', [GridDims(1, 9), GridDims(3, 8), GridDims(9, 4), GridDims(2, 2)])
    def test_cross_check(self, dims):
        values = closed_forms.gamma_cross_check(dims)
        assert len({value.value for value in values}) == 1  # noqa: S101  # nosec
        assert values[0].method is closed_forms.GammaMethod.theorem  # noqa: S101  # nosec


def test_conjecture1_differs_on_4x5():
    dims = GridDims(4, 5)
    assert closed_forms.conjecture1_gamma(dims) == 4  # noqa: S101  # nosec
    assert closed_forms.gamma(dims).value == 3  # noqa: S101  # nosec


def test_lower_bound():
    assert [closed_forms.gamma_lower_bound(m) for m in range(1, 7)] == [1, 2, 2, 3, 3, 4]  # noqa: S101  # nosec


class TestConstructions:
    def test_zigzag_row(self):
        assert [closed_forms.zigzag_row(4, col) for col in range(1, 9)] == [  # noqa: S101  # nosec
            1, 2, 3, 4, 3, 2, 1, 2]
        assert [closed_forms.zigzag_row(2, col) for col in range(1, 5)] == [1, 2, 1, 2]  # noqa: S101  # nosec

    def test_zigzag_seeds_of_4x5(self):
        seeds = closed_forms.zigzag_seeds(GridDims(4, 5))
        assert seeds.to_text() == '1,1;3,3;4,5'  # noqa: S101  # nosec

    @pytest.mark.parametrize('dims', [
        pytest.param(GridDims(1, 4), id='one row'),
        pytest.param(GridDims(5, 4), id='vertical'),
        pytest.param(GridDims(2, 5), id='two rows, odd'),
    ])
    def test_zigzag_seeds_domain(self, dims):
        with pytest.raises(InputNotValid):
            closed_forms.zigzag_seeds(dims)

    @pytest.mark.parametrize('dims', [GridDims(n, m) for n in range(1, 8) for m in range(n, 11)])
    def test_optimal_construction(self, dims):
        seeds = closed_forms.optimal_construction(dims)
        assert len(seeds) == closed_forms.gamma(dims).value  # noqa: S101  # nosec
        assert closure(dims, seeds).full  # noqa: S101  # nosec

    def test_two_row_odd(self):
        assert closed_forms.tworow_odd_seeds(5).to_text() == '1,1;1,3;1,5;2,5'  # noqa: S101  # nosec
        with pytest.raises(InputNotValid):
            closed_forms.tworow_odd_seeds(4)

    def test_path_seeds(self):
        assert closed_forms.path_seeds(4).to_text() == '1,1;1,3;1,4'  # noqa: S101  # nosec
        assert closed_forms.path_seeds(1).to_text() == '1,1'  # noqa: S101  # nosec

    @pytest.mark.parametrize('m', range(1, 10))
    def test_diagonal(self, m):
        assert closure(GridDims(m, m), closed_forms.diagonal_seeds(m)).full  # noqa: S101  # nosec

    @pytest.mark.parametrize('dims', [GridDims(2, 2), GridDims(3, 7), GridDims(4, 6)])
    def test_zigzag_path_fills(self, dims):
        path = CellSet.from_cells(dims, closed_forms.zigzag_path(dims))
        assert closure(dims, path).full  # noqa: S101  # nosec
