# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
import pytest

from contagrid import loader
from contagrid.closed_forms import gamma
from contagrid.grid import GridDims
from contagrid.render import render_table, table_cells
from contagrid.search import PruneConfig, enumerate_optimal, odd_column_restriction_applies


def _alpha(dims):
    k = gamma(dims).value
    prune = PruneConfig(True, True, dims.cols >= 7 and odd_column_restriction_applies(dims, k))
    return enumerate_optimal(dims, prune=prune).count


def test_gamma_golden_table(resources):
    values = {(dims.rows, dims.cols): gamma(dims).value for dims in table_cells(15, 15)}
    assert render_table(values, 15, 15) == (resources / 'gamma_table_15.csv').read_text()  # noqa: S101  # nosec


def test_alpha_golden_table(resources):
    values = {(dims.rows, dims.cols): _alpha(dims) for dims in table_cells(6, 6)}
    assert render_table(values, 6, 6) == (resources / 'alpha_table_6.csv').read_text()  # noqa: S101  # nosec


@pytest.mark.slow
def test_alpha_reference_values(max_n):
    bound = min(max_n, loader.ALPHA_TABLE_MAX)
    failures = [f'{n}x{m}' for (n, m), value in sorted(loader.ALPHA_TABLE.items())
                if 7 <= m <= bound and (n, m) != (7, 7) and _alpha(GridDims(n, m)) != value]
    assert not failures  # noqa: S101  # nosec


@pytest.mark.slow
def test_square_7x7():
    count = _alpha(GridDims(7, 7))
    assert count == loader.ALPHA_TABLE[(7, 7)] == len(loader.SQUARE7_PERMUTATIONS)  # noqa: S101  # nosec
