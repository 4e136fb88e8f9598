# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
import math

import pytest

from contagrid import search
from contagrid.exceptions import BudgetExceeded, InputNotValid, PruneNotApplicable
from contagrid.grid import CellSet, GridDims
from contagrid.search import PruneConfig, SearchBudget


class TestCombinations:
    @pytest.mark.parametrize('indices, rank', [
        pytest.param([0, 1], 0, id='first'),
        pytest.param([0, 2], 1, id='second'),
        pytest.param([2, 4], 8, id='middle'),
        pytest.param([3, 4], 9, id='last'),
    ])
    def test_rank_unrank(self, indices, rank):
        assert search.rank_colex(indices) == rank  # noqa: S101  # nosec
        assert search.unrank_colex(rank, 5, 2) == indices  # noqa: S101  # nosec

    def test_unrank_out_of_range(self):
        with pytest.raises(InputNotValid):
            search.unrank_colex(10, 5, 2)

    def test_next_combination(self):
        assert search.next_combination(0b011) == 0b101  # noqa: S101  # nosec
        assert search.next_combination(0b0110) == 0b1001  # noqa: S101  # nosec

    def test_iteration_is_numeric_order(self):
        assert list(search.iter_combinations(4, 2, 0, 6)) == [3, 5, 6, 9, 10, 12]  # noqa: S101  # nosec
        assert list(search.iter_combinations(4, 2, 2, 4)) == [6, 9]  # noqa: S101  # nosec
        assert list(search.iter_combinations(4, 0, 0, 1)) == [0]  # noqa: S101  # nosec

    @pytest.mark.parametrize('total, jobs', [(100, 1), (100, 3), (5, 4), (1, 8)])
    def test_split_covers_range(self, total, jobs):
        parts = search._split(total, jobs)
        assert parts[0][0] == 0 and parts[-1][1] == total  # noqa: S101  # nosec
        assert all(first[1] == second[0] for first, second in zip(parts, parts[1:]))  # noqa: S101  # nosec


class TestEnumeration:
    def test_3x3(self):
        result = search.enumerate_optimal(GridDims(3, 3), materialize=True)
        assert result.count == 2  # noqa: S101  # nosec
        assert [w.to_text() for w in result.witnesses] == ['1,1;3,3', '1,3;3,1']  # noqa: S101  # nosec
        assert result.candidates_examined == math.comb(9, 2)  # noqa: S101  # nosec

    @pytest.mark.parametrize('prune', [
        pytest.param(PruneConfig(), id='none'),
        pytest.param(PruneConfig(use_boundary_prune=True), id='boundary'),
        pytest.param(PruneConfig(use_empty_pair_prune=True), id='empty pair'),
        pytest.param(PruneConfig(True, True), id='both'),
    ])
    def test_3x4(self, prune):
        assert search.enumerate_optimal(GridDims(3, 4), prune=prune).count == 20  # noqa: S101  # nosec

    def test_prunes_examine_fewer(self):
        plain = search.enumerate_optimal(GridDims(4, 4))
        pruned = search.enumerate_optimal(GridDims(4, 4), prune=PruneConfig(True, True))
        assert plain.count == pruned.count == 12  # noqa: S101  # nosec
        assert pruned.candidates_examined < plain.candidates_examined  # noqa: S101  # nosec

    def test_odd_columns(self):
        prune = PruneConfig(use_odd_column_restriction=True)
        result = search.enumerate_optimal(GridDims(3, 5), prune=prune)
        assert result.count == 10  # noqa: S101  # nosec
        assert result.candidates_examined == 27  # noqa: S101  # nosec
        assert PruneConfig.every().names() == ['boundary', 'empty-pair', 'odd-column']  # noqa: S101  # nosec

    @pytest.mark.parametrize('dims, k', [
        pytest.param(GridDims(3, 4), 3, id='even columns'),
        pytest.param(GridDims(3, 5), 4, id='k too large'),
    ])
    def test_odd_columns_not_applicable(self, dims, k):
        with pytest.raises(PruneNotApplicable):
            search.enumerate_subsets(dims, k, prune=PruneConfig(use_odd_column_restriction=True))

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as err:
            search.enumerate_subsets(GridDims(4, 4), 3, SearchBudget(100))
        assert err.value.candidates == 560  # noqa: S101  # nosec
        forced = search.enumerate_subsets(GridDims(4, 4), 3, SearchBudget(100, force=True))
        assert forced.count == 12  # noqa: S101  # nosec

    def test_invalid_arguments(self):
        with pytest.raises(InputNotValid):
            search.enumerate_subsets(GridDims(2, 2), 5)
        with pytest.raises(InputNotValid):
            search.enumerate_subsets(GridDims(2, 2), 2, jobs=0)

    def test_workers_do_not_change_output(self):
        single = search.enumerate_optimal(GridDims(3, 4), materialize=True)
        pooled = search.enumerate_optimal(GridDims(3, 4), materialize=True, jobs=2)
        assert single.to_json() == pooled.to_json()  # noqa: S101  # nosec

    def test_to_json(self):
        data = search.enumerate_optimal(GridDims(2, 2), prune=PruneConfig(True)).to_json()
        assert data == {'dims': {'n': 2, 'm': 2}, 'k': 2, 'count': 2, 'prunes': ['boundary'],  # noqa: S101  # nosec
                        'candidates': 2}


@pytest.mark.parametrize('dims, res', [
    pytest.param(GridDims(1, 1), 1, id='1x1'),
    pytest.param(GridDims(2, 4), 3, id='2x4'),
    pytest.param(GridDims(2, 3), 3, id='2x3'),
    pytest.param(GridDims(4, 5), 3, id='4x5'),
])
def test_brute_gamma(dims, res):
    value, witness = search.brute_gamma(dims, prune=PruneConfig.every())
    assert value == res  # noqa: S101  # nosec
    assert len(witness) == res  # noqa: S101  # nosec


class TestFeasible:
    @pytest.mark.parametrize('bits, res', [
        pytest.param(0b10101, True, id='alternating'),
        pytest.param(0b11111, True, id='all'),
        pytest.param(0b10011, False, id='two clean neighbours'),
        pytest.param(0b01111, False, id='last end clean'),
    ])
    def test_path_feasible(self, bits, res):
        assert search.path_feasible(5, bits) is res  # noqa: S101  # nosec

    def test_path_counts_are_fibonacci(self):
        assert [search.path_feasible_count(m) for m in range(1, 9)] == [1, 1, 2, 3, 5, 8, 13, 21]  # noqa: S101  # nosec

    def test_validation(self):
        assert search.validate_path_characterisation(10) == 10  # noqa: S101  # nosec

    def test_one_row(self):
        assert search.count_feasible(GridDims(1, 5)).count == 5  # noqa: S101  # nosec
        assert search.count_feasible(GridDims(5, 1)).count == 5  # noqa: S101  # nosec
        raw = search.count_feasible(GridDims(1, 5), materialize=True)
        assert raw.count == 5 and raw.candidates_examined == 32  # noqa: S101  # nosec
        assert raw.witnesses[0].to_text() == '1,1;1,2;1,3;1,4;1,5'  # noqa: S101  # nosec

    def test_2x2(self):
        assert search.count_feasible(GridDims(2, 2)).count == 7  # noqa: S101  # nosec

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            search.count_feasible(GridDims(4, 4), SearchBudget(1000))


class TestReports:
    @pytest.mark.parametrize('dims', [GridDims(3, 3), GridDims(2, 4), GridDims(3, 5)])
    def test_prune_equivalence(self, dims):
        report = search.verify_prune_equivalence(dims)
        assert report.passed  # noqa: S101  # nosec
        assert not report.odd_column_counterexamples  # noqa: S101  # nosec

    def test_prune_equivalence_skips_odd_columns(self):
        report = search.verify_prune_equivalence(GridDims(2, 4))
        assert report.skipped == ['odd-column']  # noqa: S101  # nosec
        assert len(report.checks) == 3  # noqa: S101  # nosec

    def test_lifting(self):
        report = search.lift_solutions(GridDims(3, 5))
        assert (report.small_count, report.count, report.lifted_count) == (2, 10, 6)  # noqa: S101  # nosec
        assert report.passed  # noqa: S101  # nosec

    @pytest.mark.parametrize('dims', [GridDims(3, 6), GridDims(2, 5), GridDims(3, 3)])
    def test_lifting_domain(self, dims):
        with pytest.raises(InputNotValid):
            search.lift_solutions(dims)

    def test_restrict_columns(self):
        dims = GridDims(3, 5)
        seeds = CellSet.from_text(dims, '1,1;3,3;2,5')
        assert search.restrict_columns(seeds, 3).to_text() == '1,1;3,3'  # noqa: S101  # nosec

    def test_speed_profile(self):
        profile = search.speed_profile(GridDims(3, 3))
        assert profile.histogram == {3: 2}  # noqa: S101  # nosec
        assert (profile.min_rounds, profile.max_rounds) == (3, 3)  # noqa: S101  # nosec
        assert profile.to_json()['fastest'] == '1,1;3,3'  # noqa: S101  # nosec
