# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
import pytest

from contagrid import combinatorics, loader
from contagrid.combinatorics import CheckStatus, ColWord, Perm, PermWord, SequenceCheck
from contagrid.exceptions import FailedVerification, InputNotValid, StructureError
from contagrid.grid import CellSet, GridDims, closure
from contagrid.search import enumerate_optimal


class TestCountingFormulas:
    @pytest.mark.parametrize('m', range(1, 10))
    def test_alpha_path_matches_table(self, m):
        assert combinatorics.alpha_path_formula(m) == loader.ALPHA_TABLE[(1, m)]  # noqa: S101  # nosec

    def test_alpha_2row_even(self):
        values = [combinatorics.alpha_2row_even(k) for k in range(9)]
        assert tuple(values) == loader.SEQUENCE_PREFIXES['A036289']  # noqa: S101  # nosec

    @pytest.mark.parametrize('k', range(1, 5))
    def test_alpha_2row_odd_matches_table(self, k):
        assert combinatorics.alpha_2row_odd_conjecture(k) == loader.ALPHA_TABLE[(2, 2 * k + 1)]  # noqa: S101  # nosec

    def test_alpha_2row_odd_zero(self):
        assert combinatorics.alpha_2row_odd_conjecture(0) == 1  # noqa: S101  # nosec

    def test_negative_k(self):
        with pytest.raises(InputNotValid):
            combinatorics.alpha_2row_even(-1)
        with pytest.raises(InputNotValid):
            combinatorics.schroder(-1)

    def test_ternary_words(self):
        assert [combinatorics.ternary_avoiding(n) for n in range(1, 5)] == [3, 7, 17, 41]  # noqa: S101  # nosec
        assert [combinatorics.ternary_containing(n) for n in range(1, 5)] == [0, 2, 10, 40]  # noqa: S101  # nosec

    def test_ternary_large_length_skips_brute_force(self):
        length = combinatorics.BRUTE_FORCE_WORD_LIMIT + 8
        value = combinatorics.ternary_containing(length)
        assert value == 3 ** length - combinatorics.ternary_avoiding(length)  # noqa: S101  # nosec

    def test_schroder(self):
        values = tuple(combinatorics.schroder(k) for k in range(6))
        assert values == loader.SEQUENCE_PREFIXES['A006318']  # noqa: S101  # nosec

    def test_fibonacci(self):
        assert [combinatorics.fibonacci(i) for i in range(8)] == [0, 1, 1, 2, 3, 5, 8, 13]  # noqa: S101  # nosec

    def test_beta_path_formulas(self):
        assert combinatorics.beta_path_formulas(4) == (3, 1)  # noqa: S101  # nosec
        assert combinatorics.beta_path_formulas(5) == (4, None)  # noqa: S101  # nosec

    def test_beta_general_formula(self):
        assert combinatorics.beta_general_formula(GridDims(1, 4), 2) == 4  # noqa: S101  # nosec

    @pytest.mark.parametrize('check, status', [
        pytest.param(SequenceCheck('A036289', 2, 8, 8), CheckStatus.match, id='match'),
        pytest.param(SequenceCheck('A036289', 2, 8, 7), CheckStatus.mismatch, id='mismatch'),
        pytest.param(SequenceCheck('A036289', 9, 4608), CheckStatus.not_computed, id='not computed'),
    ])
    def test_sequence_check(self, check, status):
        assert check.status == status  # noqa: S101  # nosec
        assert check.to_json()['status'] == status.value  # noqa: S101  # nosec


class TestCleanColumns:
    def test_2x3(self):
        dims = GridDims(2, 3)
        solutions = enumerate_optimal(dims, materialize=True).witnesses
        assert combinatorics.classify_clean_columns(dims, solutions) == {0: 6, 1: 4}  # noqa: S101  # nosec

    def test_count(self):
        seeds = CellSet.from_text(GridDims(2, 3), '1,1;2,3')
        assert combinatorics.clean_columns(seeds) == 1  # noqa: S101  # nosec

    def test_unexpected_histogram(self):
        dims = GridDims(2, 3)
        with pytest.raises(FailedVerification):
            combinatorics.classify_clean_columns(dims, [CellSet.from_text(dims, '1,1;2,1;1,3')])

    @pytest.mark.parametrize('dims', [GridDims(3, 3), GridDims(2, 4), GridDims(2, 1)])
    def test_domain(self, dims):
        with pytest.raises(InputNotValid):
            combinatorics.classify_clean_columns(dims, [])


class TestPermutations:
    def test_standardize(self):
        assert combinatorics.standardize([5, 1, 3]) == Perm((3, 1, 2))  # noqa: S101  # nosec

    def test_not_a_permutation(self):
        with pytest.raises(InputNotValid):
            Perm((1, 1))

    def test_reverse_complement(self):
        assert str(Perm.from_text('2413').reverse_complement()) == '2413'  # noqa: S101  # nosec
        assert str(Perm.from_text('1342').reverse_complement()) == '3124'  # noqa: S101  # nosec

    @pytest.mark.parametrize('sigma, pattern, res', [
        pytest.param((2, 5, 1, 4, 3), '2413', True, id='embedded'),
        pytest.param((3, 1, 4, 2), '3142', True, id='equal'),
        pytest.param((1, 2, 3, 4, 5), '2413', False, id='increasing'),
        pytest.param((1, 3), '2413', False, id='shorter than pattern'),
    ])
    def test_contains_pattern(self, sigma, pattern, res):
        assert combinatorics.contains_pattern(sigma, Perm.from_text(pattern)) is res  # noqa: S101  # nosec

    def test_missing_7x7_words_contain_forbidden_patterns(self):
        for word in loader.SQUARE7_MISSING:
            image = PermWord(tuple(int(char) for char in word)).image
            assert not combinatorics.avoids_all(image, loader.FORBIDDEN_PATTERNS)  # noqa: S101  # nosec

    def test_encode(self):
        dims = GridDims(3, 3)
        word = combinatorics.perm_encode(dims, CellSet.from_text(dims, '1,3;3,1'))
        assert str(word) == '31' and str(word.image) == '21'  # noqa: S101  # nosec

    @pytest.mark.parametrize('seeds', ['2,2;1,1', '1,1;3,1', '1,1;1,3'])
    def test_encode_structure(self, seeds):
        dims = GridDims(3, 3)
        with pytest.raises(StructureError):
            combinatorics.perm_encode(dims, CellSet.from_text(dims, seeds))

    def test_encode_needs_odd_square(self):
        dims = GridDims(3, 5)
        with pytest.raises(InputNotValid):
            combinatorics.perm_encode(dims, CellSet.from_text(dims, '1,1'))

    def test_decode(self):
        assert combinatorics.perm_decode(1, '31').to_text() == '1,3;3,1'  # noqa: S101  # nosec
        assert combinatorics.perm_decode(2, [1, 5, 3]).to_text() == '1,1;3,5;5,3'  # noqa: S101  # nosec
        with pytest.raises(InputNotValid):
            combinatorics.perm_decode(1, '12')

    @pytest.mark.parametrize('k', [0, 1, 2])
    def test_small_squares(self, k):
        report = combinatorics.square_pattern_report(k)
        assert report.coincide  # noqa: S101  # nosec
        assert len(report.optimal) == combinatorics.schroder(k)  # noqa: S101  # nosec
        assert report.to_json()['exceptions'] == []  # noqa: S101  # nosec


class TestColumnWords:
    def test_encode(self):
        dims = GridDims(3, 4)
        word = combinatorics.word_encode_3rows(dims, CellSet.from_text(dims, '1,1;2,3;3,4'))
        assert str(word) == '1023'  # noqa: S101  # nosec

    def test_encode_two_seeds_in_a_column(self):
        dims = GridDims(3, 4)
        with pytest.raises(StructureError):
            combinatorics.word_encode_3rows(dims, CellSet.from_text(dims, '1,1;3,1'))

    def test_bad_letter(self):
        with pytest.raises(InputNotValid):
            ColWord.from_text('1240')

    @pytest.mark.parametrize('word, factor, subsequence', [
        ('1213', True, True),
        ('1003', False, False),
        ('1030', True, True),
        ('3201', True, True),
        ('1111', False, False),
        ('1303', False, True),
        ('1013', False, True),
        ('3031', False, True),
    ])
    def test_constraints(self, word, factor, subsequence):
        word = ColWord.from_text(word)
        assert combinatorics.check_3row_even_constraints(word) is factor  # noqa: S101  # nosec
        assert combinatorics.check_3row_even_constraints(word, 'subsequence') is subsequence  # noqa: S101  # nosec

    def test_unknown_reading(self):
        with pytest.raises(InputNotValid):
            combinatorics.check_3row_even_constraints('1213', reading='window')

    def test_optimal_word_outside_factor_reading(self):
        dims = GridDims(3, 4)
        seeds = CellSet.from_text(dims, '1,1;3,2;3,4')
        assert closure(dims, seeds).full  # noqa: S101  # nosec
        word = combinatorics.word_encode_3rows(dims, seeds)
        assert str(word) == '1303'  # noqa: S101  # nosec
        assert not combinatorics.check_3row_even_constraints(word)  # noqa: S101  # nosec

    def test_factor_reading_3x4(self):
        report = combinatorics.word_sufficiency_rate(2)
        assert report.configurations == 4 * 27  # noqa: S101  # nosec
        assert report.optimal == loader.ALPHA_TABLE[(3, 4)]  # noqa: S101  # nosec
        assert report.rejected_optimal == ['1013', '1303', '3031', '3101']  # noqa: S101  # nosec
        assert report.passing_optimal == report.optimal - 4  # noqa: S101  # nosec
        assert not report.necessity_holds  # noqa: S101  # nosec
        assert report.to_json()['reading'] == 'factor'  # noqa: S101  # nosec

    @pytest.mark.parametrize('k', [2, 3])
    def test_subsequence_reading_keeps_every_optimal_word(self, k):
        report = combinatorics.word_sufficiency_rate(k, reading='subsequence')
        assert report.necessity_holds and report.rejected_optimal == []  # noqa: S101  # nosec
        assert report.passing_optimal == report.optimal == loader.ALPHA_TABLE[(3, 2 * k)]  # noqa: S101  # nosec
        assert 0 < report.rate <= 1  # noqa: S101  # nosec

    def test_factor_reading_3x6(self):
        report = combinatorics.word_sufficiency_rate(3)
        assert len(report.rejected_optimal) == 14  # noqa: S101  # nosec
        assert {'130302', '130303', '310101'} <= set(report.rejected_optimal)  # noqa: S101  # nosec


class TestUpperBounds:
    def test_3x5(self):
        checks = combinatorics.alpha_upper_bounds(GridDims(3, 5), alpha=10)
        bounds = [(check.name, check.bound, check.holds) for check in checks]
        assert bounds == [('rows-power', 27, True)]  # noqa: S101  # nosec

    def test_5x5(self):
        checks = combinatorics.alpha_upper_bounds(GridDims(5, 5))
        bounds = [(check.name, check.bound) for check in checks]
        assert bounds == [('rows-power', 125), ('factorial', 6)]  # noqa: S101  # nosec
        assert all(check.holds and check.alpha == 6 for check in checks)  # noqa: S101  # nosec

    @pytest.mark.parametrize('dims', [GridDims(3, 4), GridDims(2, 5), GridDims(5, 3)])
    def test_domain(self, dims):
        with pytest.raises(InputNotValid):
            combinatorics.alpha_upper_bounds(dims, alpha=1)


def test_sequence_checks():
    checks = combinatorics.sequence_checks('alpha-path', combinatorics.alpha_path_formula, {4: 2, 6: 4})
    assert [check.status for check in checks] == [CheckStatus.match, CheckStatus.mismatch]  # noqa: S101  # nosec
    expected = {'name': 'alpha-path', 'index': 6, 'formula': 3, 'enumerated': 4, 'status': 'mismatch'}
    assert checks[1].to_json() == expected  # noqa: S101  # nosec
