# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Counting formulas for optimal and feasible sets, word and permutation encodings of solutions"""
import dataclasses
import enum
import functools
import itertools
import logging
import math
import typing

import numpy as np

from contagrid import loader
from contagrid.closed_forms import gamma
from contagrid.exceptions import FailedVerification, InputNotValid, StructureError
from contagrid.grid import CellSet, GridDims, closure_bits, layout
from contagrid.search import PruneConfig, SearchBudget, enumerate_optimal

BRUTE_FORCE_WORD_LIMIT = 12

# letter j may follow letter i in a word over {1,2,3} avoiding the factors 13 and 31
TERNARY_TRANSFER = np.array([[1, 1, 0], [1, 1, 1], [0, 1, 1]], dtype=object)

log = logging.getLogger('contagrid')


@enum.unique
class CheckStatus(enum.Enum):
    match = 'match'
    mismatch = 'mismatch'
    not_computed = 'not-computed'


@dataclasses.dataclass(frozen=True)
class SequenceCheck:
    """A formula value next to the enumerated one"""
    name: str
    index: int
    formula_value: int
    enumerated_value: typing.Optional[int] = None

    @property
    def status(self) -> CheckStatus:
        if self.enumerated_value is None:
            return CheckStatus.not_computed
        return CheckStatus.match if self.enumerated_value == self.formula_value else CheckStatus.mismatch

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {'name': self.name, 'index': self.index, 'formula': self.formula_value,
                'enumerated': self.enumerated_value, 'status': self.status.value}


def sequence_checks(name: str, formula: typing.Callable[[int], int],
                    enumerated: typing.Dict[int, int]) -> typing.List[SequenceCheck]:
    return [SequenceCheck(name, index, formula(index), value) for index, value in sorted(enumerated.items())]


def alpha_path_formula(m: int) -> int:
    """1 for odd m, m/2 for even m, cross-checked with a(m) = a(m-2) + 1, a(2) = 1"""
    if m < 1:
        raise InputNotValid(f'Path length must be positive, got {m}')
    if m % 2:
        return 1
    recurrence = 1
    for _ in range(4, m + 1, 2):
        recurrence += 1
    if recurrence != m // 2:
        raise FailedVerification(f'alpha(1,{m}): closed form {m // 2} and recurrence {recurrence} differ')
    return m // 2


def alpha_2row_even(k: int) -> int:
    """k * 2^k, cross-checked with a(k) = 2 a(k-1) + 2^k, a(0) = 0"""
    if k < 0:
        raise InputNotValid(f'k must be non-negative, got {k}')
    recurrence = 0
    for i in range(1, k + 1):
        recurrence = 2 * recurrence + 2 ** i
    closed = k * 2 ** k
    if recurrence != closed:
        raise FailedVerification(f'alpha(2,{2 * k}): closed form {closed} and recurrence {recurrence} differ')
    return closed


def alpha_2row_odd_conjecture(k: int) -> int:
    """(k+1)(3k+2) 2^(k-1), exact for k = 0 as well"""
    if k < 0:
        raise InputNotValid(f'k must be non-negative, got {k}')
    return (k + 1) * (3 * k + 2) * 2 ** k // 2


def clean_columns(solution: CellSet) -> int:
    grid = layout(solution.dims)
    return sum(1 for mask in grid.col_masks if not solution.bits & mask)


def classify_clean_columns(dims: GridDims, solutions: typing.Iterable[CellSet]) -> typing.Dict[int, int]:
    """Histogram of optimal G(2, 2k+1) solutions by number of seed-free columns"""
    if dims.rows != 2 or dims.cols % 2 == 0 or dims.cols < 3:
        raise InputNotValid(f'Clean-column classification needs a grid G(2, 2k+1) with k >= 1, got {dims}')
    k = dims.cols // 2
    histogram: typing.Dict[int, int] = {}
    for solution in solutions:
        clean = clean_columns(solution)
        histogram[clean] = histogram.get(clean, 0) + 1
    unexpected = set(histogram) - {k - 1, k}
    if unexpected:
        raise FailedVerification(f'{dims}: solutions with {sorted(unexpected)} clean columns, expected {k - 1} or {k}')
    if histogram.get(k, 0) != (k + 1) * 2 ** k:
        raise FailedVerification(f'{dims}: {histogram.get(k, 0)} solutions with {k} clean columns, '
                                 f'expected {(k + 1) * 2 ** k}')
    return dict(sorted(histogram.items()))


def ternary_avoiding(length: int) -> int:
    """Words of {1,2,3}^length with neither 13 nor 31 as a factor"""
    if length < 1:
        raise InputNotValid(f'Word length must be positive, got {length}')
    power = np.linalg.matrix_power(TERNARY_TRANSFER, length - 1)
    return int(power.sum())


def _ternary_containing_brute(length: int) -> int:
    return sum(1 for word in itertools.product('123', repeat=length)
               if '13' in ''.join(word) or '31' in ''.join(word))


def ternary_containing(length: int) -> int:
    """Words of {1,2,3}^length with 13 or 31 as a factor"""
    value = 3 ** length - ternary_avoiding(length)
    if length <= BRUTE_FORCE_WORD_LIMIT:
        brute = _ternary_containing_brute(length)
        if brute != value:
            raise FailedVerification(f'Transfer count {value} and brute force {brute} differ at length {length}')
    return value


@functools.lru_cache(maxsize=None)
def schroder(k: int) -> int:
    """Large Schroder numbers 1, 2, 6, 22, 90, 394, ..."""
    if k < 0:
        raise InputNotValid(f'k must be non-negative, got {k}')
    if k == 0:
        return 1
    return schroder(k - 1) + sum(schroder(i) * schroder(k - 1 - i) for i in range(k))


def fibonacci(index: int) -> int:
    """F(0) = 0, F(1) = 1"""
    previous, current = 0, 1
    for _ in range(index):
        previous, current = current, previous + current
    return previous


@dataclasses.dataclass(frozen=True)
class Perm:
    """Permutation of 1..k in one-line notation"""
    values: typing.Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise InputNotValid(f'{self.values} is not a permutation of 1..{len(self.values)}')

    @classmethod
    def from_text(cls, text: str) -> 'Perm':
        return cls(tuple(int(char) for char in text))

    def __str__(self) -> str:
        return ''.join(map(str, self.values)) if len(self.values) < 10 else '-'.join(map(str, self.values))

    def __len__(self) -> int:
        return len(self.values)

    def reverse_complement(self) -> 'Perm':
        k = len(self.values)
        return Perm(tuple(k + 1 - value for value in reversed(self.values)))


def standardize(values: typing.Sequence[int]) -> Perm:
    """Replace distinct values by their ranks"""
    ranks = {value: rank for rank, value in enumerate(sorted(values), start=1)}
    return Perm(tuple(ranks[value] for value in values))


def contains_pattern(sigma: typing.Union[Perm, typing.Sequence[int]],
                     pi: typing.Union[Perm, typing.Sequence[int]]) -> bool:
    """True if some subsequence of sigma is order-isomorphic to pi"""
    sigma_values = sigma.values if isinstance(sigma, Perm) else tuple(sigma)
    pattern = standardize(pi.values if isinstance(pi, Perm) else tuple(pi))
    if len(pattern) > len(sigma_values):
        return False
    return any(standardize(sub) == pattern for sub in itertools.combinations(sigma_values, len(pattern)))


def avoids_all(sigma: typing.Union[Perm, typing.Sequence[int]], patterns: typing.Iterable[str]) -> bool:
    return not any(contains_pattern(sigma, Perm.from_text(pattern)) for pattern in patterns)


@dataclasses.dataclass(frozen=True)
class PermWord:
    """Seed rows of a square odd grid, read along the odd columns"""
    values: typing.Tuple[int, ...]

    def __str__(self) -> str:
        return ''.join(map(str, self.values)) if max(self.values) < 10 else '-'.join(map(str, self.values))

    @property
    def image(self) -> Perm:
        return standardize(self.values)


def _square_k(dims: GridDims) -> int:
    if dims.rows != dims.cols or dims.rows % 2 == 0:
        raise InputNotValid(f'Permutation encoding needs an odd square grid, got {dims}')
    return dims.rows // 2


def perm_encode(dims: GridDims, solution: CellSet) -> PermWord:
    """Rows of the seeds in columns 1, 3, ..., 2k+1"""
    _square_k(dims)
    rows_by_col: typing.Dict[int, int] = {}
    for cell in solution:
        if cell.col % 2 == 0 or cell.row % 2 == 0:
            raise StructureError(f'Seed {cell} of {solution} is not on an odd row and an odd column')
        if cell.col in rows_by_col:
            raise StructureError(f'Column {cell.col} of {solution} holds more than one seed')
        rows_by_col[cell.col] = cell.row
    cols = list(range(1, dims.cols + 1, 2))
    if sorted(rows_by_col) != cols or sorted(rows_by_col.values()) != cols:
        raise StructureError(f'{solution} does not place one seed per odd row and odd column')
    return PermWord(tuple(rows_by_col[col] for col in cols))


def perm_decode(k: int, word: typing.Union[PermWord, typing.Sequence[int], str]) -> CellSet:
    if isinstance(word, str):
        values: typing.Tuple[int, ...] = tuple(int(char) for char in word)
    elif isinstance(word, PermWord):
        values = word.values
    else:
        values = tuple(word)
    odd = list(range(1, 2 * k + 2, 2))
    if sorted(values) != odd:
        raise InputNotValid(f'{values} is not a permutation of {odd}')
    dims = GridDims(2 * k + 1, 2 * k + 1)
    return CellSet.from_cells(dims, [(row, col) for row, col in zip(values, odd)])


@dataclasses.dataclass
class PatternReport:
    """Optimal solutions of G(2k+1, 2k+1) against permutations avoiding the forbidden patterns"""
    k: int
    optimal: typing.List[str]
    avoiding: typing.List[str]
    non_optimal: typing.List[str]
    not_encodable: typing.List[str]

    @property
    def coincide(self) -> bool:
        return self.optimal == self.avoiding and not self.not_encodable

    @property
    def exceptions(self) -> typing.List[str]:
        return sorted(set(self.optimal) ^ set(self.avoiding))

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            'k': self.k,
            'optimal_count': len(self.optimal),
            'candidates': math.factorial(self.k + 1),
            'schroder': schroder(self.k),
            'coincide': self.coincide,
            'optimal': self.optimal,
            'non_optimal': self.non_optimal,
            'exceptions': self.exceptions,
            'not_encodable': self.not_encodable,
        }


def square_pattern_report(k: int, budget: SearchBudget = SearchBudget(),
                          use_odd_columns: typing.Optional[bool] = None, jobs: int = 1) -> PatternReport:
    """Encode every optimal solution as a permutation of odd rows and compare with pattern avoidance"""
    if k < 0:
        raise InputNotValid(f'k must be non-negative, got {k}')
    dims = GridDims(2 * k + 1, 2 * k + 1)
    if use_odd_columns is None:
        use_odd_columns = k >= 4
    prune = PruneConfig(use_odd_column_restriction=use_odd_columns)
    result = enumerate_optimal(dims, budget, prune, materialize=True, jobs=jobs)
    optimal, not_encodable = set(), []
    for witness in result.witnesses or ():
        try:
            optimal.add(str(perm_encode(dims, witness)))
        except StructureError:
            not_encodable.append(witness.to_text())
    odd = range(1, 2 * k + 2, 2)
    candidates = [PermWord(values) for values in itertools.permutations(odd)]
    avoiding = sorted(str(word) for word in candidates if avoids_all(word.image, loader.FORBIDDEN_PATTERNS))
    non_optimal = sorted(str(word) for word in candidates if str(word) not in optimal)
    log.debug(f'G({dims.rows},{dims.cols}): {len(optimal)} optimal permutations, {len(avoiding)} avoiding')
    return PatternReport(k, sorted(optimal), avoiding, non_optimal, not_encodable)


@dataclasses.dataclass(frozen=True)
class ColWord:
    """Column letters: 0 for a clean column, otherwise the row of its single seed"""
    letters: typing.Tuple[int, ...]

    def __post_init__(self):
        if any(letter not in (0, 1, 2, 3) for letter in self.letters):
            raise InputNotValid(f'Column word letters must be 0..3, got {self.letters}')

    @classmethod
    def from_text(cls, text: str) -> 'ColWord':
        return cls(tuple(int(char) for char in text))

    def __str__(self) -> str:
        return ''.join(map(str, self.letters))


def word_encode_3rows(dims: GridDims, solution: CellSet) -> ColWord:
    if dims.rows != 3:
        raise InputNotValid(f'Column words are defined for three-row grids, got {dims}')
    letters = [0] * dims.cols
    for cell in solution:
        if letters[cell.col - 1]:
            raise StructureError(f'Column {cell.col} of {solution} holds more than one seed')
        letters[cell.col - 1] = cell.row
    return ColWord(tuple(letters))


WORD_READINGS = ('factor', 'subsequence')


def _has_subsequence(text: str, letters: str) -> bool:
    remaining = iter(text)
    return all(letter in remaining for letter in letters)


def check_3row_even_constraints(word: typing.Union[ColWord, str], reading: str = 'factor') -> bool:
    """No factor 00, and one of: (12 or 21, and a 3), (23 or 32, and a 1), (103 or 301)

    The factor reading needs 103 or 301 as consecutive letters; the subsequence reading only needs
    1, 0, 3 or 3, 0, 1 in that order.
    """
    if reading not in WORD_READINGS:
        raise InputNotValid(f'Unknown word reading "{reading}", available: {", ".join(WORD_READINGS)}')
    text = str(word)
    if '00' in text:
        return False
    top = ('12' in text or '21' in text) and '3' in text
    bottom = ('23' in text or '32' in text) and '1' in text
    if reading == 'factor':
        split = '103' in text or '301' in text
    else:
        split = _has_subsequence(text, '103') or _has_subsequence(text, '301')
    return top or bottom or split


@dataclasses.dataclass
class SufficiencyReport:
    """How often the three-row word constraints single out optimal solutions of G(3, 2k)"""
    k: int
    reading: str
    configurations: int
    passing: int
    passing_optimal: int
    optimal: int
    rejected_optimal: typing.List[str]

    @property
    def necessity_holds(self) -> bool:
        return not self.rejected_optimal

    @property
    def rate(self) -> float:
        return self.passing_optimal / self.passing if self.passing else 0.0

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {'k': self.k, 'reading': self.reading, 'configurations': self.configurations,
                'passing': self.passing, 'passing_optimal': self.passing_optimal, 'optimal': self.optimal,
                'rejected_optimal': self.rejected_optimal, 'necessity_holds': self.necessity_holds,
                'rate': round(self.rate, 6)}


def word_sufficiency_rate(k: int, budget: SearchBudget = SearchBudget(),
                          reading: str = 'factor') -> SufficiencyReport:
    """Every size-gamma configuration of G(3, 2k) with at most one seed per column"""
    if k < 1:
        raise InputNotValid(f'k must be positive, got {k}')
    dims = GridDims(3, 2 * k)
    size = gamma(dims).value
    budget.check(math.comb(dims.cols, size) * 3 ** size)
    grid = layout(dims)
    configurations = passing = passing_optimal = optimal = 0
    rejected = []
    for cols in itertools.combinations(range(1, dims.cols + 1), size):
        for rows in itertools.product((1, 2, 3), repeat=size):
            configurations += 1
            cells = list(zip(rows, cols))
            word = ColWord(tuple(dict(zip(cols, rows)).get(col, 0) for col in range(1, dims.cols + 1)))
            passes = check_3row_even_constraints(word, reading)
            full = closure_bits(grid, CellSet.from_cells(dims, cells).bits) == grid.full
            optimal += full
            passing += passes
            passing_optimal += passes and full
            if full and not passes:
                rejected.append(str(word))
    if rejected:
        log.debug(f'G(3,{dims.cols}) {reading} reading rejects {len(rejected)} optimal words: {", ".join(rejected)}')
    return SufficiencyReport(k, reading, configurations, passing, passing_optimal, optimal, sorted(rejected))


@dataclasses.dataclass
class BoundCheck:
    name: str
    bound: int
    alpha: int

    @property
    def holds(self) -> bool:
        return self.alpha <= self.bound


def alpha_upper_bounds(dims: GridDims, alpha: typing.Optional[int] = None,
                       budget: SearchBudget = SearchBudget(), jobs: int = 1) -> typing.List[BoundCheck]:
    """n^gamma for odd m >= n >= 3, and gamma! for odd squares

    Without a supplied alpha the count comes from the safe prunes only, never from the odd-column restriction.
    """
    n, m = dims.rows, dims.cols
    if not (m >= n >= 3 and m % 2 == 1):
        raise InputNotValid(f'Upper bounds need m >= n >= 3 with m odd, got {dims}')
    if alpha is None:
        prune = PruneConfig(use_boundary_prune=True, use_empty_pair_prune=True)
        alpha = enumerate_optimal(dims, budget, prune, jobs=jobs).count
    size = gamma(dims).value
    checks = [BoundCheck('rows-power', n ** size, alpha)]
    if n == m:
        checks.append(BoundCheck('factorial', math.factorial(size), alpha))
    return checks


def beta_path_formulas(m: int) -> typing.Tuple[int, typing.Optional[int]]:
    """Literal one-row feasible-set formulas: 2^((m-1)/2) or the binomial sum, then F(m/2)"""
    if m < 1:
        raise InputNotValid(f'Path length must be positive, got {m}')
    if m % 2:
        return 2 ** ((m - 1) // 2), None
    binomial_sum = sum(math.comb(m - i - 1, i) for i in range(m // 2))
    return binomial_sum, fibonacci(m // 2)


def beta_general_formula(dims: GridDims, alpha: int) -> int:
    """2^(nm - gamma) * alpha"""
    return 2 ** (dims.size - gamma(dims).value) * alpha
