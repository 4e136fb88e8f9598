# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Exhaustive and pruned search over seed sets: contamination number, optimal and feasible sets

Candidate seed sets are bitboards. k-subsets are visited in colexicographic order, which is the
increasing numeric order of their bitmasks, so a range of combination ranks is a contiguous run of
masks. Ranges are scanned independently, possibly in worker processes, and merged by summing the
counts and sorting the witnesses by canonical text.
"""
import collections
import concurrent.futures
import dataclasses
import functools
import logging
import math
import sys
import typing

from tqdm import tqdm

from contagrid.closed_forms import gamma
from contagrid.exceptions import BudgetExceeded, FailedVerification, InputNotValid, PruneNotApplicable
from contagrid.grid import CellSet, GridDims, closure, closure_bits, layout
from contagrid.utilities import DEFAULT_SEARCH_BUDGET

CHUNKS_PER_JOB = 8
PATH_VALIDATION_LIMIT = 16  # raw check of the one-row characterisation up to this length

log = logging.getLogger('contagrid')


@dataclasses.dataclass(frozen=True)
class PruneConfig:
    """Safe filters applied before a candidate's closure is computed"""
    use_boundary_prune: bool = False
    use_empty_pair_prune: bool = False
    use_odd_column_restriction: bool = False

    @classmethod
    def every(cls) -> 'PruneConfig':
        return cls(True, True, True)

    def names(self) -> typing.List[str]:
        flags = (
            (self.use_boundary_prune, 'boundary'),
            (self.use_empty_pair_prune, 'empty-pair'),
            (self.use_odd_column_restriction, 'odd-column'),
        )
        return [name for enabled, name in flags if enabled]

    def without_odd_columns(self) -> 'PruneConfig':
        return dataclasses.replace(self, use_odd_column_restriction=False)


@dataclasses.dataclass(frozen=True)
class SearchBudget:
    max_candidates: int = DEFAULT_SEARCH_BUDGET
    force: bool = False

    def check(self, candidates: int):
        """Raise BudgetExceeded when a candidate space is larger than allowed"""
        if candidates > self.max_candidates and not self.force:
            raise BudgetExceeded(candidates, self.max_candidates)


@dataclasses.dataclass(frozen=True)
class EnumerationResult:
    dims: GridDims
    k: typing.Optional[int]
    count: int
    witnesses: typing.Optional[typing.Tuple[CellSet, ...]]
    prunes: PruneConfig
    candidates_examined: int

    def to_json(self) -> typing.Dict[str, typing.Any]:
        data: typing.Dict[str, typing.Any] = {
            'dims': {'n': self.dims.rows, 'm': self.dims.cols},
            'k': self.k,
            'count': self.count,
            'prunes': self.prunes.names(),
            'candidates': self.candidates_examined,
        }
        if self.witnesses is not None:
            data['witnesses'] = [witness.to_text() for witness in self.witnesses]
        return data


def rank_colex(indices: typing.Sequence[int]) -> int:
    """Colex rank of a sorted k-subset of {0..N-1}"""
    return sum(math.comb(c, j + 1) for j, c in enumerate(indices))


def unrank_colex(rank: int, n: int, k: int) -> typing.List[int]:
    """Sorted k-subset of {0..n-1} with the given colex rank"""
    if not 0 <= rank < math.comb(n, k):
        raise InputNotValid(f'Rank {rank} is outside 0..C({n},{k})-1')
    subset = [0] * k
    while k > 0:
        n -= 1
        offset = math.comb(n, k)
        if rank >= offset:
            rank -= offset
            k -= 1
            subset[k] = n
    return subset


def next_combination(bits: int) -> int:
    """Next mask with the same popcount, i.e. the colex successor"""
    lowest = bits & -bits
    ripple = bits + lowest
    return (((ripple ^ bits) >> 2) // lowest) | ripple


def iter_combinations(n: int, k: int, start: int, stop: int) -> typing.Iterator[int]:
    """Masks of the k-subsets with colex ranks start..stop-1"""
    if start >= stop:
        return
    if k == 0:
        yield 0
        return
    bits = sum(1 << index for index in unrank_colex(start, n, k))
    for _ in range(stop - start):
        yield bits
        bits = next_combination(bits)


def odd_column_restriction_applies(dims: GridDims, k: int) -> bool:
    """One seed per odd column covers exactly k seeds only when m is odd and k = (m + 1) / 2"""
    return dims.cols % 2 == 1 and k == (dims.cols + 1) // 2


def _odd_column_bits(rows: int, cols: int, rank: int) -> int:
    bits = 0
    for col in range(0, cols, 2):
        rank, row = divmod(rank, rows)
        bits |= 1 << (row * cols + col)
    return bits


class _Chunk(typing.NamedTuple):
    rows: int
    cols: int
    k: typing.Optional[int]
    space: str  # 'combinations', 'odd-columns' or 'subsets'
    start: int
    stop: int
    boundary: bool
    empty_pair: bool
    materialize: bool


class _ChunkResult(typing.NamedTuple):
    count: int
    examined: int
    witnesses: typing.List[int]


@functools.lru_cache(maxsize=64)
def _prune_masks(dims: GridDims) -> typing.Tuple[typing.Tuple[int, ...], typing.Tuple[int, ...]]:
    grid = layout(dims)
    edges = (grid.row_masks[0], grid.row_masks[-1], grid.col_masks[0], grid.col_masks[-1])
    pairs = tuple(a | b for a, b in zip(grid.col_masks, grid.col_masks[1:]))
    pairs += tuple(a | b for a, b in zip(grid.row_masks, grid.row_masks[1:]))
    return edges, pairs


def _candidates(chunk: _Chunk) -> typing.Iterator[int]:
    size = chunk.rows * chunk.cols
    if chunk.space == 'combinations':
        return iter_combinations(size, typing.cast(int, chunk.k), chunk.start, chunk.stop)
    if chunk.space == 'odd-columns':
        return (_odd_column_bits(chunk.rows, chunk.cols, rank) for rank in range(chunk.start, chunk.stop))
    return iter(range(chunk.start, chunk.stop))


def _scan_chunk(chunk: _Chunk) -> _ChunkResult:
    """Count candidates of one rank range whose closure is the whole grid"""
    dims = GridDims(chunk.rows, chunk.cols)
    grid = layout(dims)
    edges, pairs = _prune_masks(dims)
    count = examined = 0
    witnesses = []
    for bits in _candidates(chunk):
        if chunk.boundary and not all(bits & edge for edge in edges):
            continue
        if chunk.empty_pair and any(not bits & pair for pair in pairs):
            continue
        examined += 1
        if closure_bits(grid, bits) == grid.full:
            count += 1
            if chunk.materialize:
                witnesses.append(bits)
    return _ChunkResult(count, examined, witnesses)


def _split(total: int, jobs: int) -> typing.List[typing.Tuple[int, int]]:
    parts = max(1, jobs * CHUNKS_PER_JOB if jobs > 1 else 1)
    size = max(1, -(-total // parts))
    return [(start, min(start + size, total)) for start in range(0, total, size)]


def _run_chunks(dims: GridDims, chunks: typing.List[_Chunk], jobs: int,
                progress: bool) -> typing.Tuple[int, int, typing.List[CellSet]]:
    count = examined = 0
    witnesses: typing.List[int] = []
    bar = tqdm(total=len(chunks), desc=f'G({dims.rows},{dims.cols})', unit='chunk',
               file=sys.stderr, disable=not progress)
    if jobs > 1 and len(chunks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
            results: typing.Iterable[_ChunkResult] = executor.map(_scan_chunk, chunks)
            for chunk, result in zip(chunks, results):
                log.debug(f'Chunk {chunk.start}..{chunk.stop}: {result.count} found, {result.examined} examined')
                count, examined = count + result.count, examined + result.examined
                witnesses.extend(result.witnesses)
                bar.update()
    else:
        for chunk in chunks:
            result = _scan_chunk(chunk)
            log.debug(f'Chunk {chunk.start}..{chunk.stop}: {result.count} found, {result.examined} examined')
            count, examined = count + result.count, examined + result.examined
            witnesses.extend(result.witnesses)
            bar.update()
    bar.close()
    cell_sets = sorted((CellSet(dims, bits) for bits in witnesses), key=CellSet.to_text)
    return count, examined, cell_sets


def enumerate_subsets(dims: GridDims, k: int, budget: SearchBudget = SearchBudget(),
                      prune: PruneConfig = PruneConfig(), materialize: bool = False,
                      jobs: int = 1, progress: bool = False) -> EnumerationResult:
    """All k-subsets of the grid with full closure"""
    if not 0 <= k <= dims.size:
        raise InputNotValid(f'Subset size {k} is outside 0..{dims.size} for grid {dims}')
    if jobs < 1:
        raise InputNotValid(f'Number of jobs must be positive, got {jobs}')
    if prune.use_odd_column_restriction:
        if not odd_column_restriction_applies(dims, k):
            raise PruneNotApplicable(f'Odd-column restriction needs an odd number of columns and '
                                     f'k = (m + 1) / 2; got grid {dims} with k = {k}')
        space, total = 'odd-columns', dims.rows ** ((dims.cols + 1) // 2)
    else:
        space, total = 'combinations', math.comb(dims.size, k)
    budget.check(total)
    log.debug(f'Scanning {total} {space} candidates of size {k} on {dims} with prunes {prune.names() or "none"}')
    chunks = [_Chunk(dims.rows, dims.cols, k, space, start, stop, prune.use_boundary_prune,
                     prune.use_empty_pair_prune, materialize) for start, stop in _split(total, jobs)]
    count, examined, witnesses = _run_chunks(dims, chunks, jobs, progress)
    return EnumerationResult(dims, k, count, tuple(witnesses) if materialize else None, prune, examined)


def enumerate_optimal(dims: GridDims, budget: SearchBudget = SearchBudget(), prune: PruneConfig = PruneConfig(),
                      materialize: bool = False, jobs: int = 1, progress: bool = False) -> EnumerationResult:
    """Optimal solutions: subsets of size gamma(dims) with full closure"""
    return enumerate_subsets(dims, gamma(dims).value, budget, prune, materialize, jobs, progress)


def brute_gamma(dims: GridDims, budget: SearchBudget = SearchBudget(),
                prune: PruneConfig = PruneConfig(), jobs: int = 1) -> typing.Tuple[int, CellSet]:
    """Smallest k with a contaminating k-subset, and the least such subset by canonical text"""
    for k in range(1, dims.size + 1):
        step_prune = prune if odd_column_restriction_applies(dims, k) else prune.without_odd_columns()
        result = enumerate_subsets(dims, k, budget, step_prune, materialize=True, jobs=jobs)
        log.debug(f'{dims}: {result.count} contaminating sets of size {k}')
        if result.witnesses:
            return k, result.witnesses[0]
    raise FailedVerification(f'The full grid {dims} does not contaminate itself')


def path_feasible(m: int, bits: int) -> bool:
    """One-row characterisation: both ends seeded and no two consecutive clean cells"""
    ends = 1 | 1 << (m - 1)
    clean = ~bits & ((1 << m) - 1)
    return bits & ends == ends and not clean & (clean >> 1)


def path_feasible_count(m: int) -> int:
    """Number of one-row seed sets passing path_feasible, by last-cell state"""
    seeded, clean = 1, 0
    for _ in range(m - 1):
        seeded, clean = seeded + clean, seeded
    return seeded


@functools.lru_cache(maxsize=None)
def validate_path_characterisation(limit: int = PATH_VALIDATION_LIMIT) -> int:
    """Compare path_feasible with raw closures on every subset of G(1, j), j <= limit"""
    for m in range(1, limit + 1):
        dims = GridDims(1, m)
        grid = layout(dims)
        raw = 0
        for bits in range(1 << m):
            full = closure_bits(grid, bits) == grid.full
            if full != path_feasible(m, bits):
                raise FailedVerification(f'One-row characterisation disagrees with the closure on {dims} '
                                         f'for seeds {CellSet(dims, bits)}')
            raw += full
        if raw != path_feasible_count(m):
            raise FailedVerification(f'One-row count {path_feasible_count(m)} differs from raw {raw} on {dims}')
    log.debug(f'One-row characterisation validated up to m = {limit}')
    return limit


def count_feasible(dims: GridDims, budget: SearchBudget = SearchBudget(), materialize: bool = False,
                   jobs: int = 1, progress: bool = False) -> EnumerationResult:
    """All seed sets of any size with full closure"""
    canonical = dims.canonical()
    if canonical.rows == 1 and not materialize:
        validate_path_characterisation()
        return EnumerationResult(dims, None, path_feasible_count(canonical.cols), None, PruneConfig(), 0)
    total = 1 << dims.size
    budget.check(total)
    chunks = [_Chunk(dims.rows, dims.cols, None, 'subsets', start, stop, False, False, materialize)
              for start, stop in _split(total, jobs)]
    count, examined, witnesses = _run_chunks(dims, chunks, jobs, progress)
    return EnumerationResult(dims, None, count, tuple(witnesses) if materialize else None, PruneConfig(), examined)


@dataclasses.dataclass
class PruneCheck:
    prunes: PruneConfig
    count: int
    candidates: int
    identical: bool


@dataclasses.dataclass
class PruneEquivalence:
    """Pruned enumerations compared with the unpruned one"""
    dims: GridDims
    baseline: EnumerationResult
    checks: typing.List[PruneCheck]
    skipped: typing.List[str]
    odd_column_counterexamples: typing.List[CellSet]

    @property
    def passed(self) -> bool:
        return all(check.identical for check in self.checks)

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            'dims': {'n': self.dims.rows, 'm': self.dims.cols},
            'count': self.baseline.count,
            'candidates': self.baseline.candidates_examined,
            'checks': [{'prunes': check.prunes.names(), 'count': check.count, 'candidates': check.candidates,
                        'identical': check.identical} for check in self.checks],
            'skipped': self.skipped,
            'odd_column_counterexamples': [witness.to_text() for witness in self.odd_column_counterexamples],
            'passed': self.passed,
        }


def _uses_only_odd_columns(witness: CellSet) -> bool:
    return all(cell.col % 2 == 1 for cell in witness)


def verify_prune_equivalence(dims: GridDims, budget: SearchBudget = SearchBudget(),
                             jobs: int = 1) -> PruneEquivalence:
    """Each prune alone and all applicable prunes together must reproduce the unpruned witness list"""
    k = gamma(dims).value
    baseline = enumerate_subsets(dims, k, budget, PruneConfig(), materialize=True, jobs=jobs)
    odd_applies = odd_column_restriction_applies(dims, k)
    configs = [PruneConfig(use_boundary_prune=True), PruneConfig(use_empty_pair_prune=True)]
    skipped = []
    if odd_applies:
        configs.append(PruneConfig(use_odd_column_restriction=True))
    else:
        skipped.append('odd-column')
    configs.append(PruneConfig(True, True, odd_applies))
    checks = []
    for config in configs:
        result = enumerate_subsets(dims, k, budget, config, materialize=True, jobs=jobs)
        identical = result.count == baseline.count and result.witnesses == baseline.witnesses
        log.debug(f'{dims} prunes {config.names()}: {result.count} found, {result.candidates_examined} examined, '
                  f'identical={identical}')
        checks.append(PruneCheck(config, result.count, result.candidates_examined, identical))
    counterexamples = [] if not odd_applies else [
        witness for witness in baseline.witnesses or () if not _uses_only_odd_columns(witness)]
    return PruneEquivalence(dims, baseline, checks, skipped, counterexamples)


@dataclasses.dataclass
class LiftReport:
    """Optimal solutions of G(n, m-2) extended by one seed in the new last column"""
    dims: GridDims
    small_count: int
    count: int
    lifted_count: int
    all_lifted_optimal: bool
    non_restricting: typing.Optional[CellSet]

    @property
    def passed(self) -> bool:
        return (self.all_lifted_optimal and self.lifted_count == self.dims.rows * self.small_count
                and self.non_restricting is not None)

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            'dims': {'n': self.dims.rows, 'm': self.dims.cols},
            'small_count': self.small_count,
            'count': self.count,
            'lifted_count': self.lifted_count,
            'all_lifted_optimal': self.all_lifted_optimal,
            'non_restricting': self.non_restricting.to_text() if self.non_restricting else None,
            'passed': self.passed,
        }


def _embed(small: CellSet, dims: GridDims) -> int:
    bits = 0
    for cell in small:
        bits |= 1 << dims.index(cell)
    return bits


def restrict_columns(seeds: CellSet, cols: int) -> CellSet:
    """Seeds lying in the first cols columns, as a set of the narrower grid"""
    target = GridDims(seeds.dims.rows, cols)
    return CellSet.from_cells(target, [cell for cell in seeds if cell.col <= cols])


def lift_solutions(dims: GridDims, budget: SearchBudget = SearchBudget(), jobs: int = 1) -> LiftReport:
    n, m = dims.rows, dims.cols
    if not (m % 2 == 1 and m - 2 >= n >= 3):
        raise InputNotValid(f'Lifting needs m odd and m - 2 >= n >= 3, got {dims}')
    small_dims = GridDims(n, m - 2)
    small = enumerate_optimal(small_dims, budget, materialize=True, jobs=jobs)
    full = enumerate_optimal(dims, budget, materialize=True, jobs=jobs)
    optimal = {witness.bits for witness in full.witnesses or ()}
    lifted = set()
    for witness in small.witnesses or ():
        base = _embed(witness, dims)
        for row in range(1, n + 1):
            lifted.add(base | 1 << dims.index((row, m)))
    non_restricting = next((witness for witness in full.witnesses or ()
                            if not closure(small_dims, restrict_columns(witness, m - 2)).full), None)
    return LiftReport(dims, small.count, full.count, len(lifted), lifted <= optimal, non_restricting)


@dataclasses.dataclass
class SpeedProfile:
    """Synchronous rounds needed by each optimal solution to fill the grid"""
    dims: GridDims
    count: int
    histogram: typing.Dict[int, int]
    fastest: typing.Optional[CellSet]

    @property
    def min_rounds(self) -> typing.Optional[int]:
        return min(self.histogram) if self.histogram else None

    @property
    def max_rounds(self) -> typing.Optional[int]:
        return max(self.histogram) if self.histogram else None

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            'dims': {'n': self.dims.rows, 'm': self.dims.cols},
            'count': self.count,
            'min_rounds': self.min_rounds,
            'max_rounds': self.max_rounds,
            'histogram': {str(rounds): total for rounds, total in sorted(self.histogram.items())},
            'fastest': self.fastest.to_text() if self.fastest else None,
        }


def speed_profile(dims: GridDims, budget: SearchBudget = SearchBudget(), prune: PruneConfig = PruneConfig(),
                  jobs: int = 1) -> SpeedProfile:
    result = enumerate_optimal(dims, budget, prune, materialize=True, jobs=jobs)
    histogram: typing.Counter[int] = collections.Counter()
    fastest: typing.Optional[CellSet] = None
    best = None
    for witness in result.witnesses or ():
        rounds = len(closure(dims, witness).rounds)
        histogram[rounds] += 1
        if best is None or rounds < best:
            best, fastest = rounds, witness
    return SpeedProfile(dims, result.count, dict(histogram), fastest)
