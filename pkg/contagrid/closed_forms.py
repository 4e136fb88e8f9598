# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Closed-form contamination numbers, their recurrences and constructive seed sets"""
import dataclasses
import enum
import functools
import logging
import typing

from contagrid.exceptions import InputNotValid
from contagrid.grid import Cell, CellSet, GridDims

log = logging.getLogger('contagrid')


@enum.unique
class GammaMethod(enum.Enum):
    theorem = 'theorem'
    path_formula = 'path-formula'
    recurrence_col = 'recurrence-col'
    recurrence_pq = 'recurrence-pq'
    recurrence_path4 = 'recurrence-path4'


@dataclasses.dataclass(frozen=True)
class GammaValue:
    """Contamination number of a grid together with the method that produced it"""
    dims: GridDims
    value: int
    method: GammaMethod = GammaMethod.theorem

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {'dims': {'n': self.dims.rows, 'm': self.dims.cols},
                'value': self.value, 'method': self.method.value}


def gamma(dims: GridDims) -> GammaValue:
    """Exact contamination number, any orientation"""
    n, m = dims.canonical().rows, dims.canonical().cols
    if n == 2 and m % 2:
        value = (m + 1) // 2 + 1
    else:
        value = m // 2 + 1
    return GammaValue(dims, value, GammaMethod.theorem)


def gamma_path(m: int) -> int:
    if m < 1:
        raise InputNotValid(f'Path length must be positive, got {m}')
    return m // 2 + 1


_PATH_BASE = {0: 1, 1: 1, 2: 2, 3: 2}


@functools.lru_cache(maxsize=None)
def _path_by_fours(m: int) -> int:
    if m in _PATH_BASE:
        return _PATH_BASE[m]
    return _path_by_fours(m - 4) + 2


def gamma_rec_path4(m: int) -> int:
    """Path value from the path four cells shorter, plus the two end seeds"""
    if m < 4:
        raise InputNotValid(f'The four-step path recurrence needs m >= 4, got {m}')
    return _path_by_fours(m - 4) + 2


def gamma_rec_col(dims: GridDims) -> int:
    """One-column recurrence, defined for m > n >= 3"""
    n, m = dims.rows, dims.cols
    if not m > n >= 3:
        raise InputNotValid(f'The column recurrence needs m > n >= 3, got {dims}')
    return gamma(GridDims(n, m - 1)).value + (1 + (-1) ** m) // 2


def gamma_rec_pq(dims: GridDims, p: int, q: int) -> int:
    """Reduce both sides at once: p rows and q columns"""
    n, m = dims.rows, dims.cols
    if not (m >= n >= 3 and 0 <= p <= n - 3 and 0 <= q <= m - 3 and m - q >= n - p):
        raise InputNotValid(f'Recurrence domain is m >= n >= 3, 0 <= p <= n-3, 0 <= q <= m-3, m-q >= n-p; '
                            f'got {dims} with p={p}, q={q}')
    base = gamma(GridDims(n - p, m - q)).value
    if m % 2 == 0 and q % 2 == 1:
        return base + (q + 1) // 2
    return base + q // 2


def gamma_cross_check(dims: GridDims) -> typing.List[GammaValue]:
    """Every method defined at dims, the theorem first"""
    canonical = dims.canonical()
    n, m = canonical.rows, canonical.cols
    values = [gamma(dims)]
    if n == 1:
        values.append(GammaValue(dims, gamma_path(m), GammaMethod.path_formula))
        if m >= 4:
            values.append(GammaValue(dims, gamma_rec_path4(m), GammaMethod.recurrence_path4))
    if m > n >= 3:
        values.append(GammaValue(dims, gamma_rec_col(canonical), GammaMethod.recurrence_col))
    if n >= 3:
        values.append(GammaValue(dims, gamma_rec_pq(canonical, n - 3, m - 3), GammaMethod.recurrence_pq))
    return values


def gamma_lower_bound(m: int) -> int:
    """Pigeonhole bound over the columns of any grid with m >= n"""
    return m // 2 + 1


def conjecture1_gamma(dims: GridDims) -> int:
    """Earlier closed form, refuted on the 4x5 grid"""
    n, m = dims.rows, dims.cols
    if n % 2 == m % 2:
        return max(m // 2, n // 2) + 1
    return max((m + 1) // 2, (n + 1) // 2) + 1


def zigzag_row(rows: int, col: int) -> int:
    """Reflected sawtooth of period 2(rows - 1), starting at row 1"""
    period = 2 * (rows - 1)
    offset = (col - 1) % period
    return offset + 1 if offset < rows else period - offset + 1


def zigzag_path(dims: GridDims) -> typing.List[Cell]:
    if dims.rows < 2:
        raise InputNotValid(f'Zig-zag path needs at least two rows, got {dims}; use path_seeds for one row')
    return [Cell(zigzag_row(dims.rows, col), col) for col in range(1, dims.cols + 1)]


def zigzag_seeds(dims: GridDims) -> CellSet:
    """Every other cell of the zig-zag path, skipping its last cell, plus the corner (n, m)"""
    n, m = dims.rows, dims.cols
    if n == 1:
        raise InputNotValid(f'Zig-zag seeds need at least two rows, got {dims}; use path_seeds for one row')
    if n > m:
        raise InputNotValid(f'Zig-zag seeds expect a horizontal grid (m >= n), got {dims}')
    if n == 2 and m % 2:
        raise InputNotValid(f'Zig-zag seeds do not reach the optimum on {dims}; use tworow_odd_seeds')
    path = zigzag_path(dims)
    chosen = [cell for cell in path[:-1] if cell.col % 2 == 1]
    return CellSet.from_cells(dims, chosen + [Cell(n, m)])


def diagonal_seeds(m: int) -> CellSet:
    dims = GridDims(m, m)
    return CellSet.from_cells(dims, [(i, i) for i in range(1, m + 1)])


def tworow_odd_seeds(m: int) -> CellSet:
    """Optimal seeds of G(2, m), m odd: the odd cells of the top row and the bottom-right corner"""
    if m < 3 or m % 2 == 0:
        raise InputNotValid(f'Two-row construction needs an odd m >= 3, got {m}')
    dims = GridDims(2, m)
    return CellSet.from_cells(dims, [(1, col) for col in range(1, m + 1, 2)] + [(2, m)])


def path_seeds(m: int) -> CellSet:
    """Odd cells of G(1, m), closed by the last cell when m is even"""
    dims = GridDims(1, m)
    cols = set(range(1, m + 1, 2)) | {m}
    return CellSet.from_cells(dims, [(1, col) for col in sorted(cols)])


def optimal_construction(dims: GridDims) -> CellSet:
    """Constructive optimal seed set for any horizontal grid"""
    n, m = dims.rows, dims.cols
    if n > m:
        raise InputNotValid(f'Constructions expect a horizontal grid (m >= n), got {dims}')
    if n == 1:
        return path_seeds(m)
    if n == 2 and m % 2:
        return tworow_odd_seeds(m)
    return zigzag_seeds(dims)
