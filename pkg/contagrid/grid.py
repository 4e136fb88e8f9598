# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Grid geometry, the eight contamination rules and the synchronous closure engine

Cells are addressed externally with 1-based (row, col) pairs. Internally a set of cells
is a Python integer used as a bitboard, bit ``(row - 1) * cols + (col - 1)`` standing for
cell (row, col).
"""
import dataclasses
import enum
import functools
import itertools
import logging
import random
import typing

from contagrid.exceptions import InputNotValid

MAX_CELLS = 4096  # hard cap on rows * cols

log = logging.getLogger('contagrid')


class Cell(typing.NamedTuple):
    """Grid cell in 1-based (row, col) coordinates"""
    row: int
    col: int

    def __str__(self) -> str:
        return f'{self.row},{self.col}'


@dataclasses.dataclass(frozen=True, order=True)
class GridDims:
    """Shape of the grid G(rows, cols)"""
    rows: int
    cols: int

    def __post_init__(self):
        for name in ('rows', 'cols'):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise InputNotValid(f'Grid {name} must be a positive integer, got {value!r}')
        if self.rows * self.cols > MAX_CELLS:
            raise InputNotValid(f'Grid {self} has {self.rows * self.cols} cells, the limit is {MAX_CELLS}')

    def __str__(self) -> str:
        return f'{self.rows}x{self.cols}'

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def contains(self, cell: typing.Tuple[int, int]) -> bool:
        return 1 <= cell[0] <= self.rows and 1 <= cell[1] <= self.cols

    def check(self, cell: typing.Tuple[int, int]) -> Cell:
        """Return the cell as a Cell, raising InputNotValid when it lies outside the grid"""
        if not self.contains(cell):
            raise InputNotValid(f'Cell {cell} is out of bounds of grid {self}')
        return Cell(*cell)

    def index(self, cell: typing.Tuple[int, int]) -> int:
        return (cell[0] - 1) * self.cols + (cell[1] - 1)

    def cell_at(self, index: int) -> Cell:
        return Cell(index // self.cols + 1, index % self.cols + 1)

    def transposed(self) -> 'GridDims':
        return GridDims(self.cols, self.rows)

    def canonical(self) -> 'GridDims':
        """Horizontal orientation, cols >= rows"""
        return self if self.cols >= self.rows else self.transposed()


class GridLayout(typing.NamedTuple):
    """Precomputed bit masks of one grid shape"""
    full: int
    row_masks: typing.Tuple[int, ...]
    col_masks: typing.Tuple[int, ...]
    pulls: typing.Tuple[typing.Tuple[int, int], ...]
    rule_pairs: typing.Tuple[typing.Tuple[int, int], ...]


@dataclasses.dataclass(frozen=True)
class Rule:
    """Contamination rule: the threatened cell u falls once both offset cells are contaminated"""
    id: str  # noqa: A003
    offsets: typing.Tuple[typing.Tuple[int, int], typing.Tuple[int, int]]


RULES: typing.Tuple[Rule, ...] = (
    Rule('a', ((-1, -1), (+1, +1))),
    Rule('b', ((+1, -1), (-1, +1))),
    Rule('c', ((-1, 0), (+1, 0))),
    Rule('d', ((0, -1), (0, +1))),
    Rule('e', ((0, -1), (-1, 0))),
    Rule('f', ((0, -1), (+1, 0))),
    Rule('g', ((+1, 0), (0, +1))),
    Rule('h', ((-1, 0), (0, +1))),
)
RULE_BY_ID = {rule.id: rule for rule in RULES}

# distinct offsets used by the rule table, in a fixed order
_OFFSETS: typing.Tuple[typing.Tuple[int, int], ...] = tuple(
    dict.fromkeys(offset for rule in RULES for offset in rule.offsets))


@functools.lru_cache(maxsize=256)
def layout(dims: GridDims) -> GridLayout:
    """Bit masks for rows, columns and the shifted views each rule offset needs"""
    full = (1 << dims.size) - 1
    row_masks = tuple(((1 << dims.cols) - 1) << (r * dims.cols) for r in range(dims.rows))
    col_masks = tuple(sum(1 << (r * dims.cols + c) for r in range(dims.rows)) for c in range(dims.cols))
    pulls = []
    for d_row, d_col in _OFFSETS:
        mask = full
        if d_col < 0:
            mask &= ~col_masks[0]
        elif d_col > 0:
            mask &= ~col_masks[-1]
        pulls.append((d_row * dims.cols + d_col, mask))
    rule_pairs = tuple((_OFFSETS.index(rule.offsets[0]), _OFFSETS.index(rule.offsets[1])) for rule in RULES)
    return GridLayout(full, row_masks, col_masks, tuple(pulls), rule_pairs)


def _pull(bits: int, shift: int, mask: int) -> int:
    """Cells u whose neighbour u + offset is set in bits"""
    if shift >= 0:
        return (bits >> shift) & mask
    return (bits << -shift) & mask


def step_bits(grid: GridLayout, state: int) -> int:
    """Bitboard form of `step`"""
    views = [_pull(state, shift, mask) for shift, mask in grid.pulls]
    new = 0
    for first, second in grid.rule_pairs:
        new |= views[first] & views[second]
    return new & ~state & grid.full


def closure_bits(grid: GridLayout, seeds: int) -> int:
    """Bitboard form of the closure, returns only the final state"""
    state = seeds
    while state != grid.full:
        new = step_bits(grid, state)
        if not new:
            break
        state |= new
    return state


def popcount(bits: int) -> int:
    return bin(bits).count('1')


@dataclasses.dataclass(frozen=True)
class CellSet:
    """Immutable set of cells of one grid, bit-packed row-major"""
    dims: GridDims
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.dims.size:
            raise InputNotValid(f'Bits {self.bits:#x} do not fit grid {self.dims}')

    @classmethod
    def from_cells(cls, dims: GridDims, cells: typing.Iterable[typing.Tuple[int, int]]) -> 'CellSet':
        bits = 0
        for cell in cells:
            bits |= 1 << dims.index(dims.check(cell))
        return cls(dims, bits)

    @classmethod
    def from_text(cls, dims: GridDims, text: str) -> 'CellSet':
        """Parse the canonical "r,c;r,c" form, duplicates are rejected"""
        cells: typing.List[Cell] = []
        for chunk in filter(None, (part.strip() for part in text.split(';'))):
            try:
                row, col = (int(value) for value in chunk.split(','))
            except ValueError:
                raise InputNotValid(f'Malformed cell "{chunk}", expected "row,col"')
            cells.append(dims.check((row, col)))
        if len(set(cells)) != len(cells):
            raise InputNotValid(f'Duplicate cells in "{text}"')
        return cls.from_cells(dims, cells)

    @classmethod
    def empty(cls, dims: GridDims) -> 'CellSet':
        return cls(dims, 0)

    @classmethod
    def full(cls, dims: GridDims) -> 'CellSet':
        return cls(dims, layout(dims).full)

    def cells(self) -> typing.List[Cell]:
        """Cells in row-major order"""
        bits, index, result = self.bits, 0, []
        while bits:
            if bits & 1:
                result.append(self.dims.cell_at(index))
            bits >>= 1
            index += 1
        return result

    def to_text(self) -> str:
        return ';'.join(str(cell) for cell in self.cells())

    def __str__(self) -> str:
        return self.to_text()

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> typing.Iterator[Cell]:
        return iter(self.cells())

    def __contains__(self, cell: typing.Tuple[int, int]) -> bool:  # type: ignore[override]
        return self.dims.contains(cell) and bool(self.bits >> self.dims.index(cell) & 1)

    def _same_grid(self, other: 'CellSet') -> 'CellSet':
        if self.dims != other.dims:
            raise InputNotValid(f'Cannot combine cell sets of grids {self.dims} and {other.dims}')
        return other

    def __or__(self, other: 'CellSet') -> 'CellSet':
        return CellSet(self.dims, self.bits | self._same_grid(other).bits)

    def __and__(self, other: 'CellSet') -> 'CellSet':
        return CellSet(self.dims, self.bits & self._same_grid(other).bits)

    def __sub__(self, other: 'CellSet') -> 'CellSet':
        return CellSet(self.dims, self.bits & ~self._same_grid(other).bits)

    def __invert__(self) -> 'CellSet':
        return CellSet(self.dims, ~self.bits & layout(self.dims).full)

    def issubset(self, other: 'CellSet') -> bool:
        return self.bits & ~self._same_grid(other).bits == 0

    def add(self, cell: typing.Tuple[int, int]) -> 'CellSet':
        return CellSet(self.dims, self.bits | 1 << self.dims.index(self.dims.check(cell)))


@dataclasses.dataclass(frozen=True)
class ClosureTrace:
    """Synchronous-round history of one contamination run"""
    seeds: CellSet
    rounds: typing.Tuple[CellSet, ...]
    final: CellSet
    full: bool

    @property
    def dims(self) -> GridDims:
        return self.seeds.dims

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {
            'n': self.dims.rows,
            'm': self.dims.cols,
            'seeds': [list(cell) for cell in self.seeds],
            'rounds': [r.to_text() for r in self.rounds],
            'final': self.final.to_text(),
            'full': self.full,
        }


def _neighbours(dims: GridDims, u: typing.Tuple[int, int],
                offsets: typing.Iterable[typing.Tuple[int, int]]) -> CellSet:
    u = dims.check(u)
    return CellSet.from_cells(dims, [(u.row + dr, u.col + dc) for dr, dc in offsets
                                     if dims.contains((u.row + dr, u.col + dc))])


MOORE_OFFSETS = tuple((dr, dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1) if (dr, dc) != (0, 0))
VON_NEUMANN_OFFSETS = ((-1, 0), (1, 0), (0, -1), (0, 1))


@functools.lru_cache(maxsize=65536)
def moore(dims: GridDims, u: typing.Tuple[int, int]) -> CellSet:
    """In-bounds cells at Chebyshev distance 1 from u"""
    return _neighbours(dims, u, MOORE_OFFSETS)


@functools.lru_cache(maxsize=65536)
def von_neumann(dims: GridDims, u: typing.Tuple[int, int]) -> CellSet:
    """In-bounds orthogonal neighbours of u"""
    return _neighbours(dims, u, VON_NEUMANN_OFFSETS)


def _state_of(dims: GridDims, state: CellSet) -> CellSet:
    if state.dims != dims:
        raise InputNotValid(f'State belongs to grid {state.dims}, expected {dims}')
    return state


def applicable_rules(dims: GridDims, u: typing.Tuple[int, int]) -> typing.List[str]:
    """Rules whose two witness cells both exist around u, whatever the state"""
    u = dims.check(u)
    return [rule.id for rule in RULES
            if all(dims.contains((u.row + dr, u.col + dc)) for dr, dc in rule.offsets)]


def contaminable(dims: GridDims, state: CellSet, u: typing.Tuple[int, int]) -> typing.Optional[str]:
    """First rule, in order a..h, that contaminates the clean cell u under state"""
    u = dims.check(u)
    if u in _state_of(dims, state):
        raise InputNotValid(f'Cell {u} is already contaminated')
    for rule in RULES:
        if all((u.row + dr, u.col + dc) in state for dr, dc in rule.offsets):
            return rule.id
    return None


def satisfies_literal_conditions(dims: GridDims, state: CellSet, u: typing.Tuple[int, int]) -> bool:
    """Condition (i) or (ii) evaluated from the neighbourhood definitions, with no rule table"""
    sick_vn = von_neumann(dims, u) & state
    if len(sick_vn) >= 2:
        return True
    target = CellSet.from_cells(dims, [u])
    sick_moore = (moore(dims, u) & state).cells()
    for v, w in itertools.combinations(sick_moore, 2):
        if moore(dims, v) & moore(dims, w) == target:
            return True
    return False


def step(dims: GridDims, state: CellSet) -> CellSet:
    """Cells contaminated in one synchronous round, empty at a fixed point"""
    return CellSet(dims, step_bits(layout(dims), _state_of(dims, state).bits))


def closure(dims: GridDims, seeds: CellSet) -> ClosureTrace:
    """Iterate `step` to the fixed point, recording every round"""
    grid = layout(dims)
    state = _state_of(dims, seeds).bits
    rounds = []
    while True:
        new = step_bits(grid, state)
        if not new:
            break
        rounds.append(CellSet(dims, new))
        state |= new
    return ClosureTrace(seeds, tuple(rounds), CellSet(dims, state), state == grid.full)


def replay_trace(trace: ClosureTrace) -> typing.List[str]:
    """Cells of a trace that no rule explains from the state before their round, empty for a sound trace"""
    state = trace.seeds
    unexplained = []
    for number, added in enumerate(trace.rounds, start=1):
        for u in added:
            if u in state:
                unexplained.append(f'round {number}: {u} was already contaminated')
            elif not any(all((u.row + dr, u.col + dc) in state for dr, dc in rule.offsets) for rule in RULES):
                unexplained.append(f'round {number}: {u} has no contaminated witness pair')
        state = state | added
    if state != trace.final:
        unexplained.append(f'replayed state [{state}] differs from the final state [{trace.final}]')
    return unexplained


def closure_sequential(dims: GridDims, seeds: CellSet, rng: random.Random) -> CellSet:
    """One-cell-at-a-time process, picking a random eligible cell at every iteration"""
    grid = layout(dims)
    state = _state_of(dims, seeds).bits
    while True:
        eligible = step_bits(grid, state)
        if not eligible:
            return CellSet(dims, state)
        candidates = CellSet(dims, eligible).cells()
        state |= 1 << dims.index(rng.choice(candidates))


def is_full(dims: GridDims, state: CellSet) -> bool:
    return _state_of(dims, state).bits == layout(dims).full


@enum.unique
class Symmetry(enum.Enum):
    """The eight symmetries of a rectangle, rot90 turning clockwise"""
    identity = 'identity'
    transpose = 'transpose'
    flip_rows = 'flip-rows'
    flip_cols = 'flip-cols'
    rot90 = 'rot90'
    rot180 = 'rot180'
    rot270 = 'rot270'
    anti_transpose = 'anti-transpose'

    @property
    def swaps_axes(self) -> bool:
        return self in (Symmetry.transpose, Symmetry.rot90, Symmetry.rot270, Symmetry.anti_transpose)

    @property
    def inverse(self) -> 'Symmetry':
        return {Symmetry.rot90: Symmetry.rot270, Symmetry.rot270: Symmetry.rot90}.get(self, self)


_SYMMETRY_MAPS: typing.Dict[Symmetry, typing.Callable[[int, int, int, int], typing.Tuple[int, int]]] = {
    Symmetry.identity: lambda r, c, n, m: (r, c),
    Symmetry.transpose: lambda r, c, n, m: (c, r),
    Symmetry.flip_rows: lambda r, c, n, m: (n + 1 - r, c),
    Symmetry.flip_cols: lambda r, c, n, m: (r, m + 1 - c),
    Symmetry.rot90: lambda r, c, n, m: (c, n + 1 - r),
    Symmetry.rot180: lambda r, c, n, m: (n + 1 - r, m + 1 - c),
    Symmetry.rot270: lambda r, c, n, m: (m + 1 - c, r),
    Symmetry.anti_transpose: lambda r, c, n, m: (m + 1 - c, n + 1 - r),
}


def symmetry_image(dims: GridDims, cells: CellSet,
                   sym: typing.Union[Symmetry, str]) -> typing.Tuple[GridDims, CellSet]:
    """Coordinate-wise image of a cell set, together with the image grid"""
    sym = Symmetry(sym)
    target = dims.transposed() if sym.swaps_axes else dims
    mapping = _SYMMETRY_MAPS[sym]
    image = [mapping(cell.row, cell.col, dims.rows, dims.cols) for cell in _state_of(dims, cells)]
    return target, CellSet.from_cells(target, image)


def has_adjacent_empty_lines(dims: GridDims, seeds: CellSet, axis: str) -> bool:
    """True when two consecutive columns (axis 'cols') or rows (axis 'rows') hold no seed"""
    grid = layout(dims)
    if axis == 'cols':
        masks = grid.col_masks
    elif axis == 'rows':
        masks = grid.row_masks
    else:
        raise InputNotValid(f'Axis must be "rows" or "cols", got {axis!r}')
    bits = _state_of(dims, seeds).bits
    return any(not bits & (first | second) for first, second in zip(masks, masks[1:]))


def boundary_edges_covered(dims: GridDims, seeds: CellSet) -> bool:
    """True when row 1, row n, column 1 and column m each hold at least one seed"""
    grid = layout(dims)
    bits = _state_of(dims, seeds).bits
    edges = (grid.row_masks[0], grid.row_masks[-1], grid.col_masks[0], grid.col_masks[-1])
    return all(bits & edge for edge in edges)


def rect_set(dims: GridDims, r1: int, r2: int, c1: int, c2: int) -> CellSet:
    """Axis-aligned block of cells rows r1..r2, columns c1..c2"""
    if not (1 <= r1 <= r2 <= dims.rows and 1 <= c1 <= c2 <= dims.cols):
        raise InputNotValid(f'Rectangle rows {r1}..{r2}, cols {c1}..{c2} is not inside grid {dims}')
    return CellSet.from_cells(dims, itertools.product(range(r1, r2 + 1), range(c1, c2 + 1)))


def rule_pair_closure(rule_id: str) -> ClosureTrace:
    """Place the two witnesses of a rule inside its minimal box and run the process there"""
    rule = RULE_BY_ID[rule_id]
    rows = [dr for dr, _ in rule.offsets] + [0]
    cols = [dc for _, dc in rule.offsets] + [0]
    dims = GridDims(max(rows) - min(rows) + 1, max(cols) - min(cols) + 1)
    centre = (1 - min(rows), 1 - min(cols))
    seeds = CellSet.from_cells(dims, [(centre[0] + dr, centre[1] + dc) for dr, dc in rule.offsets])
    return closure(dims, seeds)
