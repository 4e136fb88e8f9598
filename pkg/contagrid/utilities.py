# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Module handling auxiliary functions: parsing of user input, scenario files and environment settings"""
import dataclasses
import json
import logging
import os
import pathlib
import re
import typing

from contagrid.exceptions import InputNotValid
from contagrid.grid import Cell, CellSet, GridDims

DEFAULT_SEARCH_BUDGET = 2 * 10 ** 8  # closure evaluations
BUDGET_ENV = 'CONTAGRID_BUDGET'
LOGDIR_ENV = 'CONTAGRID_LOGDIR'

log = logging.getLogger('contagrid')


def format_timedelta(timedelta: float) -> str:
    """Custom date & time formatter"""
    days = int(timedelta // (24 * 3600))
    hours = int(timedelta % (24 * 3600) / 3600)  # noqa: S001
    minutes = int(timedelta % 3600 / 60)
    seconds = timedelta % 60
    str_date = ''
    if days:
        str_date += f'{days} day' + 's' * (days != 1) + ' '
    if hours or days:
        str_date += f'{hours} hour' + 's' * (hours != 1) + ' '
    str_date += f'{minutes} minute' + 's' * (minutes != 1)
    str_date += f' {seconds:.2f} seconds'
    return str_date


def check_printable_utf8_chars(string: str) -> str:
    """Validate printable characters for user input"""
    if not isinstance(string, str):
        return string
    if not all(char.isprintable() or char in '\t\r\n' for char in string):
        raise InputNotValid(f'Input contains non-printable characters: {string!r}')
    return string


def parse_dims(text: str) -> GridDims:
    """Parse the "NxM" form of grid dimensions"""
    match = re.fullmatch(r'\s*(\d+)\s*[xX]\s*(\d+)\s*', check_printable_utf8_chars(text))
    if not match:
        raise InputNotValid(f'Grid dimensions must look like "NxM", got "{text}"')
    return GridDims(int(match.group(1)), int(match.group(2)))


@dataclasses.dataclass(frozen=True)
class Scenario:
    """Grid shape with distinct seed cells, kept in row-major order"""
    dims: GridDims
    seeds: typing.Tuple[Cell, ...]

    def __post_init__(self):
        for cell in self.seeds:
            self.dims.check(cell)
        if len(set(self.seeds)) != len(self.seeds):
            raise InputNotValid(f'Scenario seeds contain duplicates: {[str(cell) for cell in self.seeds]}')
        object.__setattr__(self, 'seeds', tuple(sorted(Cell(*cell) for cell in self.seeds)))

    @classmethod
    def from_text(cls, dims: str, seeds: str) -> 'Scenario':
        grid = parse_dims(dims)
        cell_set = CellSet.from_text(grid, check_printable_utf8_chars(seeds))
        return cls(grid, tuple(cell_set.cells()))

    @classmethod
    def from_json(cls, data: typing.Any) -> 'Scenario':
        try:
            dims = GridDims(data['n'], data['m'])
            seeds = tuple(Cell(int(row), int(col)) for row, col in data['seeds'])
        except (KeyError, TypeError, ValueError) as err:
            raise InputNotValid(f'Malformed scenario, expected {{"n", "m", "seeds": [[r, c], ...]}}: {err}')
        return cls(dims, seeds)

    def to_json(self) -> typing.Dict[str, typing.Any]:
        return {'n': self.dims.rows, 'm': self.dims.cols, 'seeds': [list(cell) for cell in self.seeds]}

    @property
    def cell_set(self) -> CellSet:
        return CellSet.from_cells(self.dims, self.seeds)


def load_scenario(path: typing.Union[str, pathlib.Path]) -> Scenario:
    path = pathlib.Path(path)
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except OSError as err:
        raise InputNotValid(f'Cannot read scenario file {path}: {err}')
    except json.JSONDecodeError as err:
        raise InputNotValid(f'Scenario file {path} is not valid JSON: {err}')
    return Scenario.from_json(data)


def dump_json(data: typing.Any) -> str:
    """Byte-stable JSON text used for every machine-readable output"""
    return json.dumps(data, indent=2, sort_keys=True)


def get_search_budget() -> int:
    """Search budget from the environment, or the default"""
    value = os.getenv(BUDGET_ENV)
    if value is None:
        return DEFAULT_SEARCH_BUDGET
    try:
        budget = int(float(value))
    except ValueError:
        raise InputNotValid(f'{BUDGET_ENV} must be a number, got "{value}"')
    if budget < 1:
        raise InputNotValid(f'{BUDGET_ENV} must be positive, got {budget}')
    log.debug(f'Search budget set from {BUDGET_ENV}: {budget}')
    return budget


def get_log_dir() -> pathlib.Path:
    value = os.getenv(LOGDIR_ENV)
    if value:
        return pathlib.Path(check_printable_utf8_chars(value))
    return pathlib.Path(os.path.realpath(__file__)).parent.parent / 'logs'
