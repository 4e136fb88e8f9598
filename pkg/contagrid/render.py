# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Module handling text output: ASCII frames of a contamination run, verify summaries and tables"""
import csv
import io
import logging
import pathlib
import typing

import jinja2

from contagrid.exceptions import InputNotValid
from contagrid.grid import ClosureTrace, GridDims

SEED, CONTAMINATED, CLEAN = 'S', '#', '.'
TEMPLATES_DIR = pathlib.Path(__file__).resolve().parent.parent / 'templates'

log = logging.getLogger('contagrid')


class Frame(typing.NamedTuple):
    index: int
    added: int
    lines: typing.List[str]


def verdict(trace: ClosureTrace) -> str:
    return 'FULL' if trace.full else f'STUCK after {len(trace.rounds)} rounds'


def frames(trace: ClosureTrace) -> typing.List[Frame]:
    """Cumulative grid pictures: the seeds, then one picture per synchronous round"""
    dims = trace.dims
    seeds = trace.seeds.bits
    state = seeds
    result = []
    for index, added in enumerate((trace.seeds, *trace.rounds)):
        state |= added.bits
        lines = []
        for row in range(dims.rows):
            chars = []
            for col in range(dims.cols):
                bit = 1 << (row * dims.cols + col)
                chars.append(SEED if seeds & bit else CONTAMINATED if state & bit else CLEAN)
            lines.append(''.join(chars))
        result.append(Frame(index, len(added), lines))
    return result


class TextRender:
    """Renders jinja2 templates from <project_root>/templates"""

    def __init__(self, templates_dir: pathlib.Path = TEMPLATES_DIR):
        self.undefined = jinja2.make_logging_undefined(logger=log)
        self.env = jinja2.Environment(loader=jinja2.FileSystemLoader(str(templates_dir)),
                                      autoescape=jinja2.select_autoescape(enabled_extensions=('html',)),
                                      undefined=self.undefined, trim_blocks=True, lstrip_blocks=True,
                                      keep_trailing_newline=True)

    def get_template(self, name: str) -> jinja2.Template:
        try:
            return self.env.get_template(f'{name}.txt.j2')
        except jinja2.exceptions.TemplateNotFound:
            raise InputNotValid(f'Template {name}.txt.j2 was not found in {TEMPLATES_DIR}')

    def render_frames(self, trace: ClosureTrace, all_rounds: bool = True) -> str:
        """ASCII frames per round ('S' seed, '#' contaminated later, '.' clean) and the verdict"""
        pictures = frames(trace)
        if not all_rounds:
            pictures = pictures[-1:]
        return self.get_template('frames').render(frames=pictures, verdict=verdict(trace),
                                                  dims=str(trace.dims))

    def render_verify_summary(self, report: typing.Any) -> str:
        return self.get_template('verify_summary').render(report=report, summary=report.summary)


def render_table(values: typing.Dict[typing.Tuple[int, int], int], max_n: int, max_m: int) -> str:
    """Upper-triangle CSV with header n,1..M; cells with m < n stay empty"""
    if max_n < 0 or max_m < 0:
        raise InputNotValid(f'Table bounds must be non-negative, got {max_n}x{max_m}')
    if not max_n or not max_m:
        return '0\n'
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(['n', *range(1, max_m + 1)])
    for n in range(1, max_n + 1):
        writer.writerow([n, *(values.get((n, m), '') if m >= n else '' for m in range(1, max_m + 1))])
    return buffer.getvalue()


def table_json(quantity: str, values: typing.Dict[typing.Tuple[int, int], int]) -> typing.Dict[str, typing.Any]:
    return {'quantity': quantity,
            'entries': [{'n': n, 'm': m, 'value': value} for (n, m), value in sorted(values.items())]}


def table_cells(max_n: int, max_m: int) -> typing.Iterator[GridDims]:
    """Horizontal grids of the upper triangle, row by row"""
    for n in range(1, max_n + 1):
        for m in range(n, max_m + 1):
            yield GridDims(n, m)
