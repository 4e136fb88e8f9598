#!/usr/bin/env python
# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Main script of this framework, putting all the logic together"""
import argparse
import csv
import enum
import io
import logging
import os
import pathlib
import platform
import sys
import timeit
import typing

import pytest

from contagrid import logger
from contagrid.arg_parser import parse_args
from contagrid.closed_forms import gamma
from contagrid.exceptions import (BudgetExceeded, FailedStep, FailedVerification, InputNotValid,
                                  PruneNotApplicable, StructureError)
from contagrid.grid import GridDims, closure
from contagrid.render import TextRender, render_table, table_cells, table_json, verdict
from contagrid.search import (EnumerationResult, PruneConfig, SearchBudget, brute_gamma, count_feasible,
                              enumerate_optimal, odd_column_restriction_applies, speed_profile)
from contagrid.utilities import dump_json, format_timedelta, get_log_dir, get_search_budget
from contagrid.verifier import Verifier

__version__ = '0.1'
log = logging.getLogger('contagrid')


@enum.unique
class ExitCode(enum.Enum):
    """Enum that handles framework-specific exitcodes"""
    success = 0
    failed_verification = 1
    stuck = 2
    failed = 10
    budget_exceeded = 11
    wrong_args = 64
    interrupted = 130


class Launcher:
    """Main class implementing high-end framework logic"""

    def __init__(self, arguments: argparse.Namespace, log_dir: pathlib.Path,
                 stdout: typing.Optional[typing.TextIO] = None):
        self.args = arguments
        self.logdir = log_dir
        self.location = pathlib.Path(os.path.realpath(__file__)).parent
        self.render = TextRender()
        self.stdout = stdout or sys.stdout

    def emit(self, text: str):
        """Machine-readable output: the --out file if given, stdout otherwise"""
        if not text.endswith('\n'):
            text += '\n'
        out = getattr(self.args, 'out', None)
        if out:
            pathlib.Path(out).parent.mkdir(parents=True, exist_ok=True)
            pathlib.Path(out).write_text(text, encoding='utf-8')
            log.info(f'Output location: {out}')
        else:
            self.stdout.write(text)

    def budget(self) -> SearchBudget:
        return SearchBudget(get_search_budget(), self.args.force)

    def prunes(self, dims: GridDims) -> PruneConfig:
        if self.args.all_prunes:
            return PruneConfig(True, True, odd_column_restriction_applies(dims, gamma(dims).value))
        return PruneConfig(self.args.boundary_prune, self.args.empty_pair_prune, self.args.odd_columns)

    def simulate(self) -> ExitCode:
        """Run the contamination process of one scenario"""
        scenario = self.args.scenario
        log.info(f'Simulating {scenario.dims} from {len(scenario.seeds)} seeds: {scenario.cell_set}')
        trace = closure(scenario.dims, scenario.cell_set)
        if self.args.json:
            self.emit(dump_json(trace.to_json()))
        elif self.args.trace:
            self.emit(self.render.render_frames(trace))
        else:
            self.emit(verdict(trace))
        log.info(f'{verdict(trace)}, {len(trace.final)} of {scenario.dims.size} cells contaminated')
        return ExitCode.success if trace.full else ExitCode.stuck

    def gamma(self) -> ExitCode:
        dims = self.args.dims
        data: typing.Dict[str, typing.Any] = {'dims': {'n': dims.rows, 'm': dims.cols}}
        if self.args.method in ('formula', 'all'):
            data['formula'] = gamma(dims).value
        if self.args.method in ('brute', 'all'):
            log.info(f'Searching the smallest contaminating set of {dims}...')
            data['brute'], witness = brute_gamma(dims, self.budget(), self.prunes(dims), self.args.jobs)
            data['witness'] = witness.to_text()
        if self.args.json:
            self.emit(dump_json(data))
        else:
            self.emit(' / '.join(str(data[key]) for key in ('formula', 'brute') if key in data))
        if 'formula' in data and 'brute' in data and data['formula'] != data['brute']:
            raise FailedVerification(f'Closed form {data["formula"]} and exhaustive search {data["brute"]} '
                                     f'disagree on {dims}')
        return ExitCode.success

    def _emit_count(self, result: EnumerationResult):
        fmt = self.args.format
        if fmt == 'json':
            self.emit(dump_json(result.to_json()))
        elif fmt == 'csv':
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator='\n')
            if result.witnesses is None:
                writer.writerow(['n', 'm', 'k', 'count'])
                writer.writerow([result.dims.rows, result.dims.cols, '' if result.k is None else result.k,
                                 result.count])
            else:
                writer.writerow(['n', 'm', 'seeds'])
                writer.writerows([result.dims.rows, result.dims.cols, witness.to_text()]
                                 for witness in result.witnesses)
            self.emit(buffer.getvalue())
        else:
            lines = [str(result.count)]
            lines.extend(witness.to_text() for witness in result.witnesses or ())
            self.emit('\n'.join(lines))

    def _enumerate(self, name: str, run: typing.Callable[[], EnumerationResult]) -> EnumerationResult:
        """Per-chunk detail goes to a dedicated log file while the search runs"""
        detail = f'{name}_{self.args.dims}.log'
        log.info(f'Enumeration detail log: {self.logdir / detail}')
        started = timeit.default_timer()
        logger.switch_to_custom(detail, self.logdir)
        try:
            result = run()
        finally:
            logger.switch_to_summary()
        log.info(f'{result.count} found, {result.candidates_examined} candidates examined in '
                 f'{format_timedelta(timeit.default_timer() - started)}')
        return result

    def alpha(self) -> ExitCode:
        """Count the optimal solutions of a grid"""
        dims = self.args.dims
        prune = self.prunes(dims)
        log.info(f'Counting optimal solutions of {dims}, prunes: {", ".join(prune.names()) or "none"}')
        result = self._enumerate('alpha', lambda: enumerate_optimal(
            dims, self.budget(), prune, self.args.witnesses, self.args.jobs, self.args.progress))
        self._emit_count(result)
        return ExitCode.success

    def beta(self) -> ExitCode:
        """Count every contaminating set of a grid"""
        dims = self.args.dims
        if self.args.all_prunes or self.args.boundary_prune or self.args.empty_pair_prune or self.args.odd_columns:
            log.warning('Prunes apply to optimal solutions only, counting feasible sets without them')
        log.info(f'Counting feasible sets of {dims}...')
        result = self._enumerate('beta', lambda: count_feasible(
            dims, self.budget(), self.args.witnesses, self.args.jobs, self.args.progress))
        self._emit_count(result)
        return ExitCode.success

    def speed(self) -> ExitCode:
        """Histogram of synchronous rounds over the optimal solutions"""
        dims = self.args.dims
        profile = speed_profile(dims, self.budget(), self.prunes(dims), self.args.jobs)
        log.info(f'{profile.count} optimal solutions of {dims} need {profile.min_rounds}..{profile.max_rounds} '
                 f'rounds')
        self.emit(dump_json(profile.to_json()))
        return ExitCode.success

    def table(self) -> ExitCode:
        """Upper-triangle table of gamma or alpha"""
        max_n, max_m = self.args.max_n, self.args.max_m
        values: typing.Dict[typing.Tuple[int, int], int] = {}
        log.info(f'Building the {self.args.quantity} table up to {max_n}x{max_m}...')
        logger.log.increase_indent()  # type: ignore[attr-defined]
        for dims in table_cells(max_n, max_m):
            if self.args.quantity == 'gamma':
                values[(dims.rows, dims.cols)] = gamma(dims).value
                continue
            started = timeit.default_timer()
            result = enumerate_optimal(dims, self.budget(), self.prunes(dims), jobs=self.args.jobs,
                                       progress=self.args.progress)
            values[(dims.rows, dims.cols)] = result.count
            log.info(f'{dims}: {result.count} in {format_timedelta(timeit.default_timer() - started)}')
        logger.log.decrease_indent()  # type: ignore[attr-defined]
        if self.args.format == 'json':
            self.emit(dump_json(table_json(self.args.quantity, values)))
        else:
            self.emit(render_table(values, max_n, max_m))
        return ExitCode.success

    def verify(self) -> ExitCode:
        """Check formulas, tables and conjectures, or run the functional suites with pytest"""
        if self.args.pytest:
            return self.run_tests()
        verifier = Verifier(self.args.max_side, self.args.cases, self.args.seed, self.budget(), self.args.jobs)
        log.info(logger.LINE_SINGLE)
        log.info(f'Verifying suite {self.args.suite} with max side {self.args.max_side}, '
                 f'{self.args.cases} randomized cases, seed {self.args.seed}')
        log.info(logger.LINE_SINGLE)
        report = verifier.run(self.args.suite)
        log.info(self.render.render_verify_summary(report))
        self.emit(dump_json(report.to_json()))
        if report.failed:
            log.error(f'Failed claims: {", ".join(entry.claim for entry in report.failed)}')
            return ExitCode.failed_verification
        return ExitCode.success

    def run_tests(self) -> ExitCode:
        log.info(logger.LINE_DOUBLE)
        log.info('Running the functional suites...')
        test_report = self.logdir / 'tests.html'
        curr_time = timeit.default_timer()
        result_tests = pytest.main([  # noqa
            f'{self.location / "tests" / "functional"}',
            '-k', self.args.test_expression,
            '-m', self.args.test_mark_expression,
            '--max-n', str(self.args.max_side),
            f"--junitxml={self.logdir / 'tests.xml'}",
            f'--html={test_report}',
            '--self-contained-html',
            '--tb=short',
        ])
        log.info(f'Testing time: {format_timedelta(timeit.default_timer() - curr_time)}')
        log.info(f'Testing report location: {test_report}')
        if result_tests in (pytest.ExitCode.OK, pytest.ExitCode.NO_TESTS_COLLECTED):
            log.info('Tests: PASSED')
            return ExitCode.success
        log.error('Tests: FAILED')
        return ExitCode.failed_verification


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> ExitCode:  # noqa: C901
    started_time = timeit.default_timer()
    exit_code = ExitCode.success
    des = 'Power contamination engine for rectangular grids'
    args = parse_args(name=os.path.basename(__file__), description=des, argv=argv)
    try:
        logdir = get_log_dir() / args.mode
        logfile = logger.init_logger(logdir)
        launcher = Launcher(args, logdir)

        log.info(logger.LINE_DOUBLE)
        log.info(f'{des} v{__version__}')
        log.info(logger.LINE_DOUBLE)
        log.info(f'Log:         {logfile}')
        log.info(f'Command:     {" ".join(sys.argv if argv is None else argv)}')
        log.info(f'Machine:     {platform.node()}')
        log.info(f'System:      {platform.system().lower()}; {platform.release()}; {platform.machine()}')
        log.info(f'Python:      "{sys.executable}" {sys.version}')
        log.info(logger.LINE_DOUBLE)

        exit_code = getattr(launcher, args.mode)()

    except (InputNotValid, PruneNotApplicable) as error:
        logger.switch_to_summary()
        log.error(error)  # noqa G200
        exit_code = ExitCode.wrong_args
    except BudgetExceeded as error:
        logger.switch_to_summary()
        log.error(error)  # noqa G200
        exit_code = ExitCode.budget_exceeded
    except FailedVerification as error:
        logger.switch_to_summary()
        log.exception(error)  # noqa G200
        exit_code = ExitCode.failed_verification
    except (FailedStep, StructureError) as error:
        logger.switch_to_summary()
        log.exception(error)  # noqa G200
        exit_code = ExitCode.failed
    except KeyboardInterrupt:
        logger.switch_to_summary()
        log.info(logger.LINE_SINGLE)
        log.exception(f'{__file__} was interrupted')
        log.info(logger.LINE_SINGLE)
        exit_code = ExitCode.interrupted
    except Exception:
        logger.switch_to_summary()
        log.info(logger.LINE_SINGLE)
        log.exception('Something goes wrong **FAILED**')
        log.info(logger.LINE_SINGLE)
        exit_code = ExitCode.failed
    log.info(logger.LINE_DOUBLE)
    log.info(f'Total time elapsed: {format_timedelta(timeit.default_timer() - started_time)}')
    log.info(f'Exit code: {exit_code.value}')
    return exit_code


if __name__ == '__main__':
    sys.exit(main().value)
