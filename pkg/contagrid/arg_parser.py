# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""CLI arguments parser for this framework"""
import argparse
import pathlib
import sys
import typing

from contagrid.exceptions import InputNotValid
from contagrid.loader import GAMMA_TABLE_MAX
from contagrid.utilities import Scenario, check_printable_utf8_chars, load_scenario, parse_dims

WRONG_ARGS = 64
SUITES = ('lemmas', 'formulas', 'tables', 'conjectures', 'all')


class ContagridArgumentParser(argparse.ArgumentParser):
    """CLI argument parser for this framework"""

    def __init__(self, prog: typing.Optional[str] = None, description: typing.Optional[str] = None):
        super().__init__(prog=prog, description=description,
                         formatter_class=argparse.RawTextHelpFormatter, add_help=True)

    def error(self, message: str):
        """Usage errors exit with code 64"""
        self.print_usage(sys.stderr)
        self.exit(WRONG_ARGS, f'{self.prog}: error: {message}\n')

    @staticmethod
    def add_dims_args(parser: argparse.ArgumentParser, required: bool = True):
        parser.add_argument(
            '--dims',
            metavar='NxM',
            required=required,
            help='Grid shape, n rows by m columns, e.g. 4x5',
        )

    @staticmethod
    def add_output_args(parser: argparse.ArgumentParser):
        """Adding args controlling machine-readable output"""
        parser.add_argument(
            '--json',
            action='store_true',
            default=False,
            help='Print the result as JSON on stdout',
        )

    @staticmethod
    def add_search_args(parser: argparse.ArgumentParser):
        """Adding args needed to run an exhaustive enumeration"""
        parser.add_argument(
            '--boundary-prune',
            action='store_true',
            default=False,
            help='Skip candidates leaving a boundary row or column without seeds',
        )
        parser.add_argument(
            '--empty-pair-prune',
            action='store_true',
            default=False,
            help='Skip candidates with two consecutive seed-free rows or columns',
        )
        parser.add_argument(
            '--odd-columns',
            action='store_true',
            default=False,
            help='Only place one seed in every odd column. Needs m odd and gamma = (m + 1) / 2',
        )
        parser.add_argument(
            '--all-prunes',
            action='store_true',
            default=False,
            help='Enable the boundary and empty-pair prunes, and the odd-column restriction when it applies',
        )
        parser.add_argument(
            '-j',
            '--jobs',
            type=int,
            default=1,
            help='Number of worker processes. Output does not depend on it. Default is 1',
        )
        parser.add_argument(
            '--force',
            action='store_true',
            default=False,
            help='Run even if the candidate count exceeds the search budget (CONTAGRID_BUDGET)',
        )
        parser.add_argument(
            '--progress',
            action='store_true',
            default=False,
            help='Show a progress bar on stderr',
        )

    @staticmethod
    def add_witness_args(parser: argparse.ArgumentParser):
        parser.add_argument(
            '--witnesses',
            action='store_true',
            default=False,
            help='Also print every solution in canonical "r,c;..." form',
        )
        parser.add_argument(
            '--format',
            choices=['text', 'csv', 'json'],
            default='text',
            help='Output format. By default: text',
        )

    @staticmethod
    def add_simulate_args(parser: argparse.ArgumentParser):
        """Adding args needed to run a single contamination process"""
        parser.add_argument(
            '--seeds',
            metavar='"r,c;r,c;..."',
            help='Seed cells, 1-based, separated by semicolons',
        )
        parser.add_argument(
            '--scenario',
            metavar='FILE',
            help='JSON scenario file {"n": .., "m": .., "seeds": [[r, c], ...]}. Replaces --dims and --seeds',
        )
        parser.add_argument(
            '--trace',
            action='store_true',
            default=False,
            help='Print an ASCII frame per round: S seed, # contaminated later, . clean',
        )

    @staticmethod
    def add_table_args(parser: argparse.ArgumentParser):
        parser.add_argument(
            'quantity',
            choices=['gamma', 'alpha'],
            help='gamma uses the closed form, alpha enumerates optimal solutions within the search budget',
        )
        parser.add_argument(
            '--max',
            type=int,
            dest='max_side',
            help=f'Bound for both n and m. Default is {GAMMA_TABLE_MAX} for gamma and 6 for alpha',
        )
        parser.add_argument('--max-n', type=int, help='Largest number of rows')
        parser.add_argument('--max-m', type=int, help='Largest number of columns')
        parser.add_argument(
            '--format',
            choices=['csv', 'json'],
            default='csv',
            help='Output format. By default: csv',
        )

    @staticmethod
    def add_out_args(parser: argparse.ArgumentParser):
        parser.add_argument(
            '-o',
            '--out',
            metavar='FILE',
            help='Write the output to a file instead of stdout',
        )

    @staticmethod
    def add_verify_args(parser: argparse.ArgumentParser):
        """Adding args needed to run the claim checks"""
        parser.add_argument(
            '--suite',
            choices=SUITES,
            default='all',
            help='Group of claims to check. By default: all',
        )
        parser.add_argument(
            '--max',
            type=int,
            default=6,
            dest='max_side',
            help='Largest side of the exhaustively searched grids. Default is 6',
        )
        parser.add_argument(
            '--cases',
            type=int,
            default=1000,
            help='Randomized cases per property. Default is 1000',
        )
        parser.add_argument(
            '--seed',
            type=int,
            default=0,
            help='Seed of the randomized property checks. Default is 0',
        )
        parser.add_argument(
            '--pytest',
            action='store_true',
            default=False,
            help='Run the functional test suites with pytest instead, writing JUnit XML and HTML reports '
                 'to the log folder',
        )
        parser.add_argument(
            '-k',
            metavar='EXPRESSION',
            default='',
            dest='test_expression',
            help='Run tests which match the given substring expression for pytest -k.',
        )
        parser.add_argument(
            '-m',
            metavar='MARKEXPR',
            default='',
            dest='test_mark_expression',
            help='Run tests which matching given mark expression for pytest -m',
        )


def parse_args(name: str, description: str,  # noqa: C901
               argv: typing.Optional[typing.Sequence[str]] = None) -> argparse.Namespace:
    """Parse all the args set up above"""
    parser = ContagridArgumentParser(name, description)

    subparsers = parser.add_subparsers(dest='mode')
    subparsers.required = True

    simulate_subparser = subparsers.add_parser('simulate', help='Run the contamination process from seeds')
    parser.add_dims_args(simulate_subparser, required=False)
    parser.add_simulate_args(simulate_subparser)
    parser.add_output_args(simulate_subparser)

    gamma_subparser = subparsers.add_parser('gamma', help='Contamination number of a grid')
    parser.add_dims_args(gamma_subparser)
    gamma_subparser.add_argument(
        '--method',
        choices=['formula', 'brute', 'all'],
        default='formula',
        help='Closed form, exhaustive search or both with a disagreement check. By default: formula',
    )
    parser.add_search_args(gamma_subparser)
    parser.add_output_args(gamma_subparser)

    alpha_subparser = subparsers.add_parser('alpha', help='Count optimal contaminating sets')
    parser.add_dims_args(alpha_subparser)
    parser.add_search_args(alpha_subparser)
    parser.add_witness_args(alpha_subparser)

    beta_subparser = subparsers.add_parser('beta', help='Count contaminating sets of any size')
    parser.add_dims_args(beta_subparser)
    parser.add_search_args(beta_subparser)
    parser.add_witness_args(beta_subparser)

    speed_subparser = subparsers.add_parser('speed', help='Rounds needed by every optimal solution')
    parser.add_dims_args(speed_subparser)
    parser.add_search_args(speed_subparser)

    table_subparser = subparsers.add_parser('table', help='Upper-triangle table of gamma or alpha')
    parser.add_table_args(table_subparser)
    parser.add_search_args(table_subparser)
    parser.add_out_args(table_subparser)

    verify_subparser = subparsers.add_parser('verify', help='Check formulas, tables and conjectures')
    parser.add_verify_args(verify_subparser)
    parser.add_search_args(verify_subparser)
    parser.add_out_args(verify_subparser)

    args = parser.parse_args(argv)

    for key in vars(args):
        arg_val = getattr(args, key)
        try:
            if isinstance(arg_val, (list, tuple)):
                for elem in arg_val:
                    check_printable_utf8_chars(elem)
            elif isinstance(arg_val, str):
                check_printable_utf8_chars(arg_val)
        except InputNotValid as err:
            parser.error(str(err))

    if hasattr(args, 'jobs') and args.jobs < 1:
        parser.error(f'--jobs must be positive, got {args.jobs}')

    if args.mode == 'simulate':
        if args.scenario and (args.dims or args.seeds):
            parser.error('Use either --scenario or --dims with --seeds')
        if not args.scenario and not args.dims:
            parser.error('The following arguments are required: --dims or --scenario')
        try:
            if args.scenario:
                scenario_path = pathlib.Path(args.scenario)
                if scenario_path.is_symlink():
                    parser.error('Do not use symlink and hard link for --scenario key. It is an insecure way.')
                args.scenario = load_scenario(scenario_path)
            else:
                args.scenario = Scenario.from_text(args.dims, args.seeds or '')
        except InputNotValid as err:
            parser.error(str(err))
        args.dims = args.scenario.dims

    elif args.mode in ('gamma', 'alpha', 'beta', 'speed'):
        try:
            args.dims = parse_dims(args.dims)
        except InputNotValid as err:
            parser.error(str(err))

    if args.mode == 'table':
        default_side = GAMMA_TABLE_MAX if args.quantity == 'gamma' else 6
        side = default_side if args.max_side is None else args.max_side
        args.max_n = side if args.max_n is None else args.max_n
        args.max_m = side if args.max_m is None else args.max_m
        if args.max_n < 0 or args.max_m < 0:
            parser.error(f'Table bounds must be non-negative, got --max-n {args.max_n} --max-m {args.max_m}')

    if args.mode == 'verify':
        if args.max_side < 1 or args.cases < 1:
            parser.error('--max and --cases must be positive')
        if args.pytest and args.suite != 'all':
            parser.error('--pytest runs every functional suite, use -k or -m to select tests')

    if getattr(args, 'witnesses', False) and args.mode == 'beta' and args.dims.size > 20:
        parser.error(f'Listing every feasible set of {args.dims} is not supported, drop --witnesses')

    if getattr(args, 'out', None):
        args.out = pathlib.Path(args.out).absolute()

    return args
