# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
import logging
import pathlib

import pytest

from contagrid.logger import init_logger
from contagrid.utilities import LOGDIR_ENV

log = logging.getLogger('contagrid')

RESOURCES = pathlib.Path(__file__).parent / 'resources'


def pytest_addoption(parser):
    parser.addoption('--max-n', action='store', type=int, default=6,
                     help='Largest side of the grids enumerated by the functional suites')


def pytest_configure(config):
    config.addinivalue_line(
        'markers', 'slow: exhaustive enumeration above the default grid bound',
    )
    config.addinivalue_line(
        'markers', 'properties: randomized closure properties',
    )


def pytest_sessionfinish(session, exitstatus):
    log.info(f'Tests failed={session.testsfailed} collected={session.testscollected}')


@pytest.fixture(scope='session')
def max_n(request):
    return request.config.getoption('--max-n')


@pytest.fixture(scope='session')
def resources():
    return RESOURCES


@pytest.fixture()
def logdir(tmp_path, monkeypatch):
    monkeypatch.setenv(LOGDIR_ENV, str(tmp_path / 'logs'))
    return tmp_path / 'logs'


def pytest_runtest_setup(item):
    for mark in item.iter_markers():
        if mark.name == 'slow' and item.config.getoption('--max-n') < 7:
            pytest.skip('Test requires --max-n 7 or more')


@pytest.fixture(scope='session', autouse=True)
def _init_logger(tmp_path_factory):
    init_logger(tmp_path_factory.mktemp('logs'))
