# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Logging setup for the contamination engine: console, summary file and per-run detail files"""
import logging
import logging.config
import pathlib
import sys
import typing

LINE_SINGLE = '-' * 79
LINE_DOUBLE = '=' * 79

log = logging.getLogger('contagrid')


def init_logger(logdir: typing.Optional[pathlib.Path] = None) -> pathlib.Path:
    """Configure the 'contagrid' logger, returns the summary log location"""
    if logdir is None:
        logdir = pathlib.Path(__file__).parent.parent / 'logs'
    logfile = pathlib.Path(logdir) / 'summary.log'
    logfile.parent.mkdir(parents=True, exist_ok=True)

    logger_config = {
        'version': 1,
        'disable_existing_loggers': False,
        'formatters': {
            'custom': {
                '()': 'contagrid.logger.CustomFormatter',
            },
        },
        'handlers': {
            'console': {
                'level': 'INFO',
                'class': 'contagrid.logger.ConsoleHandler',
                'formatter': 'custom',
            },
            'summary': {
                'level': 'DEBUG',
                'class': 'logging.FileHandler',
                'filename': str(logfile),
                'encoding': 'utf-8',
                'formatter': 'custom',
                'mode': 'w',
            },
        },
        'loggers': {
            'contagrid': {
                'handlers': ['summary', 'console'],
                'level': 'DEBUG',
                'propagate': False,
            },
        },
    }

    logging.config.dictConfig(logger_config)

    # indentation for nested progress output
    decorate_logger(logging.Logger, getattr(logging.Logger, '_log'))

    return logfile


def decorate_logger(logger: typing.Type[logging.Logger], func: typing.Callable[..., None]):
    """Add increase_indent/decrease_indent to every logger, once"""
    if getattr(logger, '_indent_decorated', False):
        logger._main_handlers = log.handlers[:]  # type: ignore[attr-defined]
        return

    def indented_log(self, level, msg, args, exc_info=None, extra=None, stack_info=False, stacklevel=1):
        msg = ' ' * self._indent + str(msg)
        func(self, level, msg, args, exc_info, extra, stack_info, stacklevel)

    def increase_indent(self, inc=2):
        self._indent += inc

    def decrease_indent(self, inc=2):
        self._indent = max(0, self._indent - inc)

    logger._indent = 0  # type: ignore[attr-defined]
    logger.increase_indent = increase_indent  # type: ignore[attr-defined]
    logger.decrease_indent = decrease_indent  # type: ignore[attr-defined]
    logger._log = indented_log  # type: ignore[assignment]
    logger._indent_decorated = True  # type: ignore[attr-defined]
    logger._main_handlers = log.handlers[:]  # type: ignore[attr-defined]


def switch_to_custom(name: typing.Union[str, pathlib.Path], logdir: typing.Optional[pathlib.Path] = None):
    """Divert log output to a dedicated file, e.g. per-chunk enumeration progress"""
    remove_summary()
    remove_customs()
    log.addHandler(UniqueFileHandler(name, logdir))


def add_summary():
    if hasattr(log, '_main_handlers'):
        for handler in getattr(log, '_main_handlers'):
            if handler not in log.handlers:
                log.addHandler(handler)


def remove_summary():
    for handler in log.handlers[:]:
        if getattr(handler, '_name', None) in ('summary', 'console'):
            log.removeHandler(handler)


def remove_customs():
    for handler in log.handlers[:]:
        if isinstance(handler, UniqueFileHandler):
            log.removeHandler(handler)
            handler.close()


def switch_to_summary():
    """Return from a dedicated file to the console and summary handlers"""
    remove_customs()
    add_summary()


class ConsoleHandler(logging.StreamHandler):
    """Console handler bound to whatever sys.stderr is when a record is emitted"""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self) -> typing.TextIO:  # type: ignore[override]
        return sys.stderr

    @stream.setter
    def stream(self, value: typing.TextIO):
        pass


class UniqueFileHandler(logging.FileHandler):
    """File handler creating its directory, writing without timestamps"""

    def __init__(self, filename: typing.Union[str, pathlib.Path], dir_: typing.Optional[pathlib.Path] = None):
        if not dir_:
            dir_ = pathlib.Path(__file__).parent.parent / 'logs'
        pathlib.Path(dir_).mkdir(parents=True, exist_ok=True)
        super().__init__(str(pathlib.Path(dir_) / filename), mode='w+', encoding='utf-8')
        self.setFormatter(CustomFormatter(set_time=False))
        self.setLevel(logging.DEBUG)


class CustomFormatter(logging.Formatter):
    """Timestamped formatter indenting multi-line messages with '| '"""

    def __init__(self, set_time: typing.Optional[bool] = True, fmt: typing.Optional[str] = None,
                 datefmt: typing.Optional[str] = None):
        super().__init__(fmt, datefmt)
        self.has_time = set_time

    def format(self, record: logging.LogRecord) -> str:  # noqa: A003
        lines = record.getMessage().split('\n')
        output = []
        for line in lines:
            if not line.strip():
                continue
            msg = ' ' * 10 + '| ' + line if len(lines) > 1 else line
            if self.has_time:
                prefix = f'[{self.formatTime(record, "%Y-%m-%d %H:%M:%S")}] {record.levelname.ljust(8)} '
            else:
                prefix = ''
            output.append(f'{prefix}{msg}')
        text = '\n'.join(output)
        if record.exc_info and not record.exc_text:
            record.exc_text = self.format_exception_better(self.formatException(record.exc_info))
        if record.exc_text:
            text += '\n' + record.exc_text
        if record.stack_info:
            text += '\n' + self.formatStack(record.stack_info)
        return text

    @staticmethod
    def format_exception_better(text: str) -> str:
        return '\n'.join(' ' * 10 + f'| {line}' for line in text.split('\n'))
