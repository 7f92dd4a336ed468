import logging
from functools import cached_property

from django.utils.termcolors import colorize

STAGE_PREFIX = 'qe.'


class PipelineStreamHandler(logging.StreamHandler):  # pragma: no cover
    """
    Console handler for the ``qe`` loggers. Sets ``record.stage`` to the logger name without the ``qe.`` prefix for
    the formatter, marks warnings and errors with their level and colours the line by level on a terminal. Records go
    to stderr so the tables subcommands print on stdout stay clean.
    """

    fg = {logging.DEBUG: 'blue', logging.INFO: 'cyan', logging.WARNING: 'yellow'}

    @cached_property
    def is_tty(self):
        isatty = getattr(self.stream, 'isatty', None)
        return bool(isatty and isatty())

    def format(self, record):
        record.stage = record.name.removeprefix(STAGE_PREFIX)
        message = super().format(record)
        if record.levelno >= logging.WARNING:
            message = f'{record.levelname.lower()}: {message}'
        if self.is_tty:
            message = colorize(message, fg=self.fg.get(record.levelno, 'red'), opts=('bold',))
        return message
