"""This module contains the command line front end:

- :py:func:`relentbound.cli.main` -- the ``relentbound`` entry point
- :py:func:`relentbound.cli.run` -- executes a
  :py:class:`relentbound.cli.RunConfig` without touching the process state
- :py:func:`relentbound.cli.read_channel` -- reads channel matrices from CSV
  or JSON
"""

from .location import TextLocationRange, TextLocationSingle
from .channelio import ChannelReadError, ChannelReader, read_channel
from .output import Column, Kind, Table, render
from .main import RunConfig, RunResult, build_parser, main, run

__all__ = [
    'TextLocationRange', 'TextLocationSingle',
    'ChannelReadError', 'ChannelReader', 'read_channel',
    'Column', 'Kind', 'Table', 'render',
    'RunConfig', 'RunResult', 'build_parser', 'main', 'run',
]
