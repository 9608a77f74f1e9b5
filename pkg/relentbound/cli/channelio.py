"""Reading channel matrices from CSV or JSON files.

The CSV format has one row per input symbol, holding the comma-separated
probabilities ``T(y|x)`` of the outputs, with an optional header line naming
the outputs.  Blank lines are ignored.  The JSON format is an object with a
``"matrix"`` member holding the list of rows.  Numbers always use a decimal
point, independent of locale.
"""

import json
import re
from io import StringIO

from relentbound.apps import Channel
from relentbound.core import ProbVector
from .location import TextLocationSingle


class ChannelReadError(Exception):
    """An exception class used for all problems noticed by the channel
    readers.
    """
    pass


RE_NUMBER = re.compile(r'''
    [+-]?
    (?: [0-9]+ (?:\.[0-9]*)? | \.[0-9]+ )
    (?: [eE] [+-]? [0-9]+ )?
''', re.VERBOSE)


def _split_fields(text):
    """Yields ``(column, field)`` for the comma-separated fields of a line,
    with surrounding blanks removed and 1-based starting columns.
    """
    pos = 0
    for raw in text.split(','):
        stripped = raw.strip(' \t')
        lead = len(raw) - len(raw.lstrip(' \t'))
        yield pos + lead + 1, stripped
        pos += len(raw) + 1


class ChannelReader:
    """A class for reading a CSV channel matrix.  Accepts the input
    line-by-line; ``finish`` returns the :py:class:`relentbound.apps.Channel`.
    """

    def __init__(self, filename):
        """Initializes internal state.  ``filename`` affects only the
        locations in error messages.
        """
        self.filename = filename
        self.line = 0
        self.rows = []
        self.header = None
        self.width = None

    def feed_line(self, line):
        """Feeds one line of input into the reader."""
        self.line += 1
        text = line.rstrip('\r\n')
        if not text.strip():
            return
        line_start = TextLocationSingle(self.filename, self.line, 1)
        fields = list(_split_fields(text))
        if self.width is None:
            self.width = len(fields)
        elif len(fields) != self.width:
            raise ChannelReadError(
                f'{line_start}: expected {self.width} fields, '
                f'got {len(fields)}')
        values = []
        for column, field in fields:
            if RE_NUMBER.fullmatch(field):
                values.append(float(field))
                continue
            if (field and self.header is None and not self.rows
                    and not values):
                # Only the very first line may be a header.
                self.header = [name for _, name in fields]
                return
            loc = TextLocationSingle(self.filename, self.line, column)
            raise ChannelReadError(
                f'{loc.span(len(field))}: not a number: {field!r}')
        try:
            self.rows.append(ProbVector(values))
        except ValueError as exc:
            loc = line_start.span(len(text))
            raise ChannelReadError(f'{loc}: invalid row: {exc}') from None

    def finish(self):
        """Ensures at least one row was read and builds the channel."""
        if not self.rows:
            raise ChannelReadError(f'{self.filename}: no channel rows')
        return Channel(self.rows)


def read_channel_csv(file, filename='<input>'):
    """Reads a CSV channel from a file object."""
    reader = ChannelReader(filename)
    for line in file:
        reader.feed_line(line)
    return reader.finish()


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def read_channel_json(text, filename='<input>'):
    """Reads a JSON channel ``{"matrix": [[...], ...]}`` from a string."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        loc = TextLocationSingle(filename, exc.lineno, exc.colno)
        raise ChannelReadError(f'{loc}: {exc.msg}') from None
    if not isinstance(data, dict) or 'matrix' not in data:
        raise ChannelReadError(f'{filename}: expected an object with '
                               f'a "matrix" member')
    matrix = data['matrix']
    if not isinstance(matrix, list) or not matrix:
        raise ChannelReadError(f'{filename}: "matrix" must be a non-empty '
                               f'list of rows')
    rows = []
    for idx, row in enumerate(matrix):
        if not isinstance(row, list) or not all(map(_is_number, row)):
            raise ChannelReadError(
                f'{filename}: matrix row {idx} is not a list of numbers')
        try:
            rows.append(ProbVector(row))
        except ValueError as exc:
            raise ChannelReadError(
                f'{filename}: matrix row {idx}: {exc}') from None
    try:
        return Channel(rows)
    except ValueError as exc:
        raise ChannelReadError(f'{filename}: {exc}') from None


def read_channel(text, filename='<input>'):
    """Reads a channel in either format: JSON if ``filename`` ends in
    ``.json`` or the content starts with ``{``, CSV otherwise.
    """
    if filename.endswith('.json') or text.lstrip().startswith('{'):
        return read_channel_json(text, filename)
    return read_channel_csv(StringIO(text), filename)
