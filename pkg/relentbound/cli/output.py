"""Serialization of command results to JSON or CSV.

A result is a list of :py:class:`Table` objects.  Every column has a
:py:class:`Kind` telling how its values scale when output is requested in
bits instead of nats; computation always happens in nats.  Floats are
written with 12 significant digits, and infinities as the string ``inf``
(in JSON too, since JSON has no infinity).
"""

import csv
import json
import math
from enum import Enum
from io import StringIO

from attr import attrib, attrs
from attr.validators import instance_of

LOG2 = math.log(2)
UNITS = ('nats', 'bits')
FORMATS = ('json', 'csv')


class Kind(Enum):
    """Represents how a column converts between units."""
    PLAIN = 'plain'
    ENTROPY = 'entropy'
    VARIANCE = 'variance'


@attrs(slots=True, frozen=True)
class Column:
    """A named table column."""

    name = attrib(validator=instance_of(str))
    kind = attrib(default=Kind.PLAIN, validator=instance_of(Kind))


@attrs(slots=True, frozen=True)
class Table:
    """A named list of rows, each a tuple with one value per column."""

    name = attrib(validator=instance_of(str))
    columns = attrib(converter=tuple)
    rows = attrib(converter=tuple)


def convert(value, kind, units):
    """Converts a value in nats (or squared nats) to ``units``."""
    if units not in UNITS:
        raise ValueError(f'unknown units {units!r}')
    if units == 'nats' or not isinstance(value, float):
        return value
    if kind is Kind.ENTROPY:
        return value / LOG2
    if kind is Kind.VARIANCE:
        return value / LOG2 ** 2
    return value


def format_float(value):
    """Formats a float with 12 significant digits, ``inf`` for infinity."""
    if math.isnan(value):
        return 'nan'
    if math.isinf(value):
        return 'inf' if value > 0 else '-inf'
    return f'{value:.12g}'


def _csv_value(value):
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def _json_value(value):
    if isinstance(value, bool) or not isinstance(value, float):
        return value
    if not math.isfinite(value):
        return format_float(value)
    return float(format_float(value))


def _converted_rows(table, units):
    for row in table.rows:
        yield [convert(value, column.kind, units)
               for value, column in zip(row, table.columns)]


def render_json(tables, units):
    """Renders tables as one JSON object mapping table names to lists of
    row objects, plus the ``units`` member.
    """
    data = {'units': units}
    for table in tables:
        names = [column.name for column in table.columns]
        data[table.name] = [
            {name: _json_value(value) for name, value in zip(names, row)}
            for row in _converted_rows(table, units)
        ]
    return json.dumps(data, indent=2) + '\n'


def render_csv(tables, units):
    """Renders tables as CSV, each with a header line, separated by blank
    lines.
    """
    out = StringIO()
    writer = csv.writer(out, lineterminator='\n')
    for idx, table in enumerate(tables):
        if idx:
            out.write('\n')
        writer.writerow([column.name for column in table.columns])
        for row in _converted_rows(table, units):
            writer.writerow([_csv_value(value) for value in row])
    return out.getvalue()


def render(tables, output_format, units):
    """Renders tables in ``output_format`` (``json`` or ``csv``)."""
    if output_format == 'json':
        return render_json(tables, units)
    if output_format == 'csv':
        return render_csv(tables, units)
    raise ValueError(f'unknown output format {output_format!r}')
