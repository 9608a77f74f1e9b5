"""Positions in input files, used to prefix diagnostics."""

from attr import attrib, attrs
from attr.validators import instance_of


@attrs(slots=True, frozen=True)
class TextLocationSingle:
    """Represents a single (filename, line, column) location in the input.
    Lines and columns count from 1.
    """

    filename = attrib(validator=instance_of(str))
    line = attrib(validator=instance_of(int))
    column = attrib(validator=instance_of(int))

    def __str__(self):
        return f'{self.filename}:{self.line}:{self.column}'

    def span(self, width):
        """Returns the :py:class:`TextLocationRange` of ``width`` characters
        starting here.  An empty span covers just this column.
        """
        end = self.column + max(width, 1) - 1
        return TextLocationRange(self.filename, self.line, self.column, end)


@attrs(slots=True, frozen=True)
class TextLocationRange:
    """Represents a range of columns on one line of an input file, with both
    endpoints included (a CSV cell never spans lines).
    """

    filename = attrib(validator=instance_of(str))
    line = attrib(validator=instance_of(int))
    start_column = attrib(validator=instance_of(int))
    end_column = attrib(validator=instance_of(int))

    def __str__(self):
        if self.start_column == self.end_column:
            return f'{self.filename}:{self.line}:{self.start_column}'
        return (f'{self.filename}:{self.line}:'
                f'{self.start_column}-{self.end_column}')
