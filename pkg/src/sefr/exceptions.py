"""Exception hierarchy.

Everything raised on bad input derives from SefrError so callers (and the
CLI) can catch one type. Most classes also subclass ValueError to stay
friendly to generic error handling.
"""


class SefrError(Exception):
    """Base class for all errors raised by this package."""


class InvalidValue(SefrError, ValueError):
    """A value is NaN, infinite, or not numeric."""


class NegativeFeature(SefrError, ValueError):
    """A feature value is negative where non-negative input is required."""


class MissingClass(SefrError, ValueError):
    """Training data lacks a class that the operation needs."""


class DimensionMismatch(SefrError, ValueError):
    """A record's feature count differs from the model's."""


class LengthMismatch(SefrError, ValueError):
    """Label vector length differs from the number of records."""


class EmptyMatrix(SefrError, ValueError):
    """An operation received zero records or zero features."""


class BadK(SefrError, ValueError):
    """Fold count is out of range for the data."""


class ParseError(SefrError, ValueError):
    """A CSV cell failed to parse. Carries 1-based row and column."""

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class RaggedRows(ParseError):
    """A CSV row has a different cell count than the first row."""


class EmptyFile(SefrError, ValueError):
    """The input file contains no data rows."""


class SchemaError(SefrError, ValueError):
    """A serialized document is structurally invalid."""


class VersionMismatch(SchemaError):
    """A serialized document declares an unsupported format version."""


class OutOfRange(SefrError, ValueError):
    """A value falls outside the range the operation accepts."""


class GridOutOfBounds(SefrError, ValueError):
    """A benchmark grid point exceeds the dataset's bounds."""


class ModelTooLarge(SefrError, ValueError):
    """Exported model arrays exceed the flash budget."""


class ShapeMismatch(SefrError, ValueError):
    """Array dimensions disagree (rows, grid shape, and the like)."""
