"""Shared exception types."""


class SlurmlensError(Exception):
    """Base class for every error this package raises on purpose."""


class EmptyTable(SlurmlensError):
    """An operation that needs at least one row got none."""


class MissingColumn(SlurmlensError):
    """A required column is not present in the table."""

    def __init__(self, column: str):
        super().__init__(f"required column not in table: {column!r}")
        self.column = column
