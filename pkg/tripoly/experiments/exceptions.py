"""This module contains all exceptions of the experiments package."""

from tripoly.util.exceptions import TripolyError


class ExperimentError(TripolyError):
    """Base class for experiment related exceptions.

    Subclasses keep their constructor arguments, so that they survive the way back from worker
    processes.

    """

    def __init__(self, message: str, *arguments):
        self.arguments = arguments or (message,)
        super().__init__(message)

    def __reduce__(self):
        return type(self), self.arguments


class DatabaseSizeError(ExperimentError):
    """Raise if the size of an order type database is no multiple of its record size."""

    def __init__(self, path: str, size: int, record_size: int):
        super().__init__(
            f"Size {size} of '{path}' is not divisible by the record size {record_size}",
            path,
            size,
            record_size,
        )


class DegenerateRecordError(ExperimentError):
    """Raise if a record of an order type database is not in general position."""

    def __init__(self, record_index: int, reason: str):
        self.record_index = record_index
        super().__init__(f"Record {record_index} is degenerate: {reason}", record_index, reason)


class HullIndexError(ExperimentError):
    """Raise if an apex does not index a convex hull vertex of a record."""

    def __init__(self, record_index: int, apex: int, hull_size: int):
        super().__init__(
            f"Apex {apex} of record {record_index} is not in the hull range 0..{hull_size - 1}",
            record_index,
            apex,
            hull_size,
        )


class CheckpointError(ExperimentError):
    """Raise if a scan checkpoint can not be resumed."""
