"""This module contains the root of all tripoly exceptions."""


class TripolyError(BaseException):
    """Base class for all errors raised by tripoly.

    The command line interface treats every TripolyError as a domain error.

    """
