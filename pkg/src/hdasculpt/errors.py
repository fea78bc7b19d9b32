"""Exception types shared across the package."""

from __future__ import annotations


class HdaError(Exception):
    """Base class for all package errors."""


class InvalidStructureError(HdaError):
    """A structure failed validation; carries the offending report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class IllegalPathError(HdaError):
    """A path object does not describe legal steps in its automaton."""


class NotConnectedError(HdaError):
    """An operation required a connected automaton."""


class CyclicError(HdaError):
    """An operation required an acyclic automaton."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class RepeatingEventsError(HdaError):
    """An operation required non-repeating events; carries a witness path."""

    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path


class NotConsistentError(HdaError):
    """The automaton is inherently self-concurrent."""

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class NotRegularError(HdaError):
    """An ST-structure failed a regularity requirement."""

    def __init__(self, message, flags=None):
        super().__init__(message)
        self.flags = flags


class NotProperError(HdaError):
    """An event partition is not a proper identification."""

    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation


class NonExtensionalError(HdaError):
    """A Chu space has duplicate states."""


class ResourceLimitError(HdaError):
    """A configured size or search budget was exceeded."""


class PvSyntaxError(HdaError):
    """A PV program failed to parse; carries line and column."""

    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnmatchedReleaseError(HdaError):
    """A V action has no earlier unmatched P for the same resource."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class HeldAtEndError(HdaError):
    """A process terminates while still holding resources."""

    def __init__(self, message, process=None, resources=()):
        super().__init__(message)
        self.process = process
        self.resources = tuple(resources)


class InitialForbiddenError(HdaError):
    """The initial corner of a PV complex is excluded."""
