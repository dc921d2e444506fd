"""Exceptions shared across the package."""


class GisError(Exception):
    """Base class for all errors raised by graphinverse."""


class ParseError(GisError):
    """Text does not conform to the graph, path, or element grammar."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ValidationError(GisError):
    """Structurally well-formed input violates a semantic invariant
    (unknown endpoint, duplicate id, zero-width bundle, range mismatch,
    edge index out of bundle range, non-composing edge list)."""


class CompositionError(GisError):
    """Attempt to concatenate paths whose endpoints do not match."""


class GraphMismatch(GisError):
    """Operands live over different graphs."""


class UnknownVertex(GisError):
    """A vertex id is not a declared core vertex of the graph."""


class WitnessMismatch(GisError):
    """A non-discreteness witness is inconsistent with the graph it
    claims to describe."""
