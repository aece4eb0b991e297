"""Exception types shared across the package."""

from __future__ import annotations


class AlphaGroupError(Exception):
    """Base class for every error this package raises deliberately."""


class ZeroDivisorError(AlphaGroupError):
    """Inversion was requested for an element with a vanishing projection."""


class ParseError(AlphaGroupError):
    """Malformed scalar-field expression or metric-definition file.

    ``offset`` is the byte offset into the expression source, ``line`` the
    1-based line number when the source is a metric file.
    """

    def __init__(self, message: str, offset: int | None = None,
                 line: int | None = None):
        self.message = message
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class UnknownIdentifierError(ParseError):
    """Identifier outside the allowed variable/function set."""


class DuplicateComponentError(ParseError):
    """The same metric component was assigned twice in one file."""


class ComponentIndexError(ParseError):
    """Metric component index outside the 4x4 grid."""


class EvalError(AlphaGroupError):
    """Scalar-field evaluation failed (division by zero, domain error,
    or a non-finite intermediate)."""


class NotRiemannianError(AlphaGroupError):
    """Geodesic search refused: the metric does not match the
    Riemannian/Euclidean zero pattern."""


class NegativeSquaredLengthError(AlphaGroupError):
    """A squared segment length came out negative beyond tolerance in
    real-length mode."""
