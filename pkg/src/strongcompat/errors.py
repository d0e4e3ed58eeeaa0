"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class StrongCompatError(Exception):
    """Base class; ``witness`` carries the offending object when one exists."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class InvalidParameter(StrongCompatError, ValueError):
    pass


class ValidationError(StrongCompatError, ValueError):
    """An input object violates an axiom (group, action, order, complex)."""


class PreconditionViolation(StrongCompatError, ValueError):
    pass


class CapacityError(StrongCompatError):
    """Enumeration exceeded its cap; ``partial_count`` is how far it got."""

    def __init__(self, message: str, partial_count: int):
        super().__init__(message, witness=partial_count)
        self.partial_count = partial_count


class InternalInvariantError(StrongCompatError, AssertionError):
    """A construction broke a property that a proven result guarantees."""


class ParseError(StrongCompatError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
