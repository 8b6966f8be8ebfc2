"""Shared exception types, grouped by how the CLI reports them.

Parse and usage problems exit 1, validation failures exit 2, and
resource caps (dimension or search bounds) exit 3.
"""

from __future__ import annotations


class PolyParseError(ValueError):
    """Input text does not conform to the polynomial grammar."""

    def __init__(self, message: str, position: int | None = None) -> None:
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ValidationFailure(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ResourceCapExceeded(RuntimeError):
    """Requested computation exceeds a configured dimension or search cap."""
