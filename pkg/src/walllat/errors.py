"""Exception types shared across the package."""

from __future__ import annotations


class CapacityError(RuntimeError):
    """An enumeration would exceed a configured cap (group order, interval size, ...)."""


class ValidationError(ValueError):
    """Structured input data violates a construction invariant."""


class ParseError(ValueError):
    """Text input is malformed.  Carries the 0-based offset plus line/column."""

    def __init__(self, message: str, text: str, offset: int):
        self.offset = offset
        prefix = text[:offset]
        self.line = prefix.count("\n") + 1
        self.column = offset - (prefix.rfind("\n") + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column}, offset {offset})")


class SchemaError(ValueError):
    """A JSON document does not match its schema.  ``path`` addresses the offending field."""

    def __init__(self, message: str, path: str):
        self.path = path
        super().__init__(f"{path}: {message}")
