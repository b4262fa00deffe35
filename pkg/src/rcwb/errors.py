"""Exception hierarchy shared by every model and by the DSL front end."""

from __future__ import annotations


class RCWBError(Exception):
    """Base class for all workbench errors."""


class TypeMismatch(RCWBError):
    """Maps or objects do not line up (domain/codomain disagreement)."""


class IndexOutOfRange(RCWBError):
    pass


class NoZeroes(RCWBError):
    pass


class MissingStructure(RCWBError):
    """The model does not provide a requested structural witness."""


class Incompatible(RCWBError):
    def __init__(self, i: int, j: int, message: str = ""):
        self.i, self.j = i, j
        super().__init__(message or f"maps {i} and {j} of the family are not compatible")


class NotBelow(RCWBError):
    pass


class NotIdempotent(RCWBError):
    pass


class NotCoproductCodomain(RCWBError):
    pass


class InvalidMap(RCWBError):
    pass


class BudgetExceeded(RCWBError):
    pass


class ParseError(RCWBError):
    def __init__(self, line: int, column: int, message: str):
        self.line, self.column, self.message = line, column, message
        super().__init__(f"{line}:{column}: {message}")


class ValidationError(RCWBError):
    def __init__(self, name: str, reason: str, line: int = 0, column: int = 0):
        self.name, self.reason = name, reason
        self.line, self.column = line, column
        where = f"{line}:{column}: " if line else ""
        super().__init__(f"{where}{name}: {reason}")


class EvalError(RCWBError):
    """A failure while evaluating a DSL expression, tagged with its source span."""

    def __init__(self, line: int, column: int, source: str, message: str):
        self.line, self.column, self.source, self.message = line, column, source, message
        super().__init__(f"{line}:{column}: in `{source}`: {message}")
