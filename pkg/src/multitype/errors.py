"""Typed exceptions shared across the engine."""

from __future__ import annotations


class MultitypeError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(MultitypeError):
    """Operands disagree on the number of variables (or a matrix is not square)."""


class InvalidSubstitutionError(MultitypeError):
    """A substitution step whose shift involves its own target variable."""


class ConstantTermError(MultitypeError):
    """A generator that does not vanish at the origin."""


class DegenerateIdealError(MultitypeError):
    """All generators are identically zero."""


class WeightError(MultitypeError):
    """An invalid weight tuple or an invalid weight advancement."""


class InfiniteTypeError(MultitypeError):
    """The hypersurface has an infinite multitype entry (no residual monomial
    can determine the next weight while undetermined variables remain)."""


class NonTerminationError(MultitypeError):
    """The step cap was reached before all multitype entries were determined."""


class ClassificationError(MultitypeError):
    """A constant monomial was passed where a nonzero-degree monomial is required."""


class InputSyntaxError(MultitypeError):
    """A parse failure, carrying the 1-based line and column of the offending token."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
