"""Exception hierarchy shared by all rekonfig modules."""


class RekonfigError(Exception):
    """Base class for all errors raised by this package."""


class GraphConstructionError(RekonfigError):
    """Raised for self-loops or out-of-range vertex ids in edge lists."""


class SizeMismatchError(RekonfigError):
    """Raised when two vertex sets that must have equal size do not."""


class PreconditionError(RekonfigError):
    """Raised when a caller violates a documented precondition."""


class ResourceBudgetError(RekonfigError):
    """Raised when a solver exceeds its state or time budget.

    Distinct from a NO answer: the computation was aborted, not decided.
    """


class FormatSyntaxError(RekonfigError):
    """Malformed input text. Carries 1-based line and column of the fault."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(f"line {line}, col {column}: {message}" if line else message)
        self.line = line
        self.column = column


class FormatSemanticsError(RekonfigError):
    """Syntactically valid input whose content violates a semantic invariant."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class NonGoodCrossingError(RekonfigError):
    """A drawing crossing cannot be replaced by a crossover gadget."""
