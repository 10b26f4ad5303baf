"""
Exception hierarchy for planemaps.

Library code raises these; only the command-line front end turns them into
printed errors and exit codes (see EXIT_CODES).
"""


class PlaneMapsError(Exception):
    """Base class for every error raised by planemaps."""


class ParseError(PlaneMapsError, ValueError):
    """Polynomial or map-file text that does not follow the grammar."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class VariableMismatch(PlaneMapsError, ValueError):
    """Operands live in rings with different variable lists."""


class DegreeError(PlaneMapsError, ValueError):
    """A degree precondition does not hold."""


class FieldModeError(PlaneMapsError, ValueError):
    """Bad field mode, or a rational that cannot be reduced mod p."""


class ConfigError(PlaneMapsError, ValueError):
    """Invalid run configuration or environment setting."""


class BudgetExceeded(PlaneMapsError):
    """The S-pair budget of a Groebner computation ran out."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"S-pair budget of {budget} exhausted")


class IncompleteSequence(PlaneMapsError, ValueError):
    """An exponent sequence whose gcd chain never reaches 1."""


class InternalDisagreement(PlaneMapsError):
    """Two independent computations of the same quantity differ."""


class NotAGeneralizedCusp(PlaneMapsError):
    """The critical curve is not reduced near the queried point."""


class InfiniteIntersection(PlaneMapsError):
    """A local intersection number that should be finite is infinite."""


class AmbiguousIndex(PlaneMapsError):
    """Two independent target matrices gave different cusp indices."""


# CLI exit codes, most specific class first
EXIT_OK = 0
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_MISMATCH = 4

EXIT_CODES = [
    (BudgetExceeded, EXIT_BUDGET),
    (InternalDisagreement, EXIT_MISMATCH),
    (AmbiguousIndex, EXIT_MISMATCH),
    (NotAGeneralizedCusp, EXIT_MISMATCH),
    (InfiniteIntersection, EXIT_MISMATCH),
    (ValueError, EXIT_PARSE),
    (OSError, EXIT_PARSE),
]


def exit_code_for(error: BaseException) -> int:
    """Map an exception to the CLI exit code."""
    for error_class, code in EXIT_CODES:
        if isinstance(error, error_class):
            return code
    return EXIT_MISMATCH
