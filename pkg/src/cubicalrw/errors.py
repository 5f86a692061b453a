"""Exception hierarchy shared across the package.

The CLI maps these onto exit codes: verification failures (face mismatch,
missing square generators) exit 1, input problems exit 2, fuel exhaustion
exits 3.
"""


class RewritingError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RewritingError):
    """Malformed input text (polygraph files, shells, certificates)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class PreconditionError(RewritingError):
    """An operation was invoked on arguments violating its contract."""


class FaceMismatchError(RewritingError):
    """Cell composition attempted along edges that do not agree."""


class IncompleteCompletionError(RewritingError):
    """An overlapping branching has no matching square generator."""


class FuelExhaustedError(RewritingError):
    """Rewriting did not reach a normal form within the step budget."""


class TerminationOrderError(RewritingError):
    """The rules do not all decrease the given shortlex order."""
