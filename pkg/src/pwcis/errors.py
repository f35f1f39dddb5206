"""Error types shared across the package.

Each error carries a stable machine-readable code.  The command line front
end maps codes to exit status: INVALID_INPUT exits 2, everything else that
is raised exits 3.
"""

from __future__ import annotations


class PwcisError(Exception):
    """Base class for all package errors."""

    code = "ERROR"


class InvalidInput(PwcisError):
    """A precondition on user-supplied data was violated."""

    code = "INVALID_INPUT"


class NumericFailure(PwcisError):
    """A numerical routine could not reach its accuracy target.

    Carries an optional ``detail`` payload (for example the log value whose
    exponential would have overflowed).
    """

    code = "NUMERIC_FAILURE"

    def __init__(self, message: str, detail=None):
        super().__init__(message)
        self.detail = detail


class PoleEvaluation(PwcisError):
    """Evaluation was requested exactly at a zero where a log-type quantity
    has a pole."""

    code = "POLE"


class SolverDiverged(PwcisError):
    """An iterative solver left its feasible region and could not recover."""

    code = "SOLVER_DIVERGED"


EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NUMERIC = 3


def exit_code_for(err: PwcisError) -> int:
    if isinstance(err, InvalidInput):
        return EXIT_INVALID_INPUT
    return EXIT_NUMERIC
