"""Exception hierarchy shared by every workbench subsystem.

The CLI maps the two branches to exit codes: ``ComputationRefused`` exits
with 1, ``MalformedInput`` with 2.
"""


class WorkbenchError(Exception):
    """Base exception for workbench errors."""
    pass


class ComputationRefused(WorkbenchError):
    """Raised when a request falls outside a cap or a hypothesis range."""
    pass


class MalformedInput(WorkbenchError, ValueError):
    """Raised when user-supplied input cannot be parsed."""
    pass


class ParameterRangeError(ComputationRefused):
    """Raised when (s, t, n, ...) violate an operation's stated range."""
    pass


class ConvergenceError(WorkbenchError):
    """Raised when an iterative solver fails to converge."""
    pass
