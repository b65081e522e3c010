"""Exception hierarchy shared across the package.

DomainError subclasses signal violated mathematical preconditions
(disconnected input, infeasible budget, ...). They map to exit code 1
in the CLI and HTTP 400 in the service. Input-format problems
(EdgeListParseError) map to exit code 2 / HTTP 422.
"""


class DomainError(Exception):
    """A precondition of an operation does not hold for the given input."""


class GraphValidationError(DomainError):
    """Graph construction rejected the edge data."""


class DisconnectedGraphError(DomainError):
    """The operation requires a connected (or strongly connected) graph."""


class GenerationError(DomainError):
    """Random graph generation could not satisfy the request."""


class BudgetExceededError(DomainError):
    """Leader selection exhausted the user-supplied cardinality budget."""


class CapExceededError(DomainError):
    """Brute-force search refused an input above its size cap."""


class EdgeListParseError(ValueError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
