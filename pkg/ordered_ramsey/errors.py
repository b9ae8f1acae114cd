"""Exception hierarchy shared by every module of the toolkit."""

from typing import Any, Optional


class OrderedRamseyError(Exception):
    """Base class for all toolkit errors."""


class PreconditionError(OrderedRamseyError, ValueError):
    """Input violates an operation's precondition."""


class GraphFormatError(PreconditionError):
    """Malformed graph or coloring text."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceededError(OrderedRamseyError):
    """The search node budget ran out before a definitive answer."""

    def __init__(self, message: str, nodes: int = 0, partial: Any = None):
        super().__init__(message)
        self.nodes = nodes
        self.partial = partial


class CapExceededError(OrderedRamseyError):
    """No complete graph up to the cap arrows the pair."""


class NotApplicableError(OrderedRamseyError):
    """A case hypothesis does not hold for the given inputs."""


class NotCoveredError(OrderedRamseyError):
    """No forest construction case applies to the pair."""


class HypothesisViolationError(OrderedRamseyError):
    """The host contains a family member, so no refuting coloring exists."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class VerificationError(OrderedRamseyError):
    """A construction or refutation failed its own machine check."""
