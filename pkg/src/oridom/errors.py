"""Exceptions shared across the package."""


class OridomError(Exception):
    """Base class for all package errors."""


class ParseError(OridomError, ValueError):
    """Raised when an input file or string cannot be parsed."""


class InfeasibleError(OridomError, ValueError):
    """Raised when a covering problem provably has no solution."""


class BudgetExceededError(OridomError, RuntimeError):
    """Raised when a solver exhausts its node-expansion budget."""


class InternalInvariantViolation(OridomError, RuntimeError):
    """Raised when a certified relation fails; indicates a solver bug."""
