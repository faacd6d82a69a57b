"""Exception types raised by the public API."""


class DomainError(ValueError):
    """An argument lies outside the function's mathematical domain."""


class ConvergenceError(ArithmeticError):
    """An iterative method stopped before meeting its tolerance."""


class BracketError(ConvergenceError):
    """The end points of a root bracket do not straddle zero."""


class ShapeError(ValueError):
    """A density scan is inconsistent with a unimodal shape (grid too coarse)."""
