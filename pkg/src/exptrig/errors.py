"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside an operation's mathematical domain (arg of 0, Y = 0, ...)."""


class ConvergenceError(RuntimeError):
    """A series or quadrature refinement hit its cap before reaching tolerance."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input."""
