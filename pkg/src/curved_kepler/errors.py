"""Exception and warning types raised by the toolkit."""


class CurvedKeplerError(Exception):
    """Base class for all errors raised by this package."""


class NonPositiveParameter(CurvedKeplerError, ValueError):
    """One or more physical parameters are not strictly positive (or not finite)."""

    def __init__(self, fields):
        self.fields = list(fields)
        super().__init__("non-positive parameter(s): " + ", ".join(self.fields))


class DomainError(CurvedKeplerError, ValueError):
    """An angle lies outside the open domain of the manifold."""


class PochhammerPole(CurvedKeplerError, ZeroDivisionError):
    """A denominator Pochhammer symbol vanishes inside the terminating sum."""

    def __init__(self, c, j):
        self.c = c
        self.j = j
        super().__init__(f"(c)_j vanishes for c={c!r} at term index j={j}")


class GridTooSmall(CurvedKeplerError, ValueError):
    pass


class BadGridSpec(CurvedKeplerError, ValueError):
    pass


class CountOutOfRange(CurvedKeplerError, ValueError):
    pass


class LengthMismatch(CurvedKeplerError, ValueError):
    pass


class NoConvergence(CurvedKeplerError, ArithmeticError):
    def __init__(self, iterations):
        self.iterations = iterations
        super().__init__(f"inverse iteration did not converge after {iterations} iterations")


class ClusterWarning(UserWarning):
    """Two returned eigenvalues are closer than the bisection tolerance."""
