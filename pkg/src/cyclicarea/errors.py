"""Exception types raised by the library.

The CLI maps these to exit codes: ``ConvergenceError`` -> 2, every other
``CyclicAreaError`` -> 1.
"""


class CyclicAreaError(ValueError):
    """Base class for all library errors."""


class InvalidInputError(CyclicAreaError):
    """Malformed or out-of-domain arguments."""


class DegeneracyError(CyclicAreaError):
    """A polygon gap or triangle is too close to degenerate."""


class InvalidSpecError(CyclicAreaError):
    """A polygon description does not match its declared kind."""


class InfeasibleSidesError(CyclicAreaError):
    """Side lengths violate the polygon inequality."""


class DomainError(CyclicAreaError):
    """A closed-form area formula was called outside its domain."""


class InconsistentBoundaryError(CyclicAreaError):
    """Edge-partition data does not come from a consistent fan."""


class NumericError(CyclicAreaError, ArithmeticError):
    """Floating-point conditioning collapsed (e.g. negative radicand)."""


class ConvergenceError(NumericError):
    """The circumradius solver hit its iteration cap."""
