from typing import Optional


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an evaluator."""


class PoleError(ValueError):
    """
    Raised when a tan/cot argument or a vanishing denominator is too close to a singularity.

    Attributes:
        label (str): Which term is singular, e.g. 'tan(3x)' or 'cot(x/4)'.
        argument (float): The argument the distance was measured on.
        distance (float): Distance in radians from the argument to the nearest singularity.
    """

    def __init__(self, label: str, argument: float, distance: float, guard: Optional[float] = None):
        self.label = label
        self.argument = argument
        self.distance = distance
        self.guard = guard
        message = f"{label} is singular at argument {argument!r} (distance {distance:.3g} rad"
        if guard is not None:
            message += f", guard {guard:.3g}"
        super().__init__(message + ")")


class MagnitudeOverflowError(OverflowError):
    """Raised when a log-space magnitude exceeds the double exponent range."""


class IndeterminateError(ArithmeticError):
    """Raised for a 0/0 ratio that the arithmetic guarantees cannot occur."""


class UnsupportedTheoremError(ValueError):
    """Raised when an angular operation is asked about an exact-only identity."""
