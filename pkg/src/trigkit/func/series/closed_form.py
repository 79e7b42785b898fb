"""
Closed-form (right-hand) sides of the finite trigonometric series identities.

Every evaluator is a pure function. Singular arguments are refused with PoleError rather than continued
analytically. The distance is measured in radians on the argument of the offending tan/cot term, except for the
weighted (1/2**k) tan(x/2**k) and (1/2**n) cot(x/2**n) terms, which are measured on x.
"""
import math

from trigkit.config import DEFAULT_POLE_GUARD
from trigkit.func.errors import DomainError, MagnitudeOverflowError
from trigkit.func.exact.objects import FactorList
from trigkit.func.series.objects import Angle, CosSinPair
from trigkit.func.series.poles import guard_poles, halving_zero_site, tan_site, turn_site, zero_site

# Largest log-magnitude a double can hold
MAX_LOG_MAGNITUDE = math.log(2.0) * 1024
# Below this, cot(s) = 1/s - s/3 to double precision
SMALL_HALVING_ANGLE = 1e-8


def _require_nonnegative(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n}")


def _checked_magnitude(log_magnitude: float) -> float:
    if log_magnitude >= MAX_LOG_MAGNITUDE:
        raise MagnitudeOverflowError(
            f"Magnitude exp({log_magnitude:.6g}) exceeds the double range (limit exp({MAX_LOG_MAGNITUDE:.6g}))")
    return math.exp(log_magnitude)


def _modulus_power(x: float, y: float, exponent: float) -> float:
    """hypot(x, y)**exponent, refusing to overflow."""
    if x == 0 and y == 0:
        raise DomainError("(x, y) = (0, 0) has no argument")
    if exponent == 0:
        return 1.0
    radius = math.hypot(x, y)
    _checked_magnitude(exponent * math.log(radius))
    return math.pow(radius, exponent)


def demoivre_closed(x: float, y: float, n: int) -> CosSinPair:
    """
    (x**2 + y**2)**(n/2) times (cos(n*theta), sin(n*theta)), theta the principal argument of x + iy.

    atan2 is used instead of arctan(y/x): the single-argument form is only right for x > 0.

    Raises:
        DomainError: For (x, y) = (0, 0) or negative n.
        MagnitudeOverflowError: If the magnitude does not fit in a double.
    """
    _require_nonnegative(n)
    magnitude = _modulus_power(x, y, n)
    theta = math.atan2(y, x)
    return CosSinPair(magnitude * math.cos(n * theta), magnitude * math.sin(n * theta))


def sum_squares_closed(x: float, y: float, n: int) -> float:
    """(x**2 + y**2)**n, the sum of the squared De Moivre parts."""
    _require_nonnegative(n)
    return _modulus_power(x, y, 2 * n)


def corollary_closed(n: int) -> CosSinPair:
    """2**(n/2) * (cos(n*pi/4), sin(n*pi/4)): the float side of the alternating binomial sums."""
    _require_nonnegative(n)
    magnitude = _checked_magnitude(0.5 * n * math.log(2.0))
    # reduce n mod 8 first so the angle stays small and exact multiples of pi/4 stay clean
    angle = (n % 8) * math.pi / 4
    return CosSinPair(magnitude * math.cos(angle), magnitude * math.sin(angle))


def factor_modulus(factors: FactorList) -> float:
    """Product of the factor moduli, accumulated in log space."""
    log_modulus = 0.0
    for x, y in factors:
        if x == 0 and y == 0:
            raise DomainError("A (0, 0) factor has no argument")
        log_modulus += math.log(math.hypot(x, y))
    return _checked_magnitude(log_modulus)


def gauss_product_direction(factors: FactorList, principal_argument: bool = False) -> CosSinPair:
    """(cos(sum theta_k), sin(sum theta_k)): the product's unit direction, defined for any number of factors."""
    angle = 0.0
    for x, y in factors:
        if principal_argument:
            if x == 0 and y == 0:
                raise DomainError("A (0, 0) factor has no argument")
            angle += math.atan2(y, x)
        else:
            if x == 0:
                raise DomainError(f"arctan(y/x) is undefined for the factor ({x}, {y}); "
                                  f"use principal_argument=True")
            angle += math.atan(y / x) + (math.pi if x < 0 else 0.0)
    return CosSinPair(math.cos(angle), math.sin(angle))


def gauss_product_closed(factors: FactorList, principal_argument: bool = False) -> CosSinPair:
    """
    Modulus-argument form of a Gaussian-integer product.

    Args:
        factors (FactorList): The (x_k, y_k) pairs.
        principal_argument (bool): Use atan2(y_k, x_k), which admits x_k = 0. By default each angle is
            arctan(y_k / x_k), shifted by a half turn when x_k < 0 so the quadrant is right.

    Returns:
        CosSinPair: (prod |z_k| * cos(sum theta_k), prod |z_k| * sin(sum theta_k)).

    Raises:
        DomainError: On a (0, 0) factor, or an x_k = 0 factor without principal_argument.
        MagnitudeOverflowError: If prod |z_k| does not fit in a double.
    """
    direction = gauss_product_direction(factors, principal_argument)
    modulus = factor_modulus(factors)
    return CosSinPair(modulus * direction.cos_part, modulus * direction.sin_part)


def dirichlet_rhs(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """
    (1 - cos(nx)) / (1 - cos(x)), evaluated as sin(nx/2)**2 / sin(x/2)**2.

    The rewrite keeps full precision near x = 0, where the plain form loses every digit to cancellation.
    """
    _require_nonnegative(n)
    guard_poles([turn_site('1 - cos(x)', x)], pole_guard)
    ratio = math.sin(n * x / 2) / math.sin(x / 2)
    return ratio * ratio


def cos_partial_rhs(m: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """
    (cos(mx) - cos((m+1)x)) / (1 - cos(x)).

    Both differences go through their product forms: the denominator is 2 sin(x/2)**2 and the numerator
    2 sin((2m+1)x/2) sin(x/2), which leaves sin((2m+1)x/2) / sin(x/2).
    """
    _require_nonnegative(m)
    guard_poles([turn_site('1 - cos(x)', x)], pole_guard)
    return math.sin((2 * m + 1) * x / 2) / math.sin(x / 2)


def _cot(argument: float) -> float:
    return math.cos(argument) / math.sin(argument)


def _weighted_cot(n: int, x: float) -> float:
    """
    (1/2**n) cot(x/2**n). Once x/2**n is below SMALL_HALVING_ANGLE the Laurent series 1/x - x/(3 * 4**n) is
    accurate to double precision, and it keeps working after x/2**n underflows to 0.
    """
    scaled = math.ldexp(x, -n)
    if abs(scaled) < SMALL_HALVING_ANGLE:
        return 1 / x - math.ldexp(x, -2 * n) / 3
    return math.ldexp(_cot(scaled), -n)


def tan_half_rhs(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """(1/2**n) cot(x/2**n) - cot(x)."""
    _require_nonnegative(n)
    guard_poles([zero_site('cot(x)', x), halving_zero_site(f'cot(x/2^{n})', x, n)], pole_guard)
    return _weighted_cot(n, x) - _cot(x)


def tan_pair_rhs(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """-(n+1) + tan((n+1)x) / tan(x)."""
    _require_nonnegative(n)
    guard_poles([tan_site('tan(x)', x),
                 zero_site('1/tan(x)', x),
                 tan_site(f'tan({n + 1}x)', (n + 1) * x)], pole_guard)
    return -(n + 1) + math.tan((n + 1) * x) / math.tan(x)


def tan_triple_rhs(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """(tan(nx) + tan((n+1)x)) / tan(x) - 1 - 2n."""
    _require_nonnegative(n)
    guard_poles([tan_site('tan(x)', x),
                 zero_site('1/tan(x)', x),
                 tan_site(f'tan({n}x)', n * x),
                 tan_site(f'tan({n + 1}x)', (n + 1) * x)], pole_guard)
    return (math.tan(n * x) + math.tan((n + 1) * x)) / math.tan(x) - 1 - 2 * n


def tan_pair_telescoped_rhs(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """tan((n+1)x) - (n+1) tan(x): the telescoped sum of tan(kx) tan(x) tan((k+1)x)."""
    _require_nonnegative(n)
    guard_poles([tan_site('tan(x)', x), tan_site(f'tan({n + 1}x)', (n + 1) * x)], pole_guard)
    return math.tan((n + 1) * x) - (n + 1) * math.tan(x)


def tan_partial_derivative_rhs(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """sum k tan(kx)**2 + n(n+1)/2, the sec**2 = 1 + tan**2 form of the derivative of sum tan(kx)."""
    _require_nonnegative(n)
    guard_poles([tan_site(f'tan({k}x)', k * x) for k in range(1, n + 1)], pole_guard)
    return sum(k * math.tan(k * x) ** 2 for k in range(1, n + 1)) + n * (n + 1) / 2
