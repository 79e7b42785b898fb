"""
Brute-force left-hand sides: every sum is evaluated term by term, left to right, with no compensation.
"""
import math
from typing import List, Tuple

from trigkit.config import DEFAULT_POLE_GUARD
from trigkit.func.errors import DomainError
from trigkit.func.exact.core import binomial
from trigkit.func.series.objects import Angle
from trigkit.func.series.poles import guard_poles, halving_tan_site, tan_site
from trigkit.func.types import enforce_types_functional


def _require_nonnegative(n: int) -> None:
    if n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n}")


def _guarded_tangents(ks: range, x: Angle, pole_guard: float) -> List[float]:
    """tan(kx) for each k, after checking every kx against the pole guard."""
    guard_poles([tan_site(f'tan({k}x)', k * x) for k in ks], pole_guard)
    return [math.tan(k * x) for k in ks]


@enforce_types_functional
def binom_series_pair(x: int, y: int, n: int) -> Tuple[int, int]:
    """
    Exact term-by-term binomial expansion of (x + iy)**n, split into its real and imaginary sums.

    Args:
        x (int): Real part of the base.
        y (int): Imaginary part of the base.
        n (int): The power, n >= 0.

    Returns:
        Tuple[int, int]: (sum over 2k <= n of (-1)**k C(n, 2k) x**(n-2k) y**(2k),
                          sum over 2k < n of (-1)**k C(n, 2k+1) x**(n-2k-1) y**(2k+1)).
    """
    _require_nonnegative(n)
    cos_sum = 0
    for k in range(n // 2 + 1):
        cos_sum += (-1) ** k * binomial(n, 2 * k) * x ** (n - 2 * k) * y ** (2 * k)
    sin_sum = 0
    for k in range((n + 1) // 2):
        sin_sum += (-1) ** k * binomial(n, 2 * k + 1) * x ** (n - 2 * k - 1) * y ** (2 * k + 1)
    return cos_sum, sin_sum


def sin_cos_square_sum(n: int, x: Angle) -> float:
    """(sum sin(kx))**2 + (sum cos(kx))**2 for k = 1..n. Defined for every x."""
    _require_nonnegative(n)
    sin_sum = 0.0
    cos_sum = 0.0
    for k in range(1, n + 1):
        sin_sum += math.sin(k * x)
        cos_sum += math.cos(k * x)
    return sin_sum * sin_sum + cos_sum * cos_sum


def cos_partial_sum(m: int, x: Angle) -> float:
    """1 + 2 * sum cos(kx) for k = 1..m."""
    _require_nonnegative(m)
    total = 0.0
    for k in range(1, m + 1):
        total += math.cos(k * x)
    return 1 + 2 * total


def tan_half_terms(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> List[float]:
    """The terms (1/2**k) tan(x/2**k), k = 1..n."""
    _require_nonnegative(n)
    scaled = [math.ldexp(x, -k) for k in range(1, n + 1)]
    guard_poles([halving_tan_site(f'tan(x/2^{k})', x, k) for k in range(1, n + 1)], pole_guard)
    return [math.ldexp(math.tan(arg), -k) for k, arg in enumerate(scaled, start=1)]


def tan_half_sum(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """sum (1/2**k) tan(x/2**k) for k = 1..n."""
    total = 0.0
    for term in tan_half_terms(n, x, pole_guard):
        total += term
    return total


def tan_pair_sum(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """sum tan(kx) tan((k+1)x) for k = 1..n."""
    _require_nonnegative(n)
    tangents = _guarded_tangents(range(1, n + 2), x, pole_guard)
    total = 0.0
    for k in range(n):
        total += tangents[k] * tangents[k + 1]
    return total


def tan_triple_sum(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """sum tan(kx) [tan((k-1)x) + tan((k+1)x)] for k = 1..n; the k = 1 term's tan(0) is exactly 0."""
    _require_nonnegative(n)
    # index j holds tan(jx), j = 0..n+1
    tangents = _guarded_tangents(range(0, n + 2), x, pole_guard)
    total = 0.0
    for k in range(1, n + 1):
        total += tangents[k] * (tangents[k - 1] + tangents[k + 1])
    return total


def tan_partial_sum(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """T_n(x) = sum tan(kx) for k = 1..n."""
    _require_nonnegative(n)
    total = 0.0
    for tangent in _guarded_tangents(range(1, n + 1), x, pole_guard):
        total += tangent
    return total


def tan_pair_telescoped_sum(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """sum tan(kx) tan(x) tan((k+1)x) for k = 1..n."""
    _require_nonnegative(n)
    tangents = _guarded_tangents(range(1, n + 2), x, pole_guard)
    tan_x = tangents[0]
    total = 0.0
    for k in range(n):
        total += tangents[k] * tan_x * tangents[k + 1]
    return total


def tan_partial_derivative(n: int, x: Angle, pole_guard: float = DEFAULT_POLE_GUARD) -> float:
    """T_n'(x) = sum k sec(kx)**2 for k = 1..n."""
    _require_nonnegative(n)
    guard_poles([tan_site(f'tan({k}x)', k * x) for k in range(1, n + 1)], pole_guard)
    total = 0.0
    for k in range(1, n + 1):
        total += k / math.cos(k * x) ** 2
    return total
