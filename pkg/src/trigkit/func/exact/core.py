from typing import List

from trigkit.func.errors import DomainError, IndeterminateError
from trigkit.func.exact.objects import ExtendedRational, FactorList, GaussianInt
from trigkit.func.types import enforce_types_functional

ONE_PLUS_I = GaussianInt(1, 1)


def _require_nonnegative(name: str, value: int) -> None:
    if value < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {value}")


@enforce_types_functional
def binomial(n: int, k: int) -> int:
    """
    Exact binomial coefficient C(n, k) by the multiplicative formula.

    Args:
        n (int): The row, n >= 0.
        k (int): The column, k >= 0. Columns past the end of the row give 0.

    Returns:
        int: C(n, k).
    """
    _require_nonnegative('n', n)
    _require_nonnegative('k', k)
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(k):
        # exact at every step: result is C(n, i) times (n - i), divisible by i + 1
        result = result * (n - i) // (i + 1)
    return result


@enforce_types_functional
def binomial_row(n: int) -> List[int]:
    """Row n of Pascal's triangle, built by the additive recurrence."""
    _require_nonnegative('n', n)
    row = [1]
    for _ in range(n):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    return row


@enforce_types_functional
def gauss_mul(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    return a * b


@enforce_types_functional
def gauss_pow(z: GaussianInt, n: int) -> GaussianInt:
    """
    Raises a Gaussian integer to a non-negative power by binary exponentiation.

    Args:
        z (GaussianInt): The base.
        n (int): The exponent, n >= 0. z**0 is 1 for every z.

    Returns:
        GaussianInt: z**n, exactly.
    """
    _require_nonnegative('n', n)
    result = GaussianInt.one()
    base = z
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


@enforce_types_functional
def gauss_product(factors: FactorList) -> GaussianInt:
    """
    Left-to-right exact product of (x_k + i y_k) over a factor list. The empty list gives 1.

    Args:
        factors (FactorList): The (x_k, y_k) integer pairs.

    Returns:
        GaussianInt: The product.
    """
    result = GaussianInt.one()
    for x, y in factors:
        result = result * GaussianInt(x, y)
    return result


@enforce_types_functional
def alt_binom_even(n: int) -> int:
    """Sum over 2k <= n of (-1)**k C(n, 2k); the real part of (1 + i)**n."""
    _require_nonnegative('n', n)
    return sum((-1) ** k * binomial(n, 2 * k) for k in range(n // 2 + 1))


@enforce_types_functional
def alt_binom_odd(n: int) -> int:
    """Sum over 2k < n of (-1)**k C(n, 2k + 1); the imaginary part of (1 + i)**n."""
    _require_nonnegative('n', n)
    return sum((-1) ** k * binomial(n, 2 * k + 1) for k in range((n + 1) // 2))


@enforce_types_functional
def tan_quarter(n: int) -> ExtendedRational:
    """
    tan(n*pi/4) as the exact ratio of the odd to the even alternating binomial sum.

    Args:
        n (int): n >= 0.

    Returns:
        ExtendedRational: The reduced ratio, or the point at infinity when n = 2 (mod 4).

    Raises:
        IndeterminateError: If both sums vanish, which their squares summing to 2**n rules out.
    """
    odd = alt_binom_odd(n)
    even = alt_binom_even(n)
    if even == 0 and odd == 0:
        raise IndeterminateError(f"Both alternating binomial sums vanished at n={n}")
    return ExtendedRational(odd, even)
