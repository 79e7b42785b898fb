import math
from typing import Iterable, Optional, Tuple

from trigkit.func.errors import PoleError

HALF_PI = math.pi / 2
TWO_PI = 2 * math.pi

# (label, argument, offset, period): the argument is singular at offset + m * period
PoleSite = Tuple[str, float, float, float]


def lattice_distance(argument: float, offset: float, period: float) -> float:
    """
    Distance in radians from argument to the nearest point of offset + period * Z.

    An infinite period leaves offset as the only reachable singularity; an infinite offset is never reached.
    """
    if math.isinf(period):
        return abs(argument - offset)
    return abs(math.remainder(argument - offset, period))


def _scaled(value: float, k: int) -> float:
    """value * 2**k, saturating to inf past the double range."""
    try:
        return math.ldexp(value, k)
    except OverflowError:
        return math.copysign(math.inf, value)


def tan_site(label: str, argument: float) -> PoleSite:
    """A tan(argument) pole, at pi/2 + m*pi."""
    return label, argument, HALF_PI, math.pi


def zero_site(label: str, argument: float) -> PoleSite:
    """A cot(argument) pole or a division by tan(argument), at m*pi."""
    return label, argument, 0.0, math.pi


def turn_site(label: str, argument: float) -> PoleSite:
    """A 1 - cos(argument) denominator, vanishing at 2*m*pi."""
    return label, argument, 0.0, TWO_PI


def halving_tan_site(label: str, x: float, k: int) -> PoleSite:
    """
    A (1/2**k) tan(x/2**k) pole, at x = 2**k * (pi/2 + m*pi). Measured on x: next to the pole the weighted
    term behaves like 1/(x - pole). Once 2**k * pi leaves the double range only the m = 0 pole is kept.
    """
    return label, x, _scaled(HALF_PI, k), _scaled(math.pi, k)


def halving_zero_site(label: str, x: float, k: int) -> PoleSite:
    """A (1/2**k) cot(x/2**k) pole, measured on x, at 2**k * m*pi; past the double range only x = 0 is left."""
    return label, x, 0.0, _scaled(math.pi, k)


def nearest_pole(sites: Iterable[PoleSite]) -> Tuple[Optional[PoleSite], float]:
    """Returns the closest site and its distance; (None, inf) for an empty site list."""
    closest, best = None, math.inf
    for site in sites:
        _, argument, offset, period = site
        distance = lattice_distance(argument, offset, period)
        if distance < best:
            closest, best = site, distance
    return closest, best


def guard_poles(sites: Iterable[PoleSite], pole_guard: float) -> None:
    """
    Raises PoleError for the first site closer than pole_guard to its singularity.

    An exact hit (distance 0) is always an error, so pole_guard=0 still refuses to divide by zero.
    """
    if pole_guard < 0:
        raise ValueError(f"pole_guard must be >= 0, got {pole_guard}")
    for label, argument, offset, period in sites:
        distance = lattice_distance(argument, offset, period)
        if distance < pole_guard or distance == 0.0:
            raise PoleError(label, argument, distance, guard=pole_guard)
