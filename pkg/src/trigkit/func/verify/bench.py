import logging
import time
import timeit
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Tuple

import numpy as np

from trigkit.config import DEFAULT_POLE_GUARD, DEFAULT_TOLERANCE, MIN_BENCH_REPS, TIMER_TICK_FLOOR
from trigkit.func.errors import PoleError
from trigkit.func.exact.core import ONE_PLUS_I, alt_binom_even, alt_binom_odd, gauss_pow, gauss_product
from trigkit.func.exact.objects import GaussianInt
from trigkit.func.series import closed_form, oracle
from trigkit.func.verify.engine import IDENTITIES, check_identity, pole_distance
from trigkit.func.verify.objects import Domain, Sample, SamplePoint, TheoremId

logger = logging.getLogger(__name__)


@dataclass
class BenchRecord:
    """
    Naive summation against closed form for one (theorem, n) input.

    Attributes:
        theorem (TheoremId): The identity timed.
        n (int): Series length, power, or factor count.
        point (SamplePoint): The input beyond n.
        reps (int): Timed repetitions of each side.
        naive_time (float): Median seconds of the oracle.
        closed_time (float): Median seconds of the closed form.
        speedup (float): naive_time / closed_time.
        residual (float): Relative error between the two values; 0 for exact identities that agree.
        passed (bool): Whether the residual meets the verification tolerance.
        naive_timings (List[float]): Every raw oracle timing.
        closed_timings (List[float]): Every raw closed-form timing.
        below_timer_resolution (bool): Whether a median is shorter than TIMER_TICK_FLOOR clock ticks.
    """
    theorem: TheoremId
    n: int
    point: SamplePoint
    reps: int
    naive_time: float
    closed_time: float
    speedup: float
    residual: float
    passed: bool
    naive_timings: List[float] = field(default_factory=list)
    closed_timings: List[float] = field(default_factory=list)
    below_timer_resolution: bool = False

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self, include_timings: bool = True) -> Dict[str, Any]:
        data = {
            "theorem": self.theorem.value,
            "n": self.n,
            "input": Sample(self.n, 0, self.point).to_json(),
            "reps": self.reps,
            "naive_time": self.naive_time,
            "closed_time": self.closed_time,
            "speedup": self.speedup,
            "residual": self.residual,
            "pass": self.passed,
            "below_timer_resolution": self.below_timer_resolution,
        }
        if include_timings:
            data["naive_timings"] = list(self.naive_timings)
            data["closed_timings"] = list(self.closed_timings)
        return data


def _timed_pair(theorem: TheoremId, n: int, point: SamplePoint,
                pole_guard: float) -> Tuple[Callable[[], Any], Callable[[], Any]]:
    """The (naive, closed) zero-argument callables timed for an identity."""
    if theorem in (TheoremId.T2_1_COS, TheoremId.T2_1_SIN, TheoremId.T2_1_PYTH):
        x, y = point
        base = GaussianInt(x, y)
        return (lambda: oracle.binom_series_pair(x, y, n)), (lambda: gauss_pow(base, n))
    if theorem is TheoremId.C2_1_COS:
        return (lambda: alt_binom_even(n)), (lambda: gauss_pow(ONE_PLUS_I, n))
    if theorem is TheoremId.C2_1_SIN:
        return (lambda: alt_binom_odd(n)), (lambda: gauss_pow(ONE_PLUS_I, n))
    if theorem is TheoremId.T2_2:
        return (lambda: gauss_product(point)), (lambda: closed_form.gauss_product_closed(point))

    naive, closed = {
        TheoremId.L2_1: (lambda: oracle.cos_partial_sum(n, point),
                         lambda: closed_form.cos_partial_rhs(n, point, pole_guard=pole_guard)),
        TheoremId.T2_3: (lambda: oracle.sin_cos_square_sum(n, point),
                         lambda: closed_form.dirichlet_rhs(n, point, pole_guard=pole_guard)),
        TheoremId.T2_4: (lambda: oracle.tan_half_sum(n, point, pole_guard=pole_guard),
                         lambda: closed_form.tan_half_rhs(n, point, pole_guard=pole_guard)),
        TheoremId.T2_5: (lambda: oracle.tan_pair_sum(n, point, pole_guard=pole_guard),
                         lambda: closed_form.tan_pair_rhs(n, point, pole_guard=pole_guard)),
        TheoremId.T2_6: (lambda: oracle.tan_triple_sum(n, point, pole_guard=pole_guard),
                         lambda: closed_form.tan_triple_rhs(n, point, pole_guard=pole_guard)),
    }[theorem]
    return naive, closed


def _median_of(func: Callable[[], Any], reps: int) -> Tuple[float, List[float]]:
    # number=1: each repetition is exactly one evaluation call
    timings = timeit.Timer(func, timer=time.perf_counter).repeat(repeat=reps, number=1)
    return float(np.median(timings)), timings


def time_pair(theorem: TheoremId, n: int, point: SamplePoint, reps: int = MIN_BENCH_REPS,
              tolerance: float = DEFAULT_TOLERANCE, pole_guard: float = DEFAULT_POLE_GUARD) -> BenchRecord:
    """
    Times the oracle and the closed form of an identity at one input, sequentially on this thread.

    Args:
        theorem (TheoremId): The identity.
        n (int): Series length, power, or factor count.
        point (SamplePoint): The angle, integer pair, or factor list (None for the corollary identities).
        reps (int): Repetitions of each side; at least MIN_BENCH_REPS.
        tolerance (float): Tolerance the residual is held to, as in a verification sweep.
        pole_guard (float): Pole guard for angular identities.

    Returns:
        BenchRecord: Medians, speedup, residual and raw timings.

    Raises:
        ValueError: If reps is below MIN_BENCH_REPS.
        PoleError: If an angular input lies within pole_guard of a singularity.
    """
    theorem = TheoremId(theorem)
    if reps < MIN_BENCH_REPS:
        raise ValueError(f"reps must be >= {MIN_BENCH_REPS}, got {reps}")

    entry = IDENTITIES[theorem]
    if entry.domain is Domain.ANGLE:
        distance = pole_distance(theorem, n, point)
        if distance < pole_guard:
            raise PoleError(f"{theorem.value} pole set", point, distance, guard=pole_guard)

    # residual first, outside the timed region
    result = check_identity(theorem, Sample(n, 0, point), tolerance, pole_guard)

    naive, closed = _timed_pair(theorem, n, point, pole_guard)
    naive_time, naive_timings = _median_of(naive, reps)
    closed_time, closed_timings = _median_of(closed, reps)

    resolution = time.get_clock_info('perf_counter').resolution
    below_resolution = min(naive_time, closed_time) < TIMER_TICK_FLOOR * resolution
    if below_resolution:
        logger.warning(f"{theorem.value} n={n}: a median is under {TIMER_TICK_FLOOR} timer ticks "
                       f"({resolution:.3g} s each); the speedup is unreliable")
    speedup = naive_time / closed_time if closed_time > 0 else float('inf')

    logger.info(f"{theorem.value} n={n}: naive {naive_time:.3g} s, closed {closed_time:.3g} s, "
                f"speedup {speedup:.3g}, residual {result.rel_err:.3g}")
    return BenchRecord(theorem=theorem, n=n, point=point, reps=reps, naive_time=naive_time,
                       closed_time=closed_time, speedup=speedup, residual=result.rel_err, passed=result.passed,
                       naive_timings=list(naive_timings), closed_timings=list(closed_timings),
                       below_timer_resolution=below_resolution)
