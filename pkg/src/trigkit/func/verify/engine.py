import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from trigkit.config import DEFAULT_POLE_GUARD, INTEGER_SAMPLE_BOUND, INTEGRALITY_TOLERANCE
from trigkit.func.errors import MagnitudeOverflowError, PoleError, UnsupportedTheoremError
from trigkit.func.exact.core import (ONE_PLUS_I, alt_binom_even, alt_binom_odd, gauss_pow, gauss_product)
from trigkit.func.exact.objects import GaussianInt
from trigkit.func.series import closed_form, oracle
from trigkit.func.series.poles import (PoleSite, halving_tan_site, halving_zero_site, nearest_pole, tan_site,
                                       turn_site, zero_site)
from trigkit.func.verify.objects import (CheckResult, Domain, Failure, IdentityReport, Sample, SamplePlan,
                                         TheoremId)

logger = logging.getLogger(__name__)

PoleSetFunction = Callable[[int, float], List[PoleSite]]


def relative_error(lhs, rhs) -> float:
    """|lhs - rhs| / max(|lhs|, |rhs|, 1); the floor keeps zero crossings comparable."""
    scale = max(abs(lhs), abs(rhs), 1)
    return float(abs(lhs - rhs) / scale)


def _turn_poles(n: int, x: float) -> List[PoleSite]:
    return [turn_site('1 - cos(x)', x)]


def _tan_half_poles(n: int, x: float) -> List[PoleSite]:
    sites = [zero_site('cot(x)', x), halving_zero_site(f'cot(x/2^{n})', x, n)]
    sites.extend(halving_tan_site(f'tan(x/2^{k})', x, k) for k in range(1, n + 1))
    return sites


def _tan_product_poles(n: int, x: float) -> List[PoleSite]:
    sites = [zero_site('1/tan(x)', x)]
    sites.extend(tan_site(f'tan({k}x)', k * x) for k in range(1, n + 2))
    return sites


def _exact_result(lhs, rhs) -> CheckResult:
    if lhs == rhs:
        return CheckResult(lhs, rhs, 0.0, True)
    if isinstance(lhs, tuple):
        rel_err = max(relative_error(a, b) for a, b in zip(lhs, rhs))
    else:
        rel_err = relative_error(lhs, rhs)
    # an exact mismatch is a defect, never within tolerance
    return CheckResult(lhs, rhs, rel_err, False)


def _check_t2_1(part: int):
    def check(sample: Sample, tolerance: float, pole_guard: float) -> CheckResult:
        x, y = sample.point
        series = oracle.binom_series_pair(x, y, sample.n)
        power = gauss_pow(GaussianInt(x, y), sample.n)
        return _exact_result(series[part], tuple(power)[part])
    return check


def _check_t2_1_pyth(sample: Sample, tolerance: float, pole_guard: float) -> CheckResult:
    x, y = sample.point
    cos_sum, sin_sum = oracle.binom_series_pair(x, y, sample.n)
    return _exact_result(cos_sum * cos_sum + sin_sum * sin_sum, (x * x + y * y) ** sample.n)


def _check_c2_1(part: int):
    def check(sample: Sample, tolerance: float, pole_guard: float) -> CheckResult:
        alternating = alt_binom_even(sample.n) if part == 0 else alt_binom_odd(sample.n)
        return _exact_result(alternating, tuple(gauss_pow(ONE_PLUS_I, sample.n))[part])
    return check


def _unit_direction(z: GaussianInt) -> Tuple[float, float]:
    """z / |z| in floats, shifting both parts down first when |z| is past the double range."""
    norm = z.norm()
    shift = max(0, norm.bit_length() - 1000)
    shift += shift & 1
    radius = math.sqrt(norm >> shift)
    return (z.re >> shift // 2) / radius, (z.im >> shift // 2) / radius


def _check_t2_2(sample: Sample, tolerance: float, pole_guard: float) -> CheckResult:
    """
    Integrality of the modulus-argument form, compared on unit directions so products past the double range
    still verify. rhs is None when prod |z_k| itself does not fit in a double.
    """
    factors = sample.point
    product = gauss_product(factors)
    exact = tuple(product)
    direction = closed_form.gauss_product_direction(factors)
    deviation = max(abs(a - e) for a, e in zip(direction, _unit_direction(product)))
    try:
        approx = tuple(closed_form.gauss_product_closed(factors))
    except MagnitudeOverflowError:
        approx = None
    # integrality is judged against the modulus-scaled bound, independent of the plan tolerance
    if deviation <= INTEGRALITY_TOLERANCE:
        return CheckResult(exact, approx, 0.0, True)
    return CheckResult(exact, approx, deviation, False)


def _angular_check(lhs_function, rhs_function, guarded_lhs: bool = True):
    def check(sample: Sample, tolerance: float, pole_guard: float) -> CheckResult:
        if guarded_lhs:
            lhs = lhs_function(sample.n, sample.point, pole_guard=pole_guard)
        else:
            lhs = lhs_function(sample.n, sample.point)
        rhs = rhs_function(sample.n, sample.point, pole_guard=pole_guard)
        rel_err = relative_error(lhs, rhs)
        return CheckResult(lhs, rhs, rel_err, rel_err <= tolerance)
    return check


@dataclass(frozen=True)
class IdentityEntry:
    """
    One verifiable identity: how to sample it, how to compare its sides, and where it is singular.

    Attributes:
        domain (Domain): Shape of a sample.
        check (Callable): (sample, tolerance, pole_guard) -> CheckResult.
        pole_set (Optional[PoleSetFunction]): (n, x) -> pole sites; None for exact identities.
        exact (bool): Whether the comparison is exact.
    """
    domain: Domain
    check: Callable[[Sample, float, float], CheckResult]
    pole_set: Optional[PoleSetFunction] = None
    exact: bool = False


IDENTITIES: Dict[TheoremId, IdentityEntry] = {
    TheoremId.T2_1_COS: IdentityEntry(Domain.INTEGER_PAIR, _check_t2_1(0), exact=True),
    TheoremId.T2_1_SIN: IdentityEntry(Domain.INTEGER_PAIR, _check_t2_1(1), exact=True),
    TheoremId.T2_1_PYTH: IdentityEntry(Domain.INTEGER_PAIR, _check_t2_1_pyth, exact=True),
    TheoremId.C2_1_COS: IdentityEntry(Domain.INDEX, _check_c2_1(0), exact=True),
    TheoremId.C2_1_SIN: IdentityEntry(Domain.INDEX, _check_c2_1(1), exact=True),
    TheoremId.T2_2: IdentityEntry(Domain.FACTORS, _check_t2_2, exact=True),
    TheoremId.L2_1: IdentityEntry(Domain.ANGLE, _angular_check(oracle.cos_partial_sum, closed_form.cos_partial_rhs,
                                                               guarded_lhs=False), _turn_poles),
    TheoremId.T2_3: IdentityEntry(Domain.ANGLE, _angular_check(oracle.sin_cos_square_sum, closed_form.dirichlet_rhs,
                                                               guarded_lhs=False), _turn_poles),
    TheoremId.T2_4: IdentityEntry(Domain.ANGLE, _angular_check(oracle.tan_half_sum, closed_form.tan_half_rhs),
                                  _tan_half_poles),
    TheoremId.T2_5: IdentityEntry(Domain.ANGLE, _angular_check(oracle.tan_pair_sum, closed_form.tan_pair_rhs),
                                  _tan_product_poles),
    TheoremId.T2_6: IdentityEntry(Domain.ANGLE, _angular_check(oracle.tan_triple_sum, closed_form.tan_triple_rhs),
                                  _tan_product_poles),
}


def pole_distance(theorem: TheoremId, n: int, x: float) -> float:
    """
    Distance in radians from the identity's arguments at (n, x) to their nearest singularity. Multiples kx are
    measured on kx; the halving angles x/2**k of t2_4 are measured on x.

    Args:
        theorem (TheoremId): An identity with an angular domain.
        n (int): The series length.
        x (float): The angle.

    Returns:
        float: The minimum distance over the identity's pole set.

    Raises:
        UnsupportedTheoremError: For the exact identities, which have no poles.
    """
    entry = IDENTITIES[TheoremId(theorem)]
    if entry.pole_set is None:
        raise UnsupportedTheoremError(f"{TheoremId(theorem).value} has no angular domain")
    _, distance = nearest_pole(entry.pole_set(n, x))
    return distance


def _generator(plan: SamplePlan, n: int) -> np.random.Generator:
    # one independent stream per (theorem, n) so draws do not depend on sweep order
    theorem_index = list(TheoremId).index(plan.theorem)
    sequence = np.random.SeedSequence(plan.seed, spawn_key=(theorem_index, n))
    return np.random.Generator(np.random.PCG64(sequence))


def _nonzero_pair(rng: np.random.Generator) -> Tuple[int, int]:
    bound = INTEGER_SAMPLE_BOUND
    while True:
        x, y = (int(v) for v in rng.integers(-bound, bound + 1, size=2))
        if (x, y) != (0, 0):
            return x, y


def _factor_list(rng: np.random.Generator, n: int) -> Tuple[Tuple[int, int], ...]:
    bound = INTEGER_SAMPLE_BOUND
    if n == 0:
        return ()
    # x_k in [-9, 9] \ {0}, y_k in [-9, 9]
    magnitudes = rng.integers(1, bound + 1, size=n)
    signs = rng.choice(np.array([-1, 1]), size=n)
    ys = rng.integers(-bound, bound + 1, size=n)
    return tuple((int(s * m), int(y)) for s, m, y in zip(signs, magnitudes, ys))


def draw_samples_for_n(plan: SamplePlan, n: int) -> List[Sample]:
    """The draws for one n, reproducible from (seed, theorem, n) alone."""
    entry = IDENTITIES[plan.theorem]
    rng = _generator(plan, n)

    if entry.domain is Domain.INDEX:
        return [Sample(n, 0)]
    if entry.domain is Domain.INTEGER_PAIR:
        return [Sample(n, i, _nonzero_pair(rng)) for i in range(plan.samples_per_n)]
    if entry.domain is Domain.FACTORS:
        return [Sample(n, i, _factor_list(rng, n)) for i in range(plan.samples_per_n)]

    lo, hi = plan.angle_interval
    samples = []
    for i, x in enumerate(rng.uniform(lo, hi, size=plan.samples_per_n)):
        x = float(x)
        distance = pole_distance(plan.theorem, n, x)
        samples.append(Sample(n, i, x, distance, skipped=distance < plan.pole_guard))
    return samples


def draw_samples(plan: SamplePlan) -> List[Sample]:
    """
    Draws every sample of a plan, ordered by (n, index).

    Angles come from a PCG64 stream per (seed, theorem, n); samples within pole_guard of a singularity are
    kept in the list but marked skipped.
    """
    samples = []
    for n in plan.n_values():
        samples.extend(draw_samples_for_n(plan, n))
    return samples


def check_identity(theorem: TheoremId, sample: Sample, tolerance: float,
                   pole_guard: float = DEFAULT_POLE_GUARD) -> CheckResult:
    """
    Compares the oracle with the closed form at one sample.

    Exact identities compare exactly and report rel_err 0 on success. Angular identities pass when
    |lhs - rhs| / max(|lhs|, |rhs|, 1) <= tolerance.

    Raises:
        PoleError: If the sample is singular; sweeps count this as a skip, never as a failure.
    """
    entry = IDENTITIES[TheoremId(theorem)]
    return entry.check(sample, tolerance, pole_guard)


def _run_n(plan: SamplePlan, n: int) -> List[Tuple[Sample, Optional[CheckResult]]]:
    outcomes = []
    for sample in draw_samples_for_n(plan, n):
        if sample.skipped:
            outcomes.append((sample, None))
            continue
        try:
            result = check_identity(plan.theorem, sample, plan.tolerance, plan.pole_guard)
        except PoleError as e:
            logger.debug(f"{plan.theorem.value}: n={n} sample {sample.index} hit a pole late: {e}")
            outcomes.append((sample, None))
            continue
        outcomes.append((sample, result))
    logger.debug(f"{plan.theorem.value}: n={n} done, {len(outcomes)} samples")
    return outcomes


def sweep(plan: SamplePlan, workers: int = 1) -> IdentityReport:
    """
    Runs check_identity over every non-skipped sample of a plan and aggregates the residuals.

    Args:
        plan (SamplePlan): The sweep to run.
        workers (int): Threads to spread the n values over. The report does not depend on it.

    Returns:
        IdentityReport: The aggregated report.
    """
    n_values = list(plan.n_values())
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_n = list(pool.map(lambda n: _run_n(plan, n), n_values))
    else:
        per_n = [_run_n(plan, n) for n in n_values]

    outcomes = [outcome for chunk in per_n for outcome in chunk]
    # reduce in (n, index) order whatever order the workers finished in
    outcomes.sort(key=lambda outcome: (outcome[0].n, outcome[0].index))

    report = IdentityReport(plan=plan)
    for sample, result in outcomes:
        if result is None:
            report.skipped_near_pole += 1
            continue
        report.evaluated += 1
        if report.worst_case is None or result.rel_err > report.max_rel_err:
            report.max_rel_err = result.rel_err
            report.worst_case = sample
        if not result.passed:
            report.failures.append(Failure(sample, result.lhs, result.rhs, result.rel_err))

    if report.evaluated == 0:
        report.vacuous = True
        logger.warning(f"{plan.theorem.value}: sweep evaluated no samples; "
                       f"{report.skipped_near_pole} fell inside the pole guard {plan.pole_guard}")
    return report
