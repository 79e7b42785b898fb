import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

from trigkit import __version__
from trigkit.config import (DEFAULT_ANGLE_INTERVAL, DEFAULT_POLE_GUARD, DEFAULT_SAMPLES_PER_N, DEFAULT_SEED,
                            DEFAULT_TOLERANCE, PRNG_NAME)


class TheoremId(Enum):
    T2_1_COS = 't2_1_cos'
    T2_1_SIN = 't2_1_sin'
    T2_1_PYTH = 't2_1_pyth'
    C2_1_COS = 'c2_1_cos'
    C2_1_SIN = 'c2_1_sin'
    T2_2 = 't2_2'
    L2_1 = 'l2_1'
    T2_3 = 't2_3'
    T2_4 = 't2_4'
    T2_5 = 't2_5'
    T2_6 = 't2_6'

    def __str__(self) -> str:
        return self.value


class Domain(Enum):
    """What one sample of an identity looks like."""
    ANGLE = 'angle'  # a float x
    INTEGER_PAIR = 'integer_pair'  # an (x, y) integer base
    FACTORS = 'factors'  # n integer (x_k, y_k) pairs
    INDEX = 'index'  # nothing beyond n itself


# x | (x, y) | ((x_1, y_1), ...) | None
SamplePoint = Union[float, Tuple[int, int], Tuple[Tuple[int, int], ...], None]


@dataclass(frozen=True)
class SamplePlan:
    """
    Everything needed to reproduce a verification sweep.

    Attributes:
        theorem (TheoremId): The identity to sweep.
        n_range (Tuple[int, int]): Inclusive range of n.
        samples_per_n (int): Draws per n. Index-only identities draw exactly one point per n.
        seed (int): Seed for the PCG64 generator.
        pole_guard (float): Minimum distance in radians from any singularity.
        tolerance (float): Largest accepted relative residual.
        angle_interval (Tuple[float, float]): Half-open interval angles are drawn from.
    """
    theorem: TheoremId
    n_range: Tuple[int, int]
    samples_per_n: int = DEFAULT_SAMPLES_PER_N
    seed: int = DEFAULT_SEED
    pole_guard: float = DEFAULT_POLE_GUARD
    tolerance: float = DEFAULT_TOLERANCE
    angle_interval: Tuple[float, float] = DEFAULT_ANGLE_INTERVAL

    def __post_init__(self):
        if not isinstance(self.theorem, TheoremId):
            object.__setattr__(self, 'theorem', TheoremId(self.theorem))
        lo, hi = self.n_range
        if lo < 0 or lo > hi:
            raise ValueError(f"n_range must be a nonempty range of non-negative integers, got {self.n_range}")
        if self.samples_per_n < 1:
            raise ValueError(f"samples_per_n must be >= 1, got {self.samples_per_n}")
        if self.seed < 0:
            raise ValueError(f"seed must be unsigned, got {self.seed}")
        if not self.pole_guard > 0:
            raise ValueError(f"pole_guard must be > 0, got {self.pole_guard}")
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be > 0, got {self.tolerance}")
        a, b = self.angle_interval
        if not (math.isfinite(a) and math.isfinite(b) and a < b):
            raise ValueError(f"angle_interval must be a finite interval with lo < hi, got {self.angle_interval}")

    def n_values(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)


@dataclass(frozen=True)
class Sample:
    """
    One drawn input. Skipped samples were drawn but sit inside the pole guard.

    Attributes:
        n (int): The series length (or power, or factor count).
        index (int): Position among the draws for this n.
        point (SamplePoint): The drawn input beyond n.
        pole_distance (Optional[float]): Distance to the nearest singularity, None for exact identities.
        skipped (bool): Whether the sample is excluded from comparison.
    """
    n: int
    index: int
    point: SamplePoint = None
    pole_distance: Optional[float] = None
    skipped: bool = False

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"n": self.n}
        if isinstance(self.point, float):
            data["x"] = self.point
        elif isinstance(self.point, tuple) and self.point and isinstance(self.point[0], tuple):
            data["factors"] = [list(pair) for pair in self.point]
        elif isinstance(self.point, tuple) and len(self.point) == 2:
            data["x"], data["y"] = self.point
        elif self.point == ():
            data["factors"] = []
        return data


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of comparing one oracle value with its closed form.

    Pair-valued identities carry (re, im) tuples in lhs and rhs.
    """
    lhs: Any
    rhs: Any
    rel_err: float
    passed: bool

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class Failure:
    sample: Sample
    lhs: Any
    rhs: Any
    rel_err: float

    def to_json(self) -> Dict[str, Any]:
        return {"input": self.sample.to_json(), "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs),
                "rel_err": self.rel_err}


def _jsonable(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class IdentityReport:
    """
    Residual statistics of one sweep.

    Attributes:
        plan (SamplePlan): The plan that produced this report.
        evaluated (int): Samples compared.
        skipped_near_pole (int): Samples drawn inside the pole guard.
        max_rel_err (float): Largest relative residual over evaluated samples.
        worst_case (Optional[Sample]): Sample attaining max_rel_err.
        failures (List[Failure]): Samples over tolerance.
        vacuous (bool): True when nothing was evaluated; such a sweep passes but should not be trusted.
        prng (str): Generator the samples came from.
        version (str): trigkit version that produced the report.
    """
    plan: SamplePlan
    evaluated: int = 0
    skipped_near_pole: int = 0
    max_rel_err: float = 0.0
    worst_case: Optional[Sample] = None
    failures: List[Failure] = field(default_factory=list)
    vacuous: bool = False
    prng: str = PRNG_NAME
    version: str = __version__

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.passed

    def to_json(self) -> Dict[str, Any]:
        return {
            "theorem": self.plan.theorem.value,
            "n_range": list(self.plan.n_range),
            "samples": self.plan.samples_per_n,
            "seed": self.plan.seed,
            "tolerance": self.plan.tolerance,
            "pole_guard": self.plan.pole_guard,
            "evaluated": self.evaluated,
            "skipped_near_pole": self.skipped_near_pole,
            "max_rel_err": self.max_rel_err,
            "worst_case": self.worst_case.to_json() if self.worst_case is not None else None,
            "failures": [failure.to_json() for failure in self.failures],
            "pass": self.passed,
            "vacuous": self.vacuous,
            "prng": self.prng,
            "version": self.version,
        }
