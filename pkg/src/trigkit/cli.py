"""
trigkit command line.

Subcommands:
    verify          sweep an identity and report residuals
    table           exact alternating binomial sums and tan(n*pi/4)
    gauss-product   exact and modulus-argument Gaussian products
    bench           naive summation against the closed form

Exit codes:
    0   pass
    1   identity or residual failure
    2   usage or domain error
"""
import argparse
import logging
import math
import re
import sys
from typing import List, Optional, Tuple

from trigkit import __version__
from trigkit.config import (DEFAULT_POLE_GUARD, DEFAULT_SAMPLES_PER_N, DEFAULT_SEED, DEFAULT_TOLERANCE,
                            INTEGRALITY_TOLERANCE, MIN_BENCH_REPS)
from trigkit.func.errors import DomainError, MagnitudeOverflowError, PoleError
from trigkit.func.exact.core import alt_binom_even, alt_binom_odd, gauss_product, tan_quarter
from trigkit.func.series.closed_form import factor_modulus, gauss_product_closed
from trigkit.func.verify.bench import time_pair
from trigkit.func.verify.engine import sweep
from trigkit.func.verify.objects import SamplePlan, TheoremId
from trigkit.func.verify.reports import (OutputFormat, render_bench_record, render_identity_report, render_rows,
                                         to_json_document)

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

RANGE_PATTERN = re.compile(r'(\d+)(?:\.\.(\d+))?')
PI_PATTERN = re.compile(r'(-)?(\d+(?:\.\d+)?)?\*?pi(?:/(\d+(?:\.\d+)?))?')
FACTOR_PATTERN = re.compile(r'\s*(-?\d+)\s*,\s*(-?\d+)\s*')


class UsageError(ValueError):
    """A flag parsed but its value is unusable."""


def parse_range(text: str) -> Tuple[int, int]:
    """'a..b' (inclusive) or a single 'a'."""
    match = RANGE_PATTERN.fullmatch(text.strip())
    if not match:
        raise argparse.ArgumentTypeError(f"malformed range {text!r}, expected a..b")
    lo = int(match.group(1))
    hi = int(match.group(2)) if match.group(2) is not None else lo
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_angle(text: str) -> float:
    """Decimal radians, or a pi literal such as 'pi', 'pi/4', '3pi/4', '-pi/6'."""
    cleaned = text.strip().lower()
    match = PI_PATTERN.fullmatch(cleaned)
    if match:
        sign, coefficient, divisor = match.groups()
        value = math.pi * (float(coefficient) if coefficient else 1.0)
        if divisor is not None:
            if float(divisor) == 0:
                raise argparse.ArgumentTypeError(f"division by zero in angle {text!r}")
            value /= float(divisor)
        return -value if sign else value
    try:
        value = float(cleaned)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed angle {text!r}, expected radians or a pi/k literal")
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite, got {text!r}")
    return value


def parse_factors(text: str) -> List[Tuple[int, int]]:
    """'x1,y1;x2,y2;...' into integer pairs."""
    factors = []
    for chunk in text.split(';'):
        if not chunk.strip():
            continue
        match = FACTOR_PATTERN.fullmatch(chunk)
        if not match:
            raise argparse.ArgumentTypeError(f"malformed factor {chunk!r}, expected x,y")
        factors.append((int(match.group(1)), int(match.group(2))))
    if not factors:
        raise argparse.ArgumentTypeError("no factors given")
    return factors


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0 or not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"must be a positive number, got {text!r}")
    return value


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        plan = SamplePlan(theorem=TheoremId(args.theorem), n_range=args.n, samples_per_n=args.samples,
                          seed=args.seed, pole_guard=args.pole_guard, tolerance=args.tol)
    except ValueError as e:
        raise UsageError(str(e))
    report = sweep(plan, workers=args.workers)
    _emit(render_identity_report(report, OutputFormat(args.format)))
    if report.vacuous:
        logger.warning("vacuous pass: no sample survived the pole guard")
    return EXIT_PASS if report.passed else EXIT_FAILURE


def cmd_table(args: argparse.Namespace) -> int:
    if args.max_n < 0:
        raise UsageError(f"--max-n must be >= 0, got {args.max_n}")
    output_format = OutputFormat(args.format)
    rows = []
    for n in range(args.max_n + 1):
        even = alt_binom_even(n)
        odd = alt_binom_odd(n)
        tan = tan_quarter(n)
        row = {"n": n, "even": even, "odd": odd,
               "tan": tan.to_json() if output_format is OutputFormat.JSON else str(tan)}
        if args.kind == 'alt-binom':
            row["sum_of_squares"] = even * even + odd * odd
        rows.append(row)
    columns = ["n", "even", "odd", "tan"]
    if args.kind == 'alt-binom':
        columns.append("sum_of_squares")
    _emit(render_rows(rows, columns, output_format))
    return EXIT_PASS


def cmd_gauss_product(args: argparse.Namespace) -> int:
    factors = args.factors
    if any(x == 0 and y == 0 for x, y in factors):
        raise UsageError("a (0, 0) factor has no argument")
    principal = any(x == 0 for x, _ in factors)
    if principal:
        logger.warning("a factor has x = 0; using the principal-argument form atan2(y, x)")

    exact = gauss_product(factors)
    approx = gauss_product_closed(factors, principal_argument=principal)
    modulus = factor_modulus(factors)
    deviation = max(abs(approx.cos_part - exact.re), abs(approx.sin_part - exact.im))
    passed = deviation <= INTEGRALITY_TOLERANCE * modulus

    row = {"factors": [list(pair) for pair in factors], "exact_re": exact.re, "exact_im": exact.im,
           "float_cos": approx.cos_part, "float_sin": approx.sin_part, "deviation": deviation,
           "modulus": modulus, "principal_argument": principal, "pass": passed}
    output_format = OutputFormat(args.format)
    if output_format is OutputFormat.JSON:
        _emit(to_json_document(row))
    else:
        _emit(render_rows([row], list(row), output_format))
    return EXIT_PASS if passed else EXIT_FAILURE


def cmd_bench(args: argparse.Namespace) -> int:
    if args.reps < MIN_BENCH_REPS:
        raise UsageError(f"--reps must be >= {MIN_BENCH_REPS}, got {args.reps}")
    theorem = TheoremId(args.theorem)
    if theorem in (TheoremId.T2_1_COS, TheoremId.T2_1_SIN, TheoremId.T2_1_PYTH):
        if args.x is None or args.y is None or not float(args.x).is_integer():
            raise UsageError(f"{theorem.value} needs integer --x and --y")
        point = (int(args.x), int(args.y))
        if point == (0, 0):
            raise UsageError("(x, y) = (0, 0) is excluded")
    elif theorem in (TheoremId.C2_1_COS, TheoremId.C2_1_SIN):
        point = None
    elif theorem is TheoremId.T2_2:
        if args.factors is None:
            raise UsageError("t2_2 needs --factors")
        if any(x == 0 for x, _ in args.factors):
            raise UsageError("t2_2 factors need x_k != 0")
        point = tuple(args.factors)
        if len(point) != args.n:
            logger.info(f"--n {args.n} ignored; the factor count is {len(point)}")
        args.n = len(point)
    else:
        if args.x is None:
            raise UsageError(f"{theorem.value} needs --x")
        point = args.x

    record = time_pair(theorem, args.n, point, reps=args.reps, tolerance=args.tol, pole_guard=args.pole_guard)
    _emit(render_bench_record(record, OutputFormat(args.format)))
    return EXIT_PASS if record.passed else EXIT_FAILURE


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format', choices=[f.value for f in OutputFormat], default=OutputFormat.TEXT.value)
    parser.add_argument('--log-level', default='WARNING', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='trigkit',
                                     description="Verify finite trigonometric series identities against their "
                                                 "closed forms.")
    parser.add_argument('--version', action='version', version=f"trigkit {__version__}")
    sub = parser.add_subparsers(dest='command', required=True)
    theorem_names = [t.value for t in TheoremId]

    p_verify = sub.add_parser('verify', help="Sweep one identity over seeded samples")
    p_verify.add_argument('--theorem', required=True, choices=theorem_names)
    p_verify.add_argument('--n', type=parse_range, default=(1, 16), help="inclusive range a..b (default 1..16)")
    p_verify.add_argument('--samples', type=int, default=DEFAULT_SAMPLES_PER_N, help="samples per n")
    p_verify.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p_verify.add_argument('--tol', type=positive_float, default=DEFAULT_TOLERANCE)
    p_verify.add_argument('--pole-guard', type=positive_float, default=DEFAULT_POLE_GUARD)
    p_verify.add_argument('--workers', type=int, default=1, help="threads to spread n values over")
    _add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser('table', help="Exact alternating binomial sums and tan(n*pi/4)")
    p_table.add_argument('kind', choices=['tan-quarter', 'alt-binom'])
    p_table.add_argument('--max-n', type=int, default=16)
    _add_common(p_table)
    p_table.set_defaults(func=cmd_table)

    p_gauss = sub.add_parser('gauss-product', help="Exact and modulus-argument Gaussian products")
    p_gauss.add_argument('--factors', type=parse_factors, required=True, help='"x1,y1;x2,y2;..."')
    _add_common(p_gauss)
    p_gauss.set_defaults(func=cmd_gauss_product)

    p_bench = sub.add_parser('bench', help="Time naive summation against the closed form")
    p_bench.add_argument('--theorem', default=TheoremId.T2_3.value, choices=theorem_names)
    p_bench.add_argument('--n', type=int, default=1000)
    p_bench.add_argument('--x', type=parse_angle, default=None, help="angle (radians or pi/k), or integer x")
    p_bench.add_argument('--y', type=int, default=None, help="integer y for t2_1_*")
    p_bench.add_argument('--factors', type=parse_factors, default=None, help='factor list for t2_2')
    p_bench.add_argument('--reps', type=int, default=5)
    p_bench.add_argument('--tol', type=positive_float, default=DEFAULT_TOLERANCE)
    p_bench.add_argument('--pole-guard', type=positive_float, default=DEFAULT_POLE_GUARD)
    _add_common(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on bad flags and 0 on --help/--version
        return int(e.code) if e.code is not None else EXIT_PASS

    logging.basicConfig(level=getattr(logging, args.log_level), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return int(args.func(args))
    except (UsageError, DomainError, PoleError, MagnitudeOverflowError) as e:
        sys.stderr.write(f"trigkit {args.command}: error: {e}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
