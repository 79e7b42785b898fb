import json
from enum import Enum
from typing import Any, Dict, List

import pandas as pd

from trigkit.func.verify.bench import BenchRecord
from trigkit.func.verify.objects import IdentityReport


class OutputFormat(Enum):
    TEXT = 'text'
    JSON = 'json'
    CSV = 'csv'


REPORT_COLUMNS = ["theorem", "n_range", "samples", "seed", "tolerance", "pole_guard", "evaluated",
                  "skipped_near_pole", "max_rel_err", "worst_case", "failures", "pass", "vacuous", "prng", "version"]


def _compact(value: Any) -> Any:
    """Nested values become compact JSON so each CSV cell stays a single field."""
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(',', ':'))
    if value is None:
        return ''
    return value


def to_json_document(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def rows_to_csv(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    df = pd.DataFrame([{key: _compact(row.get(key)) for key in columns} for row in rows],
                      columns=columns, dtype=object)
    return df.to_csv(index=False, lineterminator="\n")


def rows_to_text(rows: List[Dict[str, Any]], columns: List[str]) -> str:
    df = pd.DataFrame([{key: _compact(row.get(key)) for key in columns} for row in rows],
                      columns=columns, dtype=object)
    return df.to_string(index=False) + "\n"


def render_identity_report(report: IdentityReport, output_format: OutputFormat) -> str:
    data = report.to_json()
    if output_format is OutputFormat.JSON:
        return to_json_document(data)
    if output_format is OutputFormat.CSV:
        return rows_to_csv([data], REPORT_COLUMNS)

    lo, hi = report.plan.n_range
    lines = [
        f"theorem            {data['theorem']}",
        f"n range            {lo}..{hi}",
        f"samples per n      {data['samples']}  (seed {data['seed']}, {data['prng']})",
        f"tolerance          {data['tolerance']:g}",
        f"pole guard         {data['pole_guard']:g} rad",
        f"evaluated          {data['evaluated']}",
        f"skipped near pole  {data['skipped_near_pole']}",
        f"max rel err        {data['max_rel_err']:.3e}",
        f"worst case         {json.dumps(data['worst_case'])}",
        f"failures           {len(report.failures)}",
    ]
    for failure in data['failures'][:10]:
        lines.append(f"  {json.dumps(failure['input'])}  lhs={failure['lhs']}  rhs={failure['rhs']}  "
                     f"rel_err={failure['rel_err']:.3e}")
    if len(report.failures) > 10:
        lines.append(f"  ... {len(report.failures) - 10} more")
    status = "PASS" if report.passed else "FAIL"
    if report.vacuous:
        status += " (vacuous: no samples evaluated)"
    lines.append(f"result             {status}")
    return "\n".join(lines) + "\n"


BENCH_COLUMNS = ["theorem", "n", "input", "reps", "naive_time", "closed_time", "speedup", "residual", "pass",
                 "below_timer_resolution", "naive_timings", "closed_timings"]


def render_bench_record(record: BenchRecord, output_format: OutputFormat) -> str:
    data = record.to_json()
    if output_format is OutputFormat.JSON:
        return to_json_document(data)
    if output_format is OutputFormat.CSV:
        return rows_to_csv([data], BENCH_COLUMNS)
    lines = [
        f"theorem      {data['theorem']}",
        f"input        {json.dumps(data['input'])}",
        f"reps         {data['reps']}",
        f"naive        {data['naive_time']:.6e} s (median)",
        f"closed form  {data['closed_time']:.6e} s (median)",
        f"speedup      {data['speedup']:.3f}x",
        f"residual     {data['residual']:.3e}",
        f"result       {'PASS' if record.passed else 'FAIL'}",
    ]
    if record.below_timer_resolution:
        lines.append("warning      a median is below the timer resolution floor")
    return "\n".join(lines) + "\n"


def render_rows(rows: List[Dict[str, Any]], columns: List[str], output_format: OutputFormat) -> str:
    """Tables (exact sums, Gaussian products) in any output format."""
    if output_format is OutputFormat.JSON:
        return to_json_document(rows)
    if output_format is OutputFormat.CSV:
        return rows_to_csv(rows, columns)
    return rows_to_text(rows, columns)
