"""Command-line front end.

Subcommands map one-to-one onto the library:

* ``binary``   - metrics from a score/default CSV,
* ``imputed``  - metrics from a grade/count/pd CSV,
* ``analyze``  - triangular geometry and trapezoid decomposition from
  given (--ar, --lar, --rar),
* ``burgt``    - van der Burgt point or sweep tables (CSV),
* ``validate`` - compare a binary-source and an imputed-source JSON report.

Output is deterministic: fixed key order, every float rendered with 12
significant digits, decimal point regardless of locale.  Exit codes:
0 success, 2 input or validation error, 3 numerical infeasibility.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import curves, empirical, imputed, validation

SCHEMA_VERSION = 1

_TRUE = {"1", "true"}
_FALSE = {"0", "false"}


# ---------------------------------------------------------------------------
# Deterministic serialization
# ---------------------------------------------------------------------------

def _fmt(value: float) -> str:
    """Render a float with 12 significant digits (locale independent)."""
    if value != value or value in (float("inf"), float("-inf")):
        raise ValueError("non-finite value in output")
    return format(float(value), ".12g")


def _json_text(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ",\n".join(
            f"{pad}  {json.dumps(k)}: {_json_text(v, indent + 1)}" for k, v in value.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value):
            return "[" + ", ".join(_scalar_text(v) for v in value) + "]"
        items = ",\n".join(f"{pad}  {_json_text(v, indent + 1)}" for v in value)
        return "[\n" + items + "\n" + pad + "]"
    return _scalar_text(value)


def _scalar_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, int):
        return str(value)
    return json.dumps(value)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# Input parsing
# ---------------------------------------------------------------------------

class InputError(ValueError):
    """A problem with user-supplied files or values."""


def _parse_float(text: str, where: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise InputError(f"{where}: not a number: {text!r}") from None
    if value != value:
        raise InputError(f"{where}: NaN is not a valid value")
    return value


def _read_binary_csv(path: str, score_col: str, default_col: str) -> empirical.ScoreSample:
    nondefault, default = [], []
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot open {path}: {exc}") from None
    with fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise InputError(f"{path}: empty file, header row required")
        for col in (score_col, default_col):
            if col not in reader.fieldnames:
                raise InputError(
                    f"{path}: missing column {col!r}; found {reader.fieldnames}"
                )
        for row in reader:
            line = reader.line_num
            raw_score = (row[score_col] or "").strip()
            raw_flag = (row[default_col] or "").strip().lower()
            if not raw_score or not raw_flag:
                raise InputError(f"{path}:{line}: missing value")
            score = _parse_float(raw_score, f"{path}:{line}")
            if raw_flag in _TRUE:
                default.append(score)
            elif raw_flag in _FALSE:
                nondefault.append(score)
            else:
                raise InputError(
                    f"{path}:{line}: default flag must be one of 0/1/true/false, got {raw_flag!r}"
                )
    if not default or not nondefault:
        raise InputError(
            f"{path}: degenerate sample: needs at least one default and one non-default"
        )
    return empirical.ScoreSample.from_scores(nondefault, default)


def _read_grade_csv(path: str) -> imputed.GradeTable:
    grades = []
    try:
        fh = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot open {path}: {exc}") from None
    with fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise InputError(f"{path}: empty file, header row required")
        for col in ("grade", "count", "pd"):
            if col not in reader.fieldnames:
                raise InputError(f"{path}: missing column {col!r}; found {reader.fieldnames}")
        prev_pd = None
        for row in reader:
            line = reader.line_num
            label = (row["grade"] or "").strip()
            count_text = (row["count"] or "").strip()
            pd_value = _parse_float((row["pd"] or "").strip(), f"{path}:{line}")
            try:
                count = int(count_text)
            except ValueError:
                raise InputError(f"{path}:{line}: count must be an integer, got {count_text!r}") from None
            if prev_pd is not None and pd_value > prev_pd:
                raise InputError(
                    f"{path}:{line}: grades must be sorted by descending pd; "
                    f"{label!r} has pd {pd_value} above the previous {prev_pd}"
                )
            prev_pd = pd_value
            try:
                grades.append(imputed.Grade(label, count, pd_value))
            except ValueError as exc:
                raise InputError(f"{path}:{line}: {exc}") from None
    try:
        return imputed.GradeTable(tuple(grades))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_report(path: str, expect_source: str) -> empirical.MetricReport:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot open {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from None
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise InputError(
            f"{path}: schema_version mismatch: expected {SCHEMA_VERSION}, got {version!r}"
        )
    source = doc.get("source")
    if source != expect_source:
        raise InputError(
            f"{path}: source tag mismatch: expected {expect_source!r}, got {source!r}"
        )
    try:
        metrics = doc["metrics"]
        sigma = doc["sigma_ar"]
        counts = doc["counts"]
        return empirical.MetricReport(
            ar=float(metrics["ar"]),
            lar=float(metrics["lar"]),
            rar=float(metrics["rar"]),
            sigma_ar=float(sigma["exact"]) if sigma is not None else 0.0,
            n_nondefault=int(counts["n"]),
            n_default=int(counts["d"]),
            source=source,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed report: {exc}") from None


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _cmd_binary(args) -> str:
    sample = _read_binary_csv(args.input, args.score_col, args.default_col)
    if args.flip_scores:
        sample = sample.flipped()
    if args.thin_n is not None or args.thin_d is not None:
        sample = empirical.thin(
            sample,
            args.thin_n if args.thin_n is not None else sample.n_nondefault,
            args.thin_d if args.thin_d is not None else sample.n_default,
            args.seed,
        )
    _, ar = empirical.ar_mann_whitney(sample)
    try:
        # the short-form bound is undefined below ar = -1/3
        simplified = empirical.sigma_ar(
            ar, sample.n_nondefault, sample.n_default, simplified=True
        )
    except ValueError:
        simplified = None
    doc = {
        "schema_version": SCHEMA_VERSION,
        "source": "binary",
        "metrics": {
            "ar": ar,
            "lar": empirical.lar_discrete(sample),
            "rar": empirical.rar_discrete(sample),
        },
        "sigma_ar": {
            "exact": empirical.sigma_ar(ar, sample.n_nondefault, sample.n_default),
            "simplified": simplified,
        },
        "counts": {"n": sample.n_nondefault, "d": sample.n_default},
    }
    if args.emit_curves:
        roc = empirical.empirical_roc(sample)
        cap = empirical.cap_curve(sample)
        doc["curves"] = {
            "roc": [[float(x), float(y)] for x, y in zip(roc.x, roc.y)],
            "cap": [[float(x), float(y)] for x, y in zip(cap.x, cap.y)],
        }
    return _json_text(doc) + "\n"


def _cmd_imputed(args) -> str:
    table = _read_grade_csv(args.input)
    roc = imputed.imputed_roc(table)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "source": "imputed",
        "metrics": {
            "ar": imputed.ar_imputed(table),
            "lar": imputed.lar_imputed(table),
            "rar": imputed.rar_imputed(table),
        },
        "sigma_ar": None,
        "counts": {
            "n": int(round(table.nondefault_mass)),
            "d": int(round(table.default_mass)),
        },
        "curves": {
            "imputed_roc": [[float(a), float(b)] for a, b in zip(roc.g, roc.r)]
        },
    }
    return _json_text(doc) + "\n"


def _cmd_analyze(args) -> str:
    decomp = curves.trapezoid_decomposition(args.ar, args.lar, args.rar)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "source": "analytic",
        "metrics": {"ar": decomp.ar, "lar": decomp.lar, "rar": decomp.rar},
        "decomposition": {
            "a_lar": decomp.a_lar,
            "a_rar": decomp.a_rar,
            "mu_l": decomp.mu_l,
            "mu_r": decomp.mu_r,
            "a": decomp.cap_a,
            "b": decomp.cap_b,
            "indifference": decomp.indifference_i,
            "vertex_low": [decomp.vertex_low[0], decomp.vertex_low[1]],
            "vertex_high": [decomp.vertex_high[0], decomp.vertex_high[1]],
            "zones": decomp.zones(),
        },
    }
    return _json_text(doc) + "\n"


def _parse_sweep(spec: str) -> list[float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise InputError(f"sweep spec must be lo:hi:step, got {spec!r}")
    lo, hi, step = (_parse_float(p, "sweep") for p in parts)
    if not (0.0 < lo <= hi < 1.0) or step <= 0.0:
        raise InputError(f"sweep bounds must satisfy 0 < lo <= hi < 1 and step > 0, got {spec!r}")
    count = int((hi - lo) / step + 1e-9) + 1
    return [round(lo + i * step, 12) for i in range(count)]


def _cmd_burgt(args) -> str:
    if args.sweep is not None:
        grid = _parse_sweep(args.sweep)
        rows = curves.burgt_preference_sweep(grid, args.tol)
        return _csv_text(
            ["ar", "k", "lar", "rar", "min_bound", "max_bound"],
            [[r.ar, r.k, r.lar, r.rar, r.min_bound, r.max_bound] for r in rows],
        )
    if args.k is not None:
        k = args.k
        ar = curves.burgt_ar(k)
    else:
        ar = args.ar
        k = curves.burgt_k(ar)
    curve = curves.BurgtCurve(k)
    lar = curves.lar_integral(curve, args.tol)
    rar = curves.rar_integral(curve, args.tol)
    return _csv_text(["k", "ar", "lar", "rar"], [[k, ar, lar, rar]])


def _cmd_validate(args) -> str:
    binary = _load_report(args.binary, "binary")
    imp = _load_report(args.imputed, "imputed")
    verdict = validation.validate(binary, imp, z=args.z, band=args.band)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "source": "validation",
        "verdict": {
            "z": verdict.z,
            "band": verdict.band,
            "gini_consistent": verdict.gini_consistent,
            "preference_binary": verdict.preference_binary,
            "preference_imputed": verdict.preference_imputed,
            "preference_consistent": verdict.preference_consistent,
            "dominant_metric_gap": verdict.dominant_metric_gap,
            "binary_metrics": {
                "ar": verdict.binary.ar,
                "lar": verdict.binary.lar,
                "rar": verdict.binary.rar,
                "sigma_ar": verdict.binary.sigma_ar,
            },
            "imputed_metrics": {
                "ar": verdict.imputed.ar,
                "lar": verdict.imputed.lar,
                "rar": verdict.imputed.rar,
            },
            "notes": list(verdict.notes),
        },
    }
    return _json_text(doc) + "\n"


# ---------------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rocmetrics",
        description="First- and second-order discriminatory-power metrics for scoring models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("binary", help="metrics from binary default data (CSV)")
    p.add_argument("input", help="CSV with a score column and a 0/1 default column")
    p.add_argument("--score-col", default="score")
    p.add_argument("--default-col", default="default")
    p.add_argument("--flip-scores", action="store_true",
                   help="negate scores (use when higher score means riskier)")
    p.add_argument("--thin-n", type=int, default=None, help="cap on non-defaults kept")
    p.add_argument("--thin-d", type=int, default=None, help="cap on defaults kept")
    p.add_argument("--seed", type=int, default=0, help="thinning seed (PCG64)")
    p.add_argument("--emit-curves", action="store_true",
                   help="include ROC and CAP polylines in the JSON")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(run=_cmd_binary)

    p = sub.add_parser("imputed", help="metrics from a calibrated grade table (CSV)")
    p.add_argument("input", help="CSV with columns grade,count,pd sorted by descending pd")
    p.add_argument("--out", default=None)
    p.set_defaults(run=_cmd_imputed)

    p = sub.add_parser("analyze", help="triangular geometry from given metric values")
    p.add_argument("--ar", type=float, required=True)
    p.add_argument("--lar", type=float, required=True)
    p.add_argument("--rar", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(run=_cmd_analyze)

    p = sub.add_parser("burgt", help="van der Burgt curve family tables (CSV)")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=float, help="curvature parameter")
    group.add_argument("--ar", type=float, help="Gini index to invert")
    group.add_argument("--sweep", help="Gini grid lo:hi:step")
    p.add_argument("--tol", type=float, default=None, help="quadrature tolerance")
    p.add_argument("--out", default=None)
    p.set_defaults(run=_cmd_burgt)

    p = sub.add_parser("validate", help="compare binary and imputed JSON reports")
    p.add_argument("--binary", required=True, help="binary-source report path")
    p.add_argument("--imputed", required=True, help="imputed-source report path")
    p.add_argument("--z", type=float, default=2.0, help="confidence multiplier")
    p.add_argument("--band", type=float, default=None,
                   help="neutrality band for preference tags (default: binary sigma)")
    p.add_argument("--out", default=None)
    p.set_defaults(run=_cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.run(args)
    except (curves.InfeasibleMetricError, curves.DegenerateTrapezoidError,
            curves.DegenerateCurveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _write_output(text, args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
