"""Command-line entry point.

Subcommands:

    ingest   parse the rate CSV and report the dataset fingerprint
    scan     full pipeline: ingest, correlate, test all triple inequalities
    pooled   same scan on whole-series correlations (no segmentation)
    gamma    triple LP for one currency triple
    synth    synthetic-data experiments (random / singlet)
    fine     trivariate construction from six moments
    demo     built-in demonstrations (bell: the singlet-vector violation)

Every command emits a JSON report to stdout, or to a file with --report (a
one-line summary goes to stdout instead). Exit codes: 0 success, 2 usage
error, 3 data or format error. Inequality violations are results, not
errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import __version__
from .correlations import CorrelationSet, all_correlations, pooled_correlations
from .errors import FxBellError
from .fine import (
    MomentSet,
    check_three3,
    construct_trivariate,
    feasibility_oracle,
    k123_interval,
    moments_from_trivariate,
)
from .inequalities import SettingVector, TripleTest, scan_triples, singlet_demo
from .ingest import (
    SegmentedData,
    SignMatrix,
    RateTable,
    forward_diff_signs,
    load_rate_table,
    segment,
)
from .report import dump_report, make_report, violations_to_csv
from .synthetic import SyntheticConfig, run_experiment, singlet_experiment
from .triples import gamma_for_triple

USAGE_ERROR = 2
DATA_ERROR = 3

_ZERO_SIGN_CHOICES = {"plus": "plus", "minus": "minus", "drop": "drop_row"}

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

_BELL_DEMO_VECTORS = (
    (1.0, 0.0, 0.0),
    (_INV_SQRT2, _INV_SQRT2, 0.0),
    (_INV_SQRT2, -_INV_SQRT2, 0.0),
)


class UsageError(Exception):
    """Bad command-line arguments detected after parsing."""


def _add_input_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="path to the rate CSV")
    p.add_argument(
        "--zero-sign",
        choices=sorted(_ZERO_SIGN_CHOICES),
        default="plus",
        help="how zero day-over-day differences are digitized (default: plus)",
    )
    p.add_argument(
        "--segments",
        type=int,
        default=3,
        help="number of equal contiguous segments (default: 3)",
    )


def _add_report_options(
    p: argparse.ArgumentParser, formats: tuple[str, ...] = ("json",)
) -> None:
    p.add_argument("--report", help="write the report to this path")
    p.add_argument("--format", choices=formats, default="json")


def _pipeline(args) -> tuple[RateTable, SignMatrix, SegmentedData]:
    table = load_rate_table(args.input)
    signs = forward_diff_signs(table, _ZERO_SIGN_CHOICES[args.zero_sign])
    data = segment(signs, args.segments)
    return table, signs, data


def _dataset_section(
    table: RateTable, signs: SignMatrix, data: SegmentedData
) -> dict:
    return {
        "rows": table.n_rows,
        "skipped_rows": table.skipped_rows,
        "sign_rows": signs.n_rows,
        "zero_count": signs.zero_count,
        "dropped_zero_rows": signs.dropped_zero_rows,
        "segments": data.n_segments,
        "rows_per_segment": data.rows_per_segment,
        "dropped": data.dropped,
        "currencies": [c.code for c in table.currencies],
    }


def _correlation_summary(corrs: CorrelationSet) -> dict:
    values = [rec.value for rec in corrs.records]
    return {
        "count": len(values),
        "n": corrs.n,
        "pooled": corrs.pooled,
        "min": min(values),
        "max": max(values),
    }


def _emit(report: dict, args, summary: str, csv_text: str | None = None) -> int:
    if getattr(args, "format", "json") == "csv" and csv_text is not None:
        text = csv_text
    else:
        text = dump_report(report)
    if getattr(args, "report", None):
        Path(args.report).write_text(text)
        print(f"{summary} (report written to {args.report})")
    else:
        sys.stdout.write(text)
    return 0


def cmd_ingest(args) -> int:
    table, signs, data = _pipeline(args)
    if args.out:
        Path(args.out).write_text(json.dumps(data.to_json_dict()) + "\n")
    config = {
        "input": args.input,
        "zero_sign": args.zero_sign,
        "segments": args.segments,
        "out": args.out,
    }
    report = make_report(
        "ingest", config, dataset=_dataset_section(table, signs, data)
    )
    return _emit(
        report,
        args,
        f"ingested {table.n_rows} records "
        f"({table.skipped_rows} skipped, {data.rows_per_segment} per segment)",
    )


def _attach_gamma(
    tests: list[TripleTest], data: SegmentedData, want_all: bool
) -> list[TripleTest]:
    """Gamma for every violating test, and for all tests with want_all."""
    cache: dict[tuple[int, int, int], float] = {}
    out = []
    for t in tests:
        if t.violated or want_all:
            key = (t.a.index, t.b.index, t.c.index)
            if key not in cache:
                cache[key] = gamma_for_triple(data, t.a, t.b, t.c).gamma
            out.append(t.with_gamma(cache[key]))
        else:
            out.append(t)
    return out


def cmd_scan(args) -> int:
    table, signs, data = _pipeline(args)
    corrs = all_correlations(data)
    tests = scan_triples(corrs)
    tests = _attach_gamma(tests, data, args.with_gamma)
    violation_count = sum(1 for t in tests if t.violated)
    reported = [
        t
        for t in tests
        if t.violated or (args.threshold is not None and t.lhs >= args.threshold)
    ]
    entries = [t.to_json_dict() for t in reported]
    config = {
        "input": args.input,
        "zero_sign": args.zero_sign,
        "segments": args.segments,
        "with_gamma": args.with_gamma,
        "threshold": args.threshold,
        "format": args.format,
    }
    report = make_report(
        "scan",
        config,
        dataset=_dataset_section(table, signs, data),
        correlations=_correlation_summary(corrs),
        tests_total=len(tests),
        violation_count=violation_count,
        violations=entries,
    )
    return _emit(
        report,
        args,
        f"{violation_count} of {len(tests)} tests violated",
        csv_text=violations_to_csv(entries),
    )


def cmd_pooled(args) -> int:
    table, signs, data = _pipeline(args)
    corrs = pooled_correlations(data)
    tests = scan_triples(corrs)
    violation_count = sum(1 for t in tests if t.violated)
    reported = [
        t
        for t in tests
        if t.violated or (args.threshold is not None and t.lhs >= args.threshold)
    ]
    entries = [t.to_json_dict() for t in reported]
    config = {
        "input": args.input,
        "zero_sign": args.zero_sign,
        "segments": args.segments,
        "threshold": args.threshold,
        "format": args.format,
    }
    report = make_report(
        "pooled",
        config,
        dataset=_dataset_section(table, signs, data),
        correlations=_correlation_summary(corrs),
        tests_total=len(tests),
        violation_count=violation_count,
        violations=entries,
    )
    return _emit(
        report,
        args,
        f"{violation_count} of {len(tests)} pooled tests violated",
        csv_text=violations_to_csv(entries),
    )


def cmd_gamma(args) -> int:
    codes = [part.strip() for part in args.triple.split(",")]
    if len(codes) != 3 or not all(codes):
        raise UsageError("--triple needs three comma-separated currency codes")
    table, signs, data = _pipeline(args)
    currencies = tuple(data.currency(code) for code in codes)
    solution = gamma_for_triple(data, *currencies)
    c1, c2, c3 = solution.correlations
    from .inequalities import bell_like_lhs, model_free_check

    section = solution.to_json_dict()
    section["triple"] = {"a": codes[0], "b": codes[1], "c": codes[2]}
    section["lhs_plus"] = bell_like_lhs(c1, c2, c3, "plus")
    section["lhs_minus"] = bell_like_lhs(c1, c2, c3, "minus")
    section["slack_plus"] = model_free_check(c1, c2, c3, solution.gamma, "plus")
    section["slack_minus"] = model_free_check(c1, c2, c3, solution.gamma, "minus")
    config = {
        "input": args.input,
        "zero_sign": args.zero_sign,
        "segments": args.segments,
        "triple": args.triple,
    }
    report = make_report(
        "gamma",
        config,
        dataset=_dataset_section(table, signs, data),
        gamma=section,
    )
    return _emit(
        report,
        args,
        f"gamma({codes[0]},{codes[1]},{codes[2]}) = {solution.gamma:.6f}, "
        f"2*(1-gamma) = {solution.bound:.6f}",
    )


def cmd_synth(args) -> int:
    if args.mode == "random":
        config_obj = SyntheticConfig(n=args.n, seed=args.seed)
        result = run_experiment(config_obj)
    else:
        config_obj = SyntheticConfig(
            n=args.n, seed=args.seed, c1=args.c1, c2=args.c2, c3=args.c3
        )
        result = singlet_experiment(config_obj)
    if args.out:
        from .synthetic import gen_biased

        data = gen_biased(config_obj)
        Path(args.out).write_text(json.dumps(data.to_json_dict()) + "\n")
    config = {
        "mode": args.mode,
        "n": args.n,
        "seed": args.seed,
        "c1": config_obj.c1,
        "c2": config_obj.c2,
        "c3": config_obj.c3,
        "out": args.out,
    }
    report = make_report("synth", config, synthetic=result.to_json_dict())
    return _emit(
        report,
        args,
        f"gamma = {result.gamma:.6f}, |C1-C2| = {result.diff:.6f}, "
        f"3-2*gamma-C3 = {result.bound_minus_c3:.6f}",
    )


def cmd_fine(args) -> int:
    parts = [p.strip() for p in args.moments.split(",")]
    if len(parts) != 6:
        raise UsageError("--moments needs k1,k2,k3,k12,k13,k23")
    try:
        values = [float(p) for p in parts]
    except ValueError as exc:
        raise UsageError(f"bad moment value: {exc}") from None
    moments = MomentSet(*values)

    three3 = check_three3(moments)
    interval = k123_interval(moments)
    lp_feasible = feasibility_oracle(moments)
    section: dict = {
        "moments": moments.to_json_dict(),
        "three3": three3.to_json_dict(),
        "k123_interval": interval.to_json_dict(),
        "lp_feasible": lp_feasible,
    }
    if interval.feasible:
        choice: str | float
        if args.k123 in ("mid", "midpoint"):
            choice = "midpoint"
        elif args.k123 in ("lhs", "rhs"):
            choice = args.k123
        else:
            try:
                choice = float(args.k123)
            except ValueError:
                raise UsageError(
                    "--k123 must be mid, lhs, rhs, or a number"
                ) from None
        trivariate = construct_trivariate(moments, choice)
        section["trivariate"] = trivariate.values.tolist()
        section["k123"] = moments_from_trivariate(trivariate).k123
        summary = "trivariate constructed"
    else:
        section["trivariate"] = None
        section["violated"] = [c.name for c in three3.violated]
        summary = "no trivariate exists for these moments"
    config = {"moments": args.moments, "k123": args.k123}
    report = make_report("fine", config, fine=section)
    return _emit(report, args, summary)


def _parse_vector(text: str) -> SettingVector:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise UsageError("vectors need three comma-separated components")
    try:
        return SettingVector(tuple(float(p) for p in parts))
    except ValueError as exc:
        raise UsageError(f"bad vector component: {exc}") from None


def cmd_demo(args) -> int:
    defaults = _BELL_DEMO_VECTORS
    a = _parse_vector(args.a) if args.a else SettingVector(defaults[0])
    b = _parse_vector(args.b) if args.b else SettingVector(defaults[1])
    c = _parse_vector(args.c) if args.c else SettingVector(defaults[2])
    result = singlet_demo(a, b, c)
    section = result.to_json_dict()
    # human-readable restatement: |c_ab + c_ac| <= 1 + c_bc
    plus_left = abs(result.c_ab + result.c_ac)
    plus_right = 1.0 + result.c_bc
    verdict = "violated" if result.violated_plus else "satisfied"
    section["message"] = (
        f"plus variant reads {plus_left:.6f} <= {plus_right:.6f}: {verdict}"
    )
    config = {
        "what": args.what,
        "a": list(a.components),
        "b": list(b.components),
        "c": list(c.components),
    }
    report = make_report("demo", config, demo=section)
    return _emit(report, args, section["message"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fxbell",
        description="Boole-Bell inequality analysis of +-1 digitized data",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse a rate CSV, report its shape")
    _add_input_options(p)
    p.add_argument("--out", help="write the segmented sign data as JSON")
    _add_report_options(p)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("scan", help="test all currency triples")
    _add_input_options(p)
    p.add_argument(
        "--with-gamma",
        action="store_true",
        help="solve the triple LP for every test, not just violations",
    )
    p.add_argument(
        "--threshold",
        type=float,
        default=None,
        help="also report non-violating tests with lhs >= this value",
    )
    _add_report_options(p, formats=("json", "csv"))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("pooled", help="test triples on pooled correlations")
    _add_input_options(p)
    p.add_argument("--threshold", type=float, default=None)
    _add_report_options(p, formats=("json", "csv"))
    p.set_defaults(func=cmd_pooled)

    p = sub.add_parser("gamma", help="triple LP for one currency triple")
    _add_input_options(p)
    p.add_argument(
        "--triple", required=True, help="three currency codes, e.g. EUR,CHF,DKK"
    )
    _add_report_options(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("synth", help="synthetic pair-data experiments")
    p.add_argument("mode", choices=["random", "singlet"])
    p.add_argument("--n", type=int, required=True, help="pairs per data set")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--c1", type=float, default=_INV_SQRT2)
    p.add_argument("--c2", type=float, default=-_INV_SQRT2)
    p.add_argument("--c3", type=float, default=0.0)
    p.add_argument("--out", help="write the generated sign data as JSON")
    _add_report_options(p)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("fine", help="trivariate from six moments")
    p.add_argument(
        "--moments", required=True, help="k1,k2,k3,k12,k13,k23 as floats"
    )
    p.add_argument(
        "--k123",
        default="mid",
        help="third-order moment: mid, lhs, rhs, or a number (default: mid)",
    )
    _add_report_options(p)
    p.set_defaults(func=cmd_fine)

    p = sub.add_parser("demo", help="built-in demonstrations")
    p.add_argument("what", choices=["bell"])
    p.add_argument("--a", help="override vector a, e.g. 1,0,0")
    p.add_argument("--b", help="override vector b")
    p.add_argument("--c", help="override vector c")
    _add_report_options(p)
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except FxBellError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
