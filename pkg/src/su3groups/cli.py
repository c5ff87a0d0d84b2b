"""Command-line interface.

Subcommands:
  analyze-c N A B           classify one C-group
  analyze-d N A B D R S     classify one D-group
  scan                      sweep parameter ranges into a deduplicated catalog
  verify-paper              run the built-in verification suite

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 element
cap exceeded.  The SU3_ORDER_CAP environment variable overrides the
default closure cap; --order-cap overrides both.
"""

from __future__ import annotations

import argparse
import datetime
import json
import sys
from typing import Optional, Sequence

from .engine import default_order_cap
from .errors import CapExceeded
from .report import (
    ClassificationReport,
    analyze_c,
    analyze_d,
    render_csv,
    render_human,
)
from .verification import CheckResult, run_all

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su3groups",
        description="Exact classification of the finite SU(3) subgroup series C and D.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("analyze-c", help="classify C(n,a,b) = <E, F(n,a,b)>")
    pc.add_argument("n", type=int)
    pc.add_argument("a", type=int)
    pc.add_argument("b", type=int)
    _add_report_options(pc)
    pc.set_defaults(func=_cmd_analyze_c)

    pd = sub.add_parser("analyze-d", help="classify D(n,a,b;d,r,s) = <E, F(n,a,b), G~(d,r,s)>")
    for name in ("n", "a", "b", "d", "r", "s"):
        pd.add_argument(name, type=int)
    _add_report_options(pd)
    pd.set_defaults(func=_cmd_analyze_d)

    ps = sub.add_parser("scan", help="classify all groups within parameter bounds")
    ps.add_argument("--max-n", type=int, required=True, help="upper bound for n (inclusive)")
    ps.add_argument("--max-d", type=int, default=2, help="upper bound for d (inclusive)")
    ps.add_argument(
        "--type", choices=("c", "d", "both"), default="both", dest="family",
        help="which series to sweep",
    )
    ps.add_argument("--order-cap", type=int, default=None)
    ps.add_argument("-o", "--output", required=True, help="catalog file path (JSON)")
    ps.set_defaults(func=_cmd_scan)

    pv = sub.add_parser("verify-paper", help="run the built-in verification suite")
    pv.add_argument("--json", action="store_true", dest="as_json")
    pv.set_defaults(func=_cmd_verify)

    return parser


def _add_report_options(parser: argparse.ArgumentParser) -> None:
    fmt = parser.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", dest="as_json", help="emit JSON")
    fmt.add_argument("--csv", action="store_true", dest="as_csv", help="emit CSV")
    parser.add_argument("--order-cap", type=int, default=None)
    parser.add_argument("-o", "--output", default=None, help="write to file instead of stdout")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry_point() -> None:
    sys.exit(main())


def _emit_report(report: ClassificationReport, args: argparse.Namespace) -> None:
    if args.as_json:
        text = report.to_json() + "\n"
    elif args.as_csv:
        text = render_csv([report])
    else:
        text = render_human(report) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_analyze_c(args: argparse.Namespace) -> int:
    report = analyze_c(args.n, args.a, args.b, args.order_cap)
    _emit_report(report, args)
    return EXIT_OK


def _cmd_analyze_d(args: argparse.Namespace) -> int:
    report = analyze_d(args.n, args.a, args.b, args.d, args.r, args.s, args.order_cap)
    _emit_report(report, args)
    return EXIT_OK


def _cmd_scan(args: argparse.Namespace) -> int:
    if args.max_n < 1 or args.max_d < 1:
        print("error: bounds must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    cap = args.order_cap if args.order_cap is not None else default_order_cap()
    entries: dict = {}
    skipped: list[dict] = []
    for kind, params in _scan_tuples(args.max_n, args.max_d, args.family):
        try:
            if kind == "C":
                report = analyze_c(params["n"], params["a"], params["b"], cap)
            else:
                report = analyze_d(
                    params["n"], params["a"], params["b"],
                    params["d"], params["r"], params["s"], cap,
                )
        except CapExceeded:
            skipped.append({"kind": kind, "params": params, "reason": "order cap"})
            continue
        key = _fingerprint_key(report)
        if key not in entries:
            entries[key] = {
                "kind": report.kind,
                "params": report.params,
                "order": report.structure["order"],
                "structure": report.structure_str,
                "flags": report.flags,
                "fingerprint": report.fingerprint,
                "tuple_count": 1,
            }
        else:
            entries[key]["tuple_count"] += 1
    catalog = {
        "schema": 1,
        "params": {
            "max_n": args.max_n,
            "max_d": args.max_d,
            "type": args.family,
            "order_cap": cap,
        },
        "generated_at": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "entries": sorted(entries.values(), key=lambda e: (e["order"], _entry_sort_key(e))),
        "skipped": skipped,
    }
    with open(args.output, "w", encoding="utf-8") as handle:
        json.dump(catalog, handle, indent=2, sort_keys=True)
        handle.write("\n")
    print(f"wrote {len(entries)} entries ({len(skipped)} skipped) to {args.output}")
    return EXIT_OK


def _scan_tuples(max_n: int, max_d: int, family: str):
    if family in ("c", "both"):
        for n in range(1, max_n + 1):
            for a in range(n):
                for b in range(n):
                    yield "C", {"n": n, "a": a, "b": b}
    if family in ("d", "both"):
        for n in range(1, max_n + 1):
            for a in range(n):
                for b in range(n):
                    for d in range(1, max_d + 1):
                        for r in range(d):
                            for s in range(d):
                                yield "D", {"n": n, "a": a, "b": b, "d": d, "r": r, "s": s}


def _fingerprint_key(report: ClassificationReport) -> tuple:
    fp = report.fingerprint
    return (
        fp["order"],
        tuple(tuple(pair) for pair in fp["element_order_histogram"]),
        fp["center_order"],
        fp["derived_order"],
        tuple(fp["abelian_invariants"]),
    )


def _entry_sort_key(entry: dict) -> tuple:
    fp = entry["fingerprint"]
    return (
        tuple(tuple(pair) for pair in fp["element_order_histogram"]),
        fp["center_order"],
        fp["derived_order"],
        tuple(fp["abelian_invariants"]),
        entry["kind"],
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    results: list[CheckResult] = []
    if args.as_json:
        results = run_all()
        payload = [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ]
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:

        def emit(result: CheckResult) -> None:
            status = "PASS" if result.passed else "FAIL"
            print(f"{status}  {result.name}: {result.detail}")
            results.append(result)

        run_all(emit)
        failed = sum(1 for r in results if not r.passed)
        print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


if __name__ == "__main__":
    entry_point()
