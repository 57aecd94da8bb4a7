"""Command-line front end: ``conjclass <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog, liecount, partitions, suites, wreath
from .errors import ConjclassError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _use_color(stream) -> bool:
    return "NO_COLOR" not in os.environ and hasattr(stream, "isatty") and stream.isatty()


def _cmd_partitions(args, out):
    if args.classify:
        c = partitions.classify(args.d)
        print(_dump({"d": args.d, "total": c.total, "even_count": c.even_count,
                     "odd_count": c.odd_count, "distinct_odd_parts_count": c.distinct_odd_count}),
              file=out)
    elif args.json:
        print(_dump({"d": args.d, "p": partitions.p(args.d)}), file=out)
    else:
        print(partitions.p(args.d), file=out)
    return EXIT_OK


def _cmd_kcount(args, out):
    gid = liecount.make_id(args.family, args.d, args.q)
    if args.all_bounds:
        bounds = liecount.k_bounds(gid)
        print(_dump({"group": gid.label, "bounds": [b.as_dict() for b in bounds.values()]}),
              file=out)
        return EXIT_OK
    result = liecount.k_bound(gid) if args.bound else liecount.k_count(gid)
    print(_dump(result.as_dict()), file=out)
    return EXIT_OK


def _cmd_degree(args, out):
    value = liecount.degree(args.action, *args.params)
    if args.json:
        print(_dump({"action": args.action, "params": args.params, "degree": value}), file=out)
    else:
        print(value, file=out)
    return EXIT_OK


def _cmd_wreath(args, out):
    if args.cyclic is not None:
        value = wreath.k_wreath_cyclic(args.k, args.cyclic)
        top = f"C{args.cyclic}"
    else:
        value = wreath.k_wreath_generic(args.k, catalog.get(args.top))
        top = args.top
    if args.json:
        print(_dump({"k": args.k, "top": top, "value": value}), file=out)
    else:
        print(value, file=out)
    return EXIT_OK


def _cmd_verify(args, out):
    report = suites.run_suite(args.suite, args.data)
    if args.format == "text":
        print(report.to_text(color=_use_color(out)), file=out)
    else:
        print(report.to_json(), file=out)
    return EXIT_OK if report.passed else EXIT_FAIL


def _cmd_scan(args, out):
    if args.suite == "m12-threshold":
        result = wreath.m12_threshold_sweep(args.r_max)
        result = {"scan": "m12-threshold", **result}
    else:
        result = {"scan": "d-threshold", "base": args.base, "max_d": {
            name: partitions.max_d_satisfying(name, base=args.base)
            for name in partitions.INEQUALITIES
        }}
    print(_dump(result), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conjclass",
                                     description="Exact conjugacy-class counts, bounds and checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="partition count p(d) or its classification")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("kcount", help="exact class number or tightest bound")
    p.add_argument("--family", required=True,
                   help="PSL, PGL2, Sp4, PSU, Suzuki, A, S, M12, ...")
    p.add_argument("--d", type=int)
    p.add_argument("--q", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--bound", action="store_true", help="report the tightest upper bound")
    g.add_argument("--all-bounds", action="store_true", help="list every applicable bound")
    p.set_defaults(func=_cmd_kcount)

    p = sub.add_parser("degree", help="degree of a standard primitive action")
    p.add_argument("--action", required=True, choices=liecount.ACTIONS)
    p.add_argument("--params", type=int, nargs="+", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("wreath", help="class number of a wreath product from k(A)")
    p.add_argument("--k", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cyclic", type=int, metavar="R")
    g.add_argument("--top", metavar="CATALOG_NAME")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_wreath)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=suites.SUITES)
    p.add_argument("--data", help="census file overriding the bundled one")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="threshold sweeps")
    p.add_argument("--suite", required=True, choices=("m12-threshold", "d-threshold"))
    p.add_argument("--r-max", type=int, default=400)
    p.add_argument("--base", type=int, default=2, help="logarithm base for the d chains")
    p.set_defaults(func=_cmd_scan)
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (ConjclassError, ValueError, KeyError) as exc:
        print(f"conjclass: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
