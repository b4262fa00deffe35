"""The ``rcwb`` command: check law suites against a model file, or evaluate
map expressions in it."""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .dsl import DEMO, Document, evaluate, parse_document, render
from .errors import RCWBError
from .laws import FAIL, SKIPPED, Budget, LawReport, summarize
from .suites import GROUPS, SUITES, resolve, run_suites

BUILTIN = {"builtin:demo": DEMO}

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def load_document(source: str) -> Document:
    text = BUILTIN.get(source)
    if text is None:
        text = Path(source).read_text()
    return parse_document(text)


def _text_report(reports: list[LawReport], out) -> None:
    width = max((len(r.law) for r in reports), default=0)
    suite = None
    for r in reports:
        if r.suite != suite:
            suite = r.suite
            print(f"[{suite}]", file=out)
        scope = "exhaustive" if r.exhaustive else f"sampled (seed {r.seed})"
        line = f"  {r.law:<{width}}  {r.status.upper():<7}  {r.checked:>7} checked  {scope}"
        if r.skipped:
            line += f", {r.skipped} skipped"
        print(line, file=out)
        if r.detail and r.status != "pass":
            print(f"      {r.detail}", file=out)
        if r.counterexample:
            for k, v in r.counterexample.items():
                print(f"      {k} = {v}", file=out)
    skipped = [r for r in reports if r.status == SKIPPED or r.skipped]
    if skipped:
        print("skipped checks:", file=out)
        for r in skipped:
            why = r.detail or f"{r.skipped} cases over budget"
            print(f"  {r.suite}/{r.law}: {why}", file=out)
    counts = summarize(reports)
    print("summary: " + ", ".join(f"{k} {v}" for k, v in counts.items()), file=out)


def cmd_check(args, out) -> int:
    doc = load_document(args.model)
    budget = Budget(max_size=args.max_size, seed=args.seed)
    model = doc.model(args.max_size)
    started = time.perf_counter()
    reports = run_suites(model, args.suite, budget)
    if args.report == "records":
        for r in reports:
            print(json.dumps(r.to_record(), sort_keys=True), file=out)
    else:
        _text_report(reports, out)
        print(f"time: {time.perf_counter() - started:.2f}s", file=out)
    return EXIT_FAIL if any(r.status == FAIL for r in reports) else EXIT_OK


def cmd_eval(args, out) -> int:
    doc = load_document(args.model)
    for expr in args.expr:
        print(render(evaluate(doc, expr, args.kind)), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcwb", description="Restriction category workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run law suites against a model")
    check.add_argument("model", help="a model file, or builtin:demo")
    choices = sorted(set(SUITES) | set(GROUPS))
    check.add_argument("--suite", default="all", choices=choices, metavar="SUITE", help="suite or group name (default: all)")
    check.add_argument("--max-size", type=int, default=3, help="largest object checked (default: 3)")
    check.add_argument("--seed", type=int, default=0, help="seed for sampled checks (default: 0)")
    check.add_argument("--report", choices=("text", "records"), default="text")
    check.set_defaults(run=cmd_check)

    ev = sub.add_parser("eval", help="evaluate map expressions")
    ev.add_argument("model", help="a model file, or builtin:demo")
    ev.add_argument("-e", "--expr", action="append", required=True, help="expression (repeatable)")
    ev.add_argument("--model", dest="kind", choices=("finpar", "calg"), default="finpar")
    ev.set_defaults(run=cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "max_size", 1) < 0:
        print("rcwb: --max-size must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.run(args, sys.stdout)
    except OSError as exc:
        print(f"rcwb: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RCWBError as exc:
        print(f"rcwb: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
