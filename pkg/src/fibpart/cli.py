"""Command line front end: ``python -m fibpart <command>``.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
JSON output carries big integers as decimal strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .identities import (
    build_tables,
    residual,
    schedule_for,
    verify_counting,
    verify_lemma,
    verify_product_identity,
)
from .partitions import (
    OracleRefusal,
    ResidueRestriction,
    count_restricted_table,
    count_unrestricted_pentagonal,
    enumerate_restricted,
)

DEFAULT_CEILING = 5000

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def parse_residues(text: str) -> list[int]:
    items = [s.strip() for s in text.split(",")]
    if not text.strip() or any(not s for s in items):
        raise UsageError(f"malformed residue list: {text!r}")
    try:
        return [int(s) for s in items]
    except ValueError:
        raise UsageError(f"malformed residue list: {text!r}")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def _pos(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _check_ceiling(args, value: int, flag: str) -> None:
    if value > args.ceiling:
        raise UsageError(f"{flag} {value} exceeds the safety ceiling {args.ceiling}; pass --ceiling to raise it")


def _document(kind: str, params: dict, passed: bool, residuals, elapsed: float, **extra) -> dict:
    doc = {
        "kind": kind,
        "params": params,
        "passed": passed,
        "residuals": [{"n": n, "value": str(v)} for n, v in residuals],
        "elapsed_ms": round(elapsed * 1000.0, 3),
    }
    doc.update(extra)
    return doc


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _fmt_restriction(r: ResidueRestriction) -> str:
    return "{" + ",".join(map(str, r.sorted_forbidden())) + "}"


# each command returns (exit status, json document, text rendering, csv rendering)


def cmd_count(args):
    t0 = time.perf_counter()
    if args.forbid is not None and args.modulus is None:
        raise UsageError("--forbid requires --modulus")
    if args.modulus is None:
        r = ResidueRestriction.unrestricted()
        value = count_unrestricted_pentagonal(args.n)[args.n]
    else:
        r = ResidueRestriction(args.modulus, parse_residues(args.forbid) if args.forbid is not None else ())
        value = count_restricted_table(r, args.n)[args.n]
    passed = True
    extra = {}
    if args.oracle:
        try:
            brute = enumerate_restricted(args.n, r)
        except OracleRefusal as exc:
            raise UsageError(str(exc))
        passed = brute == value
        extra["oracle"] = str(brute)
    params = {
        "n": args.n,
        "modulus": args.modulus,
        "forbidden": r.sorted_forbidden() if args.modulus is not None else [],
    }
    doc = _document("count", params, passed, [], time.perf_counter() - t0, value=str(value), **extra)
    if args.modulus is None:
        text = f"p({args.n}) = {value}"
    else:
        text = f"p({args.n} | parts !== {_fmt_restriction(r)} (mod {args.modulus})) = {value}"
    if args.oracle:
        text += f"\noracle: {extra['oracle']} ({'agrees' if passed else 'DISAGREES'})"
    table = _csv(
        ["n", "modulus", "forbidden", "count"],
        [[args.n, args.modulus or "", " ".join(map(str, params["forbidden"])), value]],
    )
    return (EXIT_OK if passed else EXIT_FAIL), doc, text, table


def cmd_terms(args):
    t0 = time.perf_counter()
    sched = schedule_for(args.m)
    rows = [
        {"shift": t.shift, "sign": t.sign, "forbidden": t.restriction.sorted_forbidden()}
        for t in sched.terms
    ]
    params = {"m": args.m, "modulus": sched.modulus}
    doc = _document("terms", params, True, [], time.perf_counter() - t0, terms=rows)
    lines = [f"m = {args.m}, modulus = {sched.modulus}"]
    for row in rows:
        sign = "+" if row["sign"] > 0 else "-"
        res = ",".join(map(str, row["forbidden"]))
        lines.append(f"{sign} p(n - {row['shift']} | parts !== {{{res}}} (mod {sched.modulus}))")
    table = _csv(
        ["index", "shift", "sign", "modulus", "forbidden"],
        [
            [i, r["shift"], r["sign"], sched.modulus, " ".join(map(str, r["forbidden"]))]
            for i, r in enumerate(rows)
        ],
    )
    return EXIT_OK, doc, "\n".join(lines), table


def cmd_verify(args):
    _check_ceiling(args, args.max_n, "--max-n")
    t0 = time.perf_counter()
    sched = schedule_for(args.m)
    reports = []
    if args.method in ("counting", "both"):
        reports.append(verify_counting(args.m, args.max_n, schedule=sched))
    if args.method in ("series", "both"):
        reports.append(verify_product_identity(args.m, args.max_n, schedule=sched))
    passed = all(r.passed for r in reports)
    failures = []
    checks = []
    for rep in reports:
        bad = rep.failures()
        failures.extend(bad)
        checks.append(
            {
                "method": rep.method,
                "passed": rep.passed,
                "from": rep.n_range[0],
                "to": rep.n_range[1],
                "first_failing_n": rep.first_failure(),
                "residual_at_zero": None if rep.residual_at_zero is None else str(rep.residual_at_zero),
            }
        )
    failures = sorted(set(failures))
    params = {"m": args.m, "max_n": args.max_n, "method": args.method}
    first = failures[0][0] if failures else None
    doc = _document("verify", params, passed, failures, time.perf_counter() - t0,
                    checks=checks, first_failing_n=first)
    lines = []
    for c in checks:
        status = "PASS" if c["passed"] else f"FAIL (first failing n = {c['first_failing_n']})"
        line = f"m={args.m} {c['method']} n={c['from']}..{c['to']}: {status}"
        if c["residual_at_zero"] is not None:
            line += f"; residual at n=0 is {c['residual_at_zero']}"
        lines.append(line)
    for n, v in failures:
        lines.append(f"  residual({n}) = {v}")
    table = _csv(
        ["method", "passed", "from", "to", "first_failing_n", "residual_at_zero"],
        [[c["method"], c["passed"], c["from"], c["to"],
          "" if c["first_failing_n"] is None else c["first_failing_n"],
          "" if c["residual_at_zero"] is None else c["residual_at_zero"]] for c in checks],
    )
    return (EXIT_OK if passed else EXIT_FAIL), doc, "\n".join(lines), table


def cmd_lemma(args):
    _check_ceiling(args, args.order, "--order")
    rep = verify_lemma(args.k, args.order)
    failing = rep.details["failing_i"]
    params = {"k": args.k, "order": args.order}
    doc = _document("lemma", params, rep.passed, rep.failures(), rep.elapsed,
                    checked_i=rep.details["checked_i"], failing_i=failing)
    status = "PASS" if rep.passed else f"FAIL for i in {failing}"
    text = f"k={args.k} order={args.order} i=1..{2 * args.k}: {status}"
    table = _csv(
        ["k", "i", "order", "equal"],
        [[args.k, i, args.order, i not in failing] for i in rep.details["checked_i"]],
    )
    return (EXIT_OK if rep.passed else EXIT_FAIL), doc, text, table


def cmd_table(args):
    if args.n_from > args.n_to:
        raise UsageError(f"--from {args.n_from} is greater than --to {args.n_to}")
    _check_ceiling(args, args.n_to, "--to")
    t0 = time.perf_counter()
    sched = schedule_for(args.m)
    tables = build_tables(sched, args.n_to)
    rows = []
    for n in range(args.n_from, args.n_to + 1):
        counts = [tab.value(n - t.shift) for t, tab in zip(sched.terms, tables)]
        rows.append((n, counts, residual(n, sched, tables)))
    # the identity is claimed for n >= 1 only
    passed = all(res == 0 for n, _, res in rows if n >= 1)
    params = {"m": args.m, "from": args.n_from, "to": args.n_to, "modulus": sched.modulus}
    doc = _document(
        "table", params, passed, [(n, res) for n, _, res in rows], time.perf_counter() - t0,
        terms=[{"shift": t.shift, "sign": t.sign, "forbidden": t.restriction.sorted_forbidden()}
               for t in sched.terms],
        rows=[{"n": n, "counts": [str(c) for c in counts], "residual": str(res)} for n, counts, res in rows],
    )
    heads = [f"{'+' if t.sign > 0 else '-'}p(n-{t.shift}|{_fmt_restriction(t.restriction)})" for t in sched.terms]
    lines = [f"m = {args.m}, modulus = {sched.modulus}", "n\t" + "\t".join(heads) + "\tresidual"]
    for n, counts, res in rows:
        lines.append("\t".join(map(str, [n, *counts, res])))
    table = _csv(
        ["n"] + [f"term{i}_shift{t.shift}" for i, t in enumerate(sched.terms)] + ["residual"],
        [[n, *counts, res] for n, counts, res in rows],
    )
    return (EXIT_OK if passed else EXIT_FAIL), doc, "\n".join(lines), table


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibpart",
        description="Restricted partition counts and truncated pentagonal recurrences.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--ceiling", type=_nonneg, default=DEFAULT_CEILING,
                        help="refuse --max-n/--order/--to above this (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="p(n | parts !== R (mod M))")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--modulus", type=_pos)
    p.add_argument("--forbid", help="comma separated residues; M may stand for 0")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check by brute-force enumeration (bounded by PARTITION_ORACLE_BOUND)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("terms", parents=[common], help="print the term schedule for m")
    p.add_argument("--m", type=_pos, required=True)
    p.set_defaults(func=cmd_terms)

    p = sub.add_parser("verify", parents=[common], help="sweep the identity for m")
    p.add_argument("--m", type=_pos, required=True)
    p.add_argument("--max-n", dest="max_n", type=_nonneg, required=True)
    p.add_argument("--method", choices=("counting", "series", "both"), default="counting")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lemma", parents=[common], help="check the triple-product lemma for k")
    p.add_argument("--k", type=_pos, required=True)
    p.add_argument("--order", type=_nonneg, required=True)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("table", parents=[common], help="per-term counts and residuals")
    p.add_argument("--m", type=_pos, required=True)
    p.add_argument("--from", dest="n_from", type=_nonneg, required=True)
    p.add_argument("--to", dest="n_to", type=_nonneg, required=True)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        status, doc, text, table = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(doc))
    elif args.format == "csv":
        sys.stdout.write(table)
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
