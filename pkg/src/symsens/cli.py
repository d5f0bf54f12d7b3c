"""Command-line front end.

    symsens analyze 1110
    symsens analyze --file table.txt
    symsens table 3
    symsens census 10 --format csv --verify
    symsens count --max-n 64 --format json

Exit codes: 0 success, 1 usage error, 2 verification failure (including a
non-symmetric truth table given to ``analyze``), 3 size error.
"""

from __future__ import annotations

import argparse
import json
import sys

from symsens import counting, distribution
from symsens.brute import read_truth_table
from symsens.core import (
    CompactTruthTable,
    compress,
    has_max_sensitivity,
    is_trivial,
    sensitivity_profile,
    symmetry_witness,
    to_composition,
)
from symsens.errors import FormatError, SizeError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_SIZE = 3

FORMATS = ("table", "csv", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _kv_block(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "".join(f"{k:<{width}}  {v}\n" for k, v in pairs)


def _vector(index: int, n: int) -> str:
    return "".join(str((index >> i) & 1) for i in range(n))


def analyze_report(c: CompactTruthTable) -> dict:
    profile = sensitivity_profile(c)
    return {
        "n": c.n,
        "compact_truth_table": str(c),
        "composition": str(to_composition(c)),
        "per_weight": list(profile.per_weight),
        "sensitivity": profile.max,
        "max_sensitivity": has_max_sensitivity(c),
        "trivial": is_trivial(c),
    }


def cmd_analyze(args) -> tuple[str, int]:
    if (args.input is None) == (args.file is None):
        raise UsageError("give exactly one of a compact bit string or --file PATH")
    if args.input is not None:
        try:
            c = CompactTruthTable.parse(args.input)
        except FormatError as exc:
            raise UsageError(str(exc)) from None
    else:
        try:
            table = read_truth_table(args.file, cap=args.cap)
        except (OSError, FormatError) as exc:
            raise UsageError(str(exc)) from None
        c = compress(table)
        if c is None:
            i, j = symmetry_witness(table)
            report = {
                "n": table.n,
                "symmetric": False,
                "witness": [
                    {"index": i, "input": _vector(i, table.n), "value": table[i]},
                    {"index": j, "input": _vector(j, table.n), "value": table[j]},
                ],
            }
            if args.format == "json":
                return json.dumps(report) + "\n", EXIT_VERIFY
            if args.format == "csv":
                text = "symmetric,index,input,value\n" + "".join(
                    f"false,{w['index']},{w['input']},{w['value']}\n" for w in report["witness"]
                )
                return text, EXIT_VERIFY
            a, b = report["witness"]
            return (
                f"not symmetric: inputs x1..x{table.n} = {a['input']} and {b['input']} "
                f"have equal weight but f = {a['value']} vs {b['value']}\n",
                EXIT_VERIFY,
            )
    report = analyze_report(c)
    if args.format == "json":
        return json.dumps(report) + "\n", EXIT_OK
    if args.format == "csv":
        head = "n,compact_truth_table,composition,per_weight,sensitivity,max_sensitivity,trivial\n"
        row = (
            f"{report['n']},{report['compact_truth_table']},{report['composition']},"
            f"{' '.join(map(str, report['per_weight']))},{report['sensitivity']},"
            f"{str(report['max_sensitivity']).lower()},{str(report['trivial']).lower()}\n"
        )
        return head + row, EXIT_OK
    text = _kv_block(
        [
            ("n", report["n"]),
            ("compact truth table", report["compact_truth_table"]),
            ("composition", report["composition"]),
            ("per-weight sensitivity", " ".join(map(str, report["per_weight"]))),
            ("sensitivity", report["sensitivity"]),
            ("max sensitivity (s = n)", _yes(report["max_sensitivity"])),
            ("trivial", _yes(report["trivial"])),
        ]
    )
    return text, EXIT_OK


def render_table(n: int, fmt: str = "table") -> str:
    rows = [(str(c), str(comp), s) for c, comp, s in distribution.table_rows(n)]
    if fmt == "csv":
        return "compact_truth_table,composition,sensitivity\n" + "".join(
            f"{c},{comp},{s}\n" for c, comp, s in rows
        )
    if fmt == "json":
        return json.dumps(
            [{"compact_truth_table": c, "composition": comp, "sensitivity": s} for c, comp, s in rows]
        ) + "\n"
    bits_w = max(len("compact"), 2 * (n + 1) - 1)
    comp_w = max(len("composition"), max(len(comp) for _, comp, _ in rows))
    lines = [f"{'compact':<{bits_w}}  {'composition':>{comp_w}}  sensitivity"]
    for c, comp, s in rows:
        lines.append(f"{' '.join(c):<{bits_w}}  {comp:>{comp_w}}  {s}")
    return "\n".join(lines) + "\n"


def cmd_table(args) -> tuple[str, int]:
    return render_table(args.n, args.format), EXIT_OK


def _verification_lines(n: int, workers, cap) -> tuple[list[str], bool]:
    th = distribution.verify_theorem1(n, workers=workers, cap=cap)
    tu = distribution.verify_turan(n, workers=workers, cap=cap)
    expected = counting.max_sensitivity_count(n)
    count_ok = th.max_sensitivity_count == expected
    lines = [
        f"{'PASS' if th else 'FAIL'} shortest part 1 <=> s = n "
        f"({th.counterexamples} counterexamples)",
        f"{'PASS' if count_ok else 'FAIL'} census count of s = n is {th.max_sensitivity_count}, "
        f"recurrence gives {expected}",
        f"{'PASS' if tu else 'FAIL'} non-trivial sensitivity >= {tu.bound} "
        f"(minimum {tu.min_nontrivial}, attained by {tu.witness})",
    ]
    return lines, bool(th) and count_ok and bool(tu)


def cmd_census(args) -> tuple[str, int]:
    hist = distribution.census(args.n, workers=args.workers, cap=args.cap)
    if args.format == "csv":
        text = hist.to_csv()
    elif args.format == "json":
        text = hist.to_json() + "\n"
    else:
        pairs = [(f"s = {s}", c) for s, c in hist.nonzero().items()]
        text = f"n = {hist.n}, total = {hist.total}\n" + _kv_block(pairs)
    status = EXIT_OK
    if args.verify:
        lines, ok = _verification_lines(args.n, args.workers, args.cap)
        report = "".join(line + "\n" for line in lines)
        if args.format == "table":
            text += report
        else:
            sys.stderr.write(report)
        status = EXIT_OK if ok else EXIT_VERIFY
    return text, status


def cmd_count(args) -> tuple[str, int]:
    max_n = args.max_n
    if max_n < 1:
        raise UsageError("--max-n must be at least 1")
    series = counting.count_series(max_n)
    if args.format == "csv":
        return series.to_csv(), EXIT_OK
    if args.format == "json":
        return json.dumps({"max_n": max_n, "rows": series.to_records()}) + "\n", EXIT_OK
    rows = [
        (str(n), str(t), str(no), str(a), f"{r.numerator}/{r.denominator}", counting.to_decimal(r, 12))
        for n, t, no, a, r in series.rows()
    ]
    header = ("n", "total", "no_ones", "max_sens", "ratio", "ratio (12 places)")
    widths = [max(len(h), *(len(row[i]) for row in rows)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in rows]
    return "\n".join(lines) + "\n", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    capped = argparse.ArgumentParser(add_help=False)
    capped.add_argument("--cap", type=int, help="override the size cap (needs --i-know-the-cost)")
    capped.add_argument("--i-know-the-cost", dest="ack_cost", action="store_true")

    parser = _Parser(prog="symsens", description="Sensitivity of symmetric Boolean functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common, capped], help="analyze one function")
    p.add_argument("input", nargs="?", help="compact truth table as a bit string, v_0 first")
    p.add_argument("--file", help="full truth table file ('n=' header, then bits or 0x hex)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table", parents=[common], help="list every function of n variables (n <= 6)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("census", parents=[common, capped], help="histogram of sensitivities")
    p.add_argument("n", type=int)
    p.add_argument("--verify", action="store_true", help="also check the s = n criterion and the lower bound")
    p.add_argument("--workers", type=int, default=None, help="threads for the scan (default: CPU count)")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("count", parents=[common], help="exact counts T_n, N_n, a_n")
    p.add_argument("--max-n", type=int, default=20)
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if getattr(args, "cap", None) is not None and not args.ack_cost:
        print("symsens: error: --cap requires --i-know-the-cost", file=sys.stderr)
        return EXIT_USAGE
    if getattr(args, "n", 1) < 1:
        print("symsens: error: n must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        text, status = args.func(args)
    except UsageError as exc:
        print(f"symsens: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeError as exc:
        print(f"symsens: size error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
