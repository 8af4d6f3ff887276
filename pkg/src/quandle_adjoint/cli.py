"""Command line front end.

A thin client over the report builders: parses arguments, loads the
structured input (inline JSON or a file path, optionally prefixed with
@), renders the resulting document, and maps outcomes to exit codes:

  0  success
  1  a verification suite or scan cross-check failed
  2  invalid input
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .errors import InvalidInputSpec, QuandleAdjointError
from .quandle import DEFAULT_TABLE_CAP
from .reports import (
    DEFAULT_SCAN_CAP,
    info_report,
    parse_input_spec,
    scan_report,
    snf_report,
    verify_report,
)

SCAN_COLUMNS = ("p", "a", "b", "connected", "s_factors", "simply_connected", "formula_value")


def _load_document(arg: str):
    """Inline JSON, or a path to a JSON file (an @ prefix forces a path)."""
    text = arg
    if arg.startswith("@"):
        path = Path(arg[1:])
        if not path.is_file():
            raise InvalidInputSpec(f"no such file: {path}")
        text = path.read_text()
    else:
        stripped = arg.strip()
        if not (stripped.startswith("{") or stripped.startswith("[")):
            path = Path(arg)
            if not path.is_file():
                raise InvalidInputSpec(f"not inline JSON and no such file: {arg}")
            text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputSpec(f"invalid JSON: {exc}") from exc


def _json_value(v) -> str:
    return json.dumps(v)


def _render_flat_table(doc: dict) -> str:
    width = max(len(k) for k in doc) + 1
    lines = [f"{k + ':':<{width}} {_json_value(v)}" for k, v in doc.items()]
    return "\n".join(lines) + "\n"


def _render_flat_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(doc.keys())
    writer.writerow([_csv_cell(v) for v in doc.values()])
    return buf.getvalue()


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    if isinstance(v, (list, tuple)):
        return ";".join(str(x) for x in v)
    return str(v)


def _render_json(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _render_verify_table(doc: dict) -> str:
    lines = []
    for c in doc["checks"]:
        if c["skipped"]:
            status = "SKIP"
        else:
            status = "PASS" if c["passed"] else "FAIL"
        line = f"{status:<5} {c['name']:<34} checked={c['checked']}"
        if not c["asserted"] and not c["skipped"]:
            line += "  (recorded, not asserted)"
        if c.get("note"):
            line += f"  ({c['note']})"
        if c.get("counterexample"):
            line += f"  counterexample: {c['counterexample']}"
        lines.append(line)
    lines.append(f"result: {'PASS' if doc['passed'] else 'FAIL'}")
    return "\n".join(lines) + "\n"


def _render_verify_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("name", "passed", "asserted", "skipped", "checked", "counterexample"))
    for c in doc["checks"]:
        writer.writerow((
            c["name"],
            _csv_cell(c["passed"]),
            _csv_cell(c["asserted"]),
            _csv_cell(c["skipped"]),
            c["checked"],
            c["counterexample"] or "",
        ))
    return buf.getvalue()


def _render_scan_table(doc: dict) -> str:
    header = f"{'p':>3} {'a':>3} {'b':>3} {'connected':>9} {'s_factors':>10} {'simply_connected':>16} {'formula_value':>13}"
    lines = [header]
    for r in doc["records"]:
        lines.append(
            f"{r['p']:>3} {r['a']:>3} {r['b']:>3} {_csv_cell(r['connected']):>9} "
            f"{_csv_cell(r['s_factors']) or '-':>10} {_csv_cell(r['simply_connected']):>16} "
            f"{r['formula_value']:>13}"
        )
    lines.append(f"formula_agrees: {_csv_cell(doc['formula_agrees'])}")
    return "\n".join(lines) + "\n"


def _render_scan_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SCAN_COLUMNS)
    for r in doc["records"]:
        writer.writerow([_csv_cell(r[col]) for col in SCAN_COLUMNS])
    return buf.getvalue()


def _render_snf_table(doc: dict) -> str:
    lines = [f"diagonal: {doc['diagonal']}"]
    for label in ("d", "u", "v"):
        lines.append(f"{label}:")
        for row in doc[label]:
            lines.append("  " + " ".join(f"{x:>4}" for x in row))
    return "\n".join(lines) + "\n"


def _render_snf_csv(doc: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in doc["d"]:
        writer.writerow(row)
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandle-adjoint",
        description="Adjoint and fundamental groups of finite Alexander quandles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "csv", "json"), default="table")

    p_info = sub.add_parser("info", help="invariants of one quandle")
    p_info.add_argument("spec", help="inline JSON document or a path (@path forces a file)")
    add_format(p_info)

    p_verify = sub.add_parser("verify", help="run the verification suites")
    p_verify.add_argument("spec", help="inline JSON document or a path")
    add_format(p_verify)
    p_verify.add_argument("--depth", choices=("quick", "full"), default="full")
    p_verify.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    p_verify.add_argument("--cap", type=int, default=DEFAULT_TABLE_CAP,
                          help="element-count cap for table-based checks")

    p_scan = sub.add_parser("scan", help="scan all quadratic quandles over a prime field")
    p_scan.add_argument("prime", type=int)
    add_format(p_scan)
    p_scan.add_argument("--cap", type=int, default=DEFAULT_SCAN_CAP,
                        help="largest admissible prime")

    p_snf = sub.add_parser("snf", help="print the Smith normal form of a matrix")
    p_snf.add_argument("matrix", help="inline JSON matrix or a path")
    add_format(p_snf)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "info":
            spec = parse_input_spec(_load_document(args.spec))
            doc = info_report(spec)
            out = {
                "table": _render_flat_table,
                "csv": _render_flat_csv,
                "json": _render_json,
            }[args.format](doc)
            sys.stdout.write(out)
            return 0
        if args.command == "verify":
            spec = parse_input_spec(_load_document(args.spec))
            doc = verify_report(spec, depth=args.depth, seed=args.seed, cap=args.cap)
            out = {
                "table": _render_verify_table,
                "csv": _render_verify_csv,
                "json": _render_json,
            }[args.format](doc)
            sys.stdout.write(out)
            return 0 if doc["passed"] else 1
        if args.command == "scan":
            doc = scan_report(args.prime, cap=args.cap)
            out = {
                "table": _render_scan_table,
                "csv": _render_scan_csv,
                "json": _render_json,
            }[args.format](doc)
            sys.stdout.write(out)
            if not doc["formula_agrees"]:
                for m in doc["mismatches"]:
                    print(f"mismatch: {m}", file=sys.stderr)
                return 1
            return 0
        if args.command == "snf":
            matrix = _load_document(args.matrix)
            doc = snf_report(matrix)
            out = {
                "table": _render_snf_table,
                "csv": _render_snf_csv,
                "json": _render_json,
            }[args.format](doc)
            sys.stdout.write(out)
            return 0
    except InvalidInputSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QuandleAdjointError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


def entry() -> None:
    sys.exit(main())
