"""Command-line front end: ``octf8 {table,phi,orbits,order,verify,f4}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from contextlib import nullcontext

from . import algebra, cocycle, codes, gf8, orders, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def render_grid(header: list[str], rows: list[list[str]], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    width = max(len(c) for c in header + [c for r in rows for c in r])
    lines = [" ".join(c.rjust(width) for c in header)]
    lines += [" ".join(c.rjust(width) for c in r) for r in rows]
    return "\n".join(lines) + "\n"


def cmd_table(fmt: str) -> tuple[str, int]:
    try:
        table = algebra.standard_table()
    except algebra.TableMismatch as exc:
        print(f"table check failed: {exc}", file=sys.stderr)
        return "", EXIT_FAIL
    labels = algebra.LABELS
    if fmt == "json":
        cells = [
            [
                {"index": algebra.label_index(table[i, j][0]), "sign": table[i, j][1]}
                for j in labels
            ]
            for i in labels
        ]
        obj = {"rows": [algebra.label_index(i) for i in labels], "table": cells}
        return dump_json(obj), EXIT_OK
    names = [algebra.label_name(j) for j in labels]
    rows = [[names[r]] + [algebra.cell_text(*table[i, j]) for j in labels] for r, i in enumerate(labels)]
    out = render_grid([""] + names, rows, fmt)
    if fmt == "text":
        out += "(e_0 = e_7 = e^1; e_∞ = e^0 is the identity)\n"
    return out, EXIT_OK


def cmd_phi(fmt: str) -> tuple[str, int]:
    matrix = [[cocycle.phi(x, y) for y in gf8.ELEMENTS] for x in gf8.ELEMENTS]
    if fmt == "json":
        return dump_json({"phi": matrix}), EXIT_OK
    header = ["x\\y"] + [str(y) for y in gf8.ELEMENTS]
    rows = [[str(x)] + [str(b) for b in row] for x, row in enumerate(matrix)]
    return render_grid(header, rows, fmt), EXIT_OK


def _orbit_rows():
    for o in codes.orbit_decomposition():
        yield o, orders.conway_smith_name(o)


def cmd_orbits(fmt: str) -> tuple[str, int]:
    if fmt == "json":
        obj = [dict(o.to_json(), size=len(o), name=name) for o, name in _orbit_rows()]
        return dump_json({"orbits": obj}), EXIT_OK
    header = ["kind", "label", "size", "name", "members"]
    rows = [
        [o.kind, o.label_text() or "-", str(len(o)), name, " ".join(codes.hex_mask(m) for m in o)]
        for o, name in _orbit_rows()
    ]
    if fmt == "csv":
        return render_grid(header, rows, fmt), EXIT_OK
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + rows]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_order(selector: str, fmt: str) -> tuple[str, int]:
    try:
        order = orders.find_order(selector)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return "", EXIT_USAGE
    obj = orders.order_to_json(order)
    status = EXIT_OK if obj["closure"] == obj["generated_check"] == "pass" else EXIT_FAIL
    if fmt == "json":
        return dump_json(obj), status
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for key in ("name", "family", "determinant", "even", "unit_count", "closure", "generated_check"):
            writer.writerow([key, obj[key]])
        writer.writerow(["code"] + obj["code"])
        for i, row in enumerate(obj["basis"]):
            writer.writerow([f"basis{i}"] + row)
        for i, row in enumerate(obj["gram"]):
            writer.writerow([f"gram{i}"] + row)
        return buf.getvalue(), status
    lines = [
        f"order        {obj['name']} ({obj['family']})",
        f"orbit        {obj['orbit']['kind']} {' '.join(obj['orbit']['members'])}",
        f"code         {' '.join(obj['code'])}",
        f"determinant  {obj['determinant']}",
        f"even         {obj['even']}",
        f"units        {obj['unit_count']}",
        f"closure      {obj['closure']}",
        f"generated    {obj['generated_check']}",
        "basis (coefficients at field index 0..7)",
    ]
    lines += ["  " + " ".join(v.rjust(5) for v in row) for row in obj["basis"]]
    lines.append("gram")
    lines += ["  " + " ".join(str(v).rjust(3) for v in row) for row in obj["gram"]]
    return "\n".join(lines) + "\n", status


def cmd_verify(seed: int, fmt: str, flip: tuple[int, int] | None = None) -> tuple[str, int]:
    ctx = cocycle.flipped_phi(*flip) if flip else nullcontext()
    with ctx:
        outcomes = verify.run_checks(seed)
    status = EXIT_OK if all(o.passed for o in outcomes) else EXIT_FAIL
    if fmt == "json":
        obj = {
            "seed": seed,
            "passed": status == EXIT_OK,
            "checks": [{"name": o.name, "passed": o.passed, "detail": o.detail} for o in outcomes],
        }
        return dump_json(obj), status
    rows = [[o.name, "pass" if o.passed else "FAIL", o.detail] for o in outcomes]
    if fmt == "csv":
        return render_grid(["check", "result", "detail"], rows, fmt), status
    width = max(len(r[0]) for r in rows)
    lines = [f"{r[1]:4}  {r[0].ljust(width)}  {r[2]}" for r in rows]
    lines.append(f"seed {seed}: {'all checks passed' if status == EXIT_OK else 'FAILURES'}")
    return "\n".join(lines) + "\n", status


def cmd_f4(fmt: str) -> tuple[str, int]:
    report = algebra.check_f4_remark()
    status = EXIT_OK if report.passed else EXIT_FAIL
    names = ["e^0", "e^1", "e^w", "e^w2"]
    if fmt == "json":
        obj = {
            "table": [[{"index": report.table[x, y][0], "sign": report.table[x, y][1]} for y in range(4)] for x in range(4)],
            "laws": report.laws,
        }
        return dump_json(obj), status

    def cell(x, y):
        k, s = report.table[x, y]
        return ("-" if s < 0 else "") + names[k]

    rows = [[names[x]] + [cell(x, y) for y in range(4)] for x in range(4)]
    out = render_grid([""] + names, rows, fmt)
    if fmt == "csv":
        return out, status
    out += "".join(f"{'pass' if v else 'FAIL'}  {k}\n" for k, v in report.laws.items())
    return out, status


def _flip(text: str) -> tuple[int, int]:
    x, y = (int(v) for v in text.split(","))
    if not (0 <= x < 8 and 0 <= y < 8):
        raise argparse.ArgumentTypeError("indices must be in 0..7")
    return x, y


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="octf8", description="Octonions over F8: tables, orders, checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="multiplication table of e_inf, e_1, ..., e_7")
    sub.add_parser("phi", parents=[common], help="8x8 matrix of phi(x, y)")
    sub.add_parser("orbits", parents=[common], help="the 16 translation orbits in H")
    p = sub.add_parser("order", parents=[common], help="certificate for one integral order")
    p.add_argument("selector", nargs="?", help="order name, slug or orbit label")
    p.add_argument("--order", dest="order_opt", help="same as the positional selector")
    p = sub.add_parser("verify", parents=[common], help="run every check")
    p.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    p.add_argument("--flip-phi", type=_flip, default=None, help=argparse.SUPPRESS)
    sub.add_parser("f4", parents=[common], help="the analogous F4 construction")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    fmt = args.format
    if args.command == "table":
        out, status = cmd_table(fmt)
    elif args.command == "phi":
        out, status = cmd_phi(fmt)
    elif args.command == "orbits":
        out, status = cmd_orbits(fmt)
    elif args.command == "order":
        selector = args.selector or args.order_opt
        if not selector:
            parser.print_usage(sys.stderr)
            print("order: a selector is required", file=sys.stderr)
            return EXIT_USAGE
        out, status = cmd_order(selector, fmt)
    elif args.command == "verify":
        out, status = cmd_verify(args.seed, fmt, args.flip_phi)
    else:
        out, status = cmd_f4(fmt)
    sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
