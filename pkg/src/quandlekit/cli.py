"""Command line front end.

Exit codes: 0 success, 2 usage error, 3 file or parse error, 4 axiom
violation.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .census import enumerate_quandles, polynomial_classification, write_census
from .coloring import (
    counting_invariant,
    enhancement_associated,
    enhancement_gfamily,
    enumerate_colorings,
)
from .diagram import (
    DiagramStructureError,
    DiagramSyntaxError,
    R1Kink,
    R2Poke,
    apply_move,
    diagram_to_text,
    parse_diagram,
)
from .finite_algebra import (
    AxiomError,
    AxiomReport,
    FileFormatError,
    FiniteGroup,
    TableFormatError,
    parse_table_text,
    quandle_from_text,
    validate_group,
    validate_quandle,
)
from .gfamily import (
    associated_quandle,
    family_from_text,
    parse_family_blocks,
    validate_gfamily,
)
from .polynomial import (
    gfamily_polynomial,
    quandle_polynomial,
    serialize_multiset,
    serialize_poly,
)

PARSE_ERRORS = (
    FileFormatError,
    TableFormatError,
    DiagramSyntaxError,
    DiagramStructureError,
    OSError,
)


def _read(path: str) -> str:
    return Path(path).read_text()


def _report_lines(report: AxiomReport) -> list[str]:
    lines = ["invalid"]
    for name, witness in report.violations:
        lines.append(f"{name} at {witness}")
    return lines


def _report_json(report: AxiomReport) -> dict:
    return {
        "valid": report.valid,
        "violations": [
            {"axiom": name, "witness": list(witness)} for name, witness in report.violations
        ],
    }


def _cmd_verify(args) -> int:
    text = _read(args.file)
    if args.kind == "quandle":
        report = validate_quandle(parse_table_text(text))
    elif args.kind == "group":
        report = validate_group(parse_table_text(text))
    else:
        group_table, op_tables = parse_family_blocks(text)
        report = validate_group(group_table)
        if report.valid:
            group = FiniteGroup.from_table(group_table)
            report = validate_gfamily(group, op_tables)
    if args.json:
        print(json.dumps(_report_json(report)))
    elif report.valid:
        print("valid")
    else:
        print("\n".join(_report_lines(report)))
    return 0 if report.valid else 4


def _cmd_poly(args) -> int:
    text = _read(args.file)
    if args.kind == "quandle":
        value = quandle_polynomial(quandle_from_text(text))
    elif args.kind == "gfamily":
        value = gfamily_polynomial(family_from_text(text))
    else:
        value = quandle_polynomial(associated_quandle(family_from_text(text)).quandle)
    out = serialize_poly(value)
    print(json.dumps({"polynomial": out}) if args.json else out)
    return 0


def _cmd_color(args) -> int:
    family = family_from_text(_read(args.family))
    diag = parse_diagram(_read(args.diagram))
    colorings = enumerate_colorings(family, diag)
    if args.count:
        print(json.dumps({"count": len(colorings)}) if args.json else len(colorings))
        return 0
    if args.json:
        payload = {
            "count": len(colorings),
            "colorings": [
                [[arc, g, x] for arc, (g, x) in zip(c.arcs, c.pairs)] for c in colorings
            ],
        }
        print(json.dumps(payload))
    else:
        for c in colorings:
            print(" ".join(f"{arc}:({g},{x})" for arc, (g, x) in zip(c.arcs, c.pairs)))
    return 0


def _cmd_invariant(args) -> int:
    family = family_from_text(_read(args.family))
    diag = parse_diagram(_read(args.diagram))
    if args.mode == "counting":
        value = counting_invariant(family, diag)
        print(json.dumps({"mode": args.mode, "value": value}) if args.json else value)
        return 0
    ms = (
        enhancement_gfamily(family, diag)
        if args.mode == "gfamily"
        else enhancement_associated(family, diag)
    )
    if args.json:
        payload = {
            "mode": args.mode,
            "value": serialize_multiset(ms),
            "entries": [
                {"multiplicity": mult, "polynomial": serialize_poly(v)}
                for v, mult in ms.entries
            ],
        }
        print(json.dumps(payload))
    else:
        print(serialize_multiset(ms))
    return 0


def _parse_r1(spec: str) -> R1Kink:
    parts = spec.split(":")
    if len(parts) > 2:
        raise argparse.ArgumentTypeError(f"expected ARC or ARC:SIGN, got {spec!r}")
    try:
        arc = int(parts[0])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad arc in {spec!r}") from None
    sign = 1
    if len(parts) == 2:
        if parts[1] not in ("+", "-"):
            raise argparse.ArgumentTypeError(f"sign must be + or -, got {parts[1]!r}")
        sign = 1 if parts[1] == "+" else -1
    return R1Kink(arc, sign)


def _parse_r2(spec: str) -> R2Poke:
    parts = spec.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected ARC,ARC, got {spec!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad arcs in {spec!r}") from None
    return R2Poke(a, b)


def _cmd_moves(args) -> int:
    diag = parse_diagram(_read(args.diagram))
    move = args.r1 if args.r1 is not None else args.r2
    try:
        moved = apply_move(diag, move)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    out = diagram_to_text(moved)
    if args.json:
        print(json.dumps({"diagram": out}))
    else:
        sys.stdout.write(out)
    return 0


def _cmd_census(args) -> int:
    entries = enumerate_quandles(args.n)
    report = polynomial_classification(args.n) if args.classify else None
    if args.out:
        write_census(args.n, args.out)
    if args.json:
        payload = {
            "order": args.n,
            "classes": len(entries),
            "entries": [
                {"canonical_form": e.canonical_form, "polynomial": serialize_poly(e.polynomial)}
                for e in entries
            ],
        }
        if report is not None:
            payload["classification"] = {
                "injective": report.injective,
                "collisions": [list(pair) for pair in report.collisions],
            }
        print(json.dumps(payload))
        return 0
    print(f"classes: {len(entries)}")
    for i, e in enumerate(entries, start=1):
        print(f"{i}: {serialize_poly(e.polynomial)}")
    if report is not None:
        if report.injective:
            print("classification: injective")
        else:
            print("classification: collisions")
            for i, j in report.collisions:
                print(f"collision: {i} {j}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quandlekit",
        description="Quandle and G-family invariants of knotted trivalent graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check a table file against the axioms")
    p.add_argument("kind", choices=("quandle", "group", "gfamily"))
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("poly", help="polynomial of a quandle, family or associated quandle")
    p.add_argument("kind", choices=("quandle", "gfamily", "associated"))
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_poly)

    p = sub.add_parser("color", help="enumerate diagram colorings by a family")
    p.add_argument("family")
    p.add_argument("diagram")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("invariant", help="counting invariant or an enhancement")
    p.add_argument("--mode", required=True, choices=("counting", "gfamily", "associated"))
    p.add_argument("family")
    p.add_argument("diagram")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_invariant)

    p = sub.add_parser("moves", help="apply a complexity-increasing move to a diagram")
    p.add_argument("diagram")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--r1", metavar="ARC[:SIGN]", type=_parse_r1)
    mode.add_argument("--r2", metavar="ARC,ARC", type=_parse_r2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_moves)

    p = sub.add_parser("census", help="enumerate quandle classes of one order")
    p.add_argument("n", type=int)
    p.add_argument("--classify", action="store_true")
    p.add_argument("--out", metavar="DIR")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "census" and not 0 <= args.n <= 6:
        parser.error("census order must be between 0 and 6")
    try:
        return args.func(args)
    except PARSE_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except AxiomError as e:
        print(f"error: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
