"""Command-line front end: reports, bijection dumps, and the verify suite."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .affine import enumerate_minuscule
from .dynkin import closed_form_polynomial, diagram_of, evaluate, subset_polynomial
from .errors import InvalidType, WrongType
from .good_bijection import interval_of_root, phi_a, phi_c
from .ideals import enumerate_abelian_ideals, generators, kappa, roots_of, upper_covering_polynomial
from .normalizer import levi_of_normalizer
from .rootsys import TypeSpec, build_root_system, coeff_string
from .verify import render_table_a3, run_all

SCHEMA = 1


@dataclass
class Report:
    format: str
    payload: str
    exit_code: int


def _parse_type(text: str) -> TypeSpec:
    return TypeSpec.parse(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abideals",
        description="Exact combinatorics of abelian Borel ideals and Dynkin diagram subsets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_roots = sub.add_parser("roots", help="positive roots with coefficient vectors")
    p_roots.add_argument("type")
    p_roots.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p_ideals = sub.add_parser("ideals", help="all abelian ideals with generators and kappa")
    p_ideals.add_argument("type")
    p_ideals.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p_poly = sub.add_parser("poly", help="covering/subset polynomials")
    p_poly.add_argument("type")
    p_poly.add_argument("--source", choices=("ideals", "dynkin", "closed", "all"), default="all")
    p_poly.add_argument("--at", type=int, default=None, metavar="Q", help="also evaluate at an integer")
    p_poly.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p_bij = sub.add_parser("bijection", help="full ideal-to-subset mapping table")
    p_bij.add_argument("type")
    p_bij.add_argument("--method", choices=("good", "minuscule", "normalizer"), required=True)
    p_bij.add_argument("--format", choices=("text", "json", "csv"), default="text")

    sub.add_parser("table-a3", help="the three-bijection comparison table for A3")

    p_verify = sub.add_parser("verify", help="run the full verification suite")
    p_verify.add_argument(
        "--max-rank",
        type=int,
        default=8,
        help="rank cap for the type sweep; the A-series bijection check runs two past it",
    )
    p_verify.add_argument("--types", default=None, help="comma-separated list such as A3,C2")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _csv_payload(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _cmd_roots(args) -> Report:
    rs = build_root_system(_parse_type(args.type))
    roots = rs.positive_roots
    if args.format == "json":
        payload = json.dumps(
            {
                "schema": SCHEMA,
                "type": str(rs.type),
                "count": len(roots),
                "positive_roots": [coeff_string(r.coeffs) for r in roots],
            },
            indent=2,
        )
    elif args.format == "csv":
        payload = _csv_payload(
            ["index", "coeffs", "height"],
            [[str(i), coeff_string(r.coeffs), str(r.height)] for i, r in enumerate(roots)],
        )
    else:
        lines = [f"{rs.type}: {len(roots)} positive roots"]
        lines += [coeff_string(r.coeffs) for r in roots]
        payload = "\n".join(lines)
    return Report(args.format, payload, 0)


def _gens_strings(rs, ideal) -> list[str]:
    return sorted((coeff_string(g.coeffs) for g in generators(rs, ideal)), reverse=True)


def _cmd_ideals(args) -> Report:
    rs = build_root_system(_parse_type(args.type))
    rows = []
    for ideal in enumerate_abelian_ideals(rs):
        rows.append(
            {
                "roots": [coeff_string(r.coeffs) for r in roots_of(rs, ideal)],
                "generators": _gens_strings(rs, ideal),
                "kappa": kappa(rs, ideal),
            }
        )
    if args.format == "json":
        payload = json.dumps(
            {"schema": SCHEMA, "type": str(rs.type), "ideals": rows}, indent=2
        )
    elif args.format == "csv":
        payload = _csv_payload(
            ["index", "kappa", "generators", "roots"],
            [
                [str(i), str(row["kappa"]), ";".join(row["generators"]), ";".join(row["roots"])]
                for i, row in enumerate(rows)
            ],
        )
    else:
        lines = [f"{rs.type}: {len(rows)} abelian ideals"]
        for row in rows:
            gens = ",".join(row["generators"])
            roots = ",".join(row["roots"])
            lines.append(f"kappa={row['kappa']} generators={{{gens}}} roots={{{roots}}}")
        payload = "\n".join(lines)
    return Report(args.format, payload, 0)


def _cmd_poly(args) -> Report:
    spec = _parse_type(args.type)
    rs = build_root_system(spec)
    sources = {
        "ideals": lambda: upper_covering_polynomial(rs),
        "dynkin": lambda: subset_polynomial(diagram_of(rs)),
        "closed_form": lambda: closed_form_polynomial(spec),
    }
    if args.source == "all":
        wanted = ("ideals", "dynkin", "closed_form")
    else:
        wanted = ("closed_form" if args.source == "closed" else args.source,)
    entries = []
    for name in wanted:
        p = sources[name]()
        entry = {"type": str(spec), "source": name, "coeffs": list(p.coeffs)}
        if args.at is not None:
            entry["at"] = args.at
            entry["value"] = evaluate(p, args.at)
        entries.append((entry, p))
    if args.format == "json":
        payload = json.dumps({"schema": SCHEMA, "polynomials": [e for e, _ in entries]}, indent=2)
    elif args.format == "csv":
        header = ["type", "source", "coeffs"] + (["at", "value"] if args.at is not None else [])
        rows = []
        for entry, _ in entries:
            row = [entry["type"], entry["source"], ";".join(map(str, entry["coeffs"]))]
            if args.at is not None:
                row += [str(entry["at"]), str(entry["value"])]
            rows.append(row)
        payload = _csv_payload(header, rows)
    else:
        lines = []
        for entry, p in entries:
            line = f"{entry['source']}: {p}"
            if args.at is not None:
                line += f" | at {args.at}: {entry['value']}"
            lines.append(line)
        payload = "\n".join(lines)
    return Report(args.format, payload, 0)


def _bijection_rows(rs, method: str) -> list[dict]:
    rows = []
    if method == "minuscule":
        for rec in enumerate_minuscule(rs):
            rows.append(
                {
                    "generators": _gens_strings(rs, rec.ideal),
                    "z": list(rec.z.coeffs),
                    "z_mod2": "".join(str(m % 2) for m in rec.z.coeffs),
                    "s_subset": sorted(rec.s_subset),
                    "word": list(rec.element.word),
                }
            )
        return rows
    for ideal in enumerate_abelian_ideals(rs):
        if method == "good":
            mapper = phi_a if rs.type.series == "A" else phi_c
            rows.append(
                {
                    "generators": _gens_strings(rs, ideal),
                    "kappa": kappa(rs, ideal),
                    "phi": sorted(mapper(rs, ideal)),
                }
            )
        else:
            rows.append(
                {
                    "generators": _gens_strings(rs, ideal),
                    "levi": sorted(levi_of_normalizer(rs, ideal)),
                }
            )
    return rows


def _interval_strings(rs, ideal) -> list[str]:
    ivs = sorted((interval_of_root(g) for g in generators(rs, ideal)), key=lambda v: v.lo)
    return [str(iv) for iv in ivs]


def _cmd_bijection(args) -> Report:
    spec = _parse_type(args.type)
    rs = build_root_system(spec)
    if args.method == "good" and spec.series not in ("A", "C"):
        raise WrongType(f"--method good needs type A or C, got {spec}")
    rows = _bijection_rows(rs, args.method)
    if args.format == "json":
        payload = json.dumps(
            {"schema": SCHEMA, "type": str(spec), "method": args.method, "rows": rows},
            indent=2,
        )
    elif args.format == "csv":
        if args.method == "good":
            header = ["generators", "kappa", "phi"]
            ideals_seq = enumerate_abelian_ideals(rs)
            body = []
            for ideal, row in zip(ideals_seq, rows):
                gens = (
                    ";".join(_interval_strings(rs, ideal))
                    if spec.series == "A"
                    else ";".join(row["generators"])
                )
                body.append([gens, str(row["kappa"]), ";".join(map(str, row["phi"]))])
        elif args.method == "minuscule":
            header = ["generators", "z", "z_mod2", "s_subset", "word"]
            body = [
                [
                    ";".join(row["generators"]),
                    ";".join(map(str, row["z"])),
                    row["z_mod2"],
                    ";".join(map(str, row["s_subset"])),
                    ";".join(map(str, row["word"])),
                ]
                for row in rows
            ]
        else:
            header = ["generators", "levi"]
            body = [
                [";".join(row["generators"]), ";".join(map(str, row["levi"]))] for row in rows
            ]
        payload = _csv_payload(header, body)
    else:
        lines = [f"{spec} bijection via {args.method}: {len(rows)} ideals"]
        for row in rows:
            gens = ",".join(row["generators"])
            if args.method == "good":
                phi = ",".join(map(str, row["phi"]))
                lines.append(f"generators={{{gens}}} kappa={row['kappa']} phi={{{phi}}}")
            elif args.method == "minuscule":
                s = ",".join(map(str, row["s_subset"]))
                word = ",".join(map(str, row["word"]))
                lines.append(
                    f"generators={{{gens}}} z={coeff_string(row['z'])} "
                    f"z_mod2={row['z_mod2']} s_subset={{{s}}} word=[{word}]"
                )
            else:
                levi = ",".join(map(str, row["levi"]))
                lines.append(f"generators={{{gens}}} levi={{{levi}}}")
        payload = "\n".join(lines)
    return Report(args.format, payload, 0)


def _cmd_verify(args) -> Report:
    types = None
    if args.types is not None:
        types = [_parse_type(t) for t in args.types.split(",") if t.strip()]
    results = run_all(max_rank=args.max_rank, types=types)
    ok = all(r.passed for r in results)
    if args.format == "json":
        payload = json.dumps(
            {
                "schema": SCHEMA,
                "passed": ok,
                "results": [
                    {
                        "criterion": r.criterion,
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                    }
                    for r in results
                ],
            },
            indent=2,
        )
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"[{status}] criterion {r.criterion} {r.name}: {r.detail}")
        lines.append(f"{'all checks passed' if ok else 'VERIFICATION FAILED'}")
        payload = "\n".join(lines)
    return Report(args.format, payload, 0 if ok else 1)


def run(argv: list[str]) -> Report:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return Report("text", "", 0 if exc.code in (0, None) else 2)
    try:
        if args.command == "roots":
            return _cmd_roots(args)
        if args.command == "ideals":
            return _cmd_ideals(args)
        if args.command == "poly":
            return _cmd_poly(args)
        if args.command == "bijection":
            return _cmd_bijection(args)
        if args.command == "table-a3":
            return Report("text", render_table_a3(), 0)
        return _cmd_verify(args)
    except (InvalidType, WrongType) as exc:
        return Report("text", f"error: {exc}", 2)


def main(argv: list[str] | None = None) -> None:
    report = run(sys.argv[1:] if argv is None else argv)
    if report.payload:
        print(report.payload)
    sys.exit(report.exit_code)


if __name__ == "__main__":
    main()
