"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import ENUMERATION_CAP
from .counting import (
    count_asym_planar_bruteforce,
    count_asym_rooted_planar_bruteforce,
    count_planar_bruteforce,
    count_report,
    count_rooted_planar_bruteforce,
)
from .errors import CrossingPartitionError, InvalidPartitionError, InvalidTreeError, ResourceLimitError, SizeMismatchError
from .nc import enumerate_nc, kreweras, parse_partition
from .orbits import kappa_orbit, orbit_table, predicted_orbit_table
from .render import render_matching, render_meander, render_partition
from .sieve import csp_verify
from .trees import enumerate_trees, parse_tree, phi
from .verify import run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _limit(args) -> int | None:
    return None if args.force else ENUMERATION_CAP


def _emit(args, structured, text: str) -> None:
    if args.format == "structured":
        print(json.dumps(structured, sort_keys=False))
    else:
        print(text)


def _parse_range(args) -> tuple[int, int]:
    if args.range:
        try:
            lo, hi = (int(x) for x in args.range.split(".."))
        except ValueError:
            raise UsageError(f"--range must look like A..B, got {args.range!r}")
        if lo < 1 or hi < lo:
            raise UsageError(f"empty or invalid range {args.range!r}")
        return lo, hi
    if args.n is None:
        raise UsageError("give --n or --range")
    return args.n, args.n


def _orbit_text(entries: dict[int, int]) -> str:
    return "{" + ", ".join(f"{l}:{c}" for l, c in entries.items()) + "}"


def cmd_enumerate(args) -> int:
    if args.n is None:
        raise UsageError("enumerate needs --n")
    if args.kind == "trees":
        items = list(enumerate_trees(args.n, limit=_limit(args)))
    else:
        items = list(enumerate_nc(args.n, limit=_limit(args)))
    _emit(args, [x.to_dict() for x in items], "\n".join(map(str, items)))
    return EXIT_OK


def cmd_complement(args) -> int:
    p = parse_partition(args.partition, args.n)
    seq = []
    q = p
    for _ in range(args.iterate):
        q = kreweras(q)
        seq.append(q)
    _emit(args, [x.to_dict() for x in seq], "\n".join(map(str, seq)))
    return EXIT_OK


def cmd_orbit(args) -> int:
    if args.partition:
        orbit = kappa_orbit(parse_partition(args.partition, args.n))
        _emit(
            args,
            {"length": len(orbit), "orbit": [x.to_dict() for x in orbit]},
            "\n".join(map(str, orbit)),
        )
        return EXIT_OK
    if args.n is None:
        raise UsageError("orbit needs --n or a partition")
    table = orbit_table(args.n, limit=_limit(args))
    data = table.to_dict()
    lines = [f"n={table.n}", "length  count  representatives"]
    for length, count in table.entries.items():
        reps = table.representatives.get(length, [])
        if args.representatives:
            data["orbits"][[o["length"] for o in data["orbits"]].index(length)]["representatives"] = [
                r.dyck for r in reps
            ]
        shown = " ".join(r.dyck for r in reps[:3]) + (" ..." if len(reps) > 3 else "")
        lines.append(f"{length:>6}  {count:>5}  {shown}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_counts(args) -> int:
    lo, hi = _parse_range(args)
    rows = []
    all_match = True
    for n in range(lo, hi + 1):
        rep = count_report(n)
        row = rep.to_dict()
        if n >= 2:
            row["orbits"] = predicted_orbit_table(n).to_dict()["orbits"]
        if args.brute:
            limit = _limit(args)
            brute = {
                "rootPT": count_rooted_planar_bruteforce(n, limit),
                "asymRootPT": count_asym_rooted_planar_bruteforce(n, limit),
                "PT": count_planar_bruteforce(n, limit),
                "asymPT": count_asym_planar_bruteforce(n, limit),
            }
            row["brute"] = brute
            row["match"] = all(brute[k] == row[k] for k in brute)
            all_match &= row["match"]
        rows.append(row)

    if args.format == "structured":
        print(json.dumps(rows if hi > lo else rows[0]))
    else:
        keys = ["n", "catalan", "rootPT", "asymRootPT", "PT", "asymPT"]
        header = keys + (["brute", "match"] if args.brute else []) + ["orbits"]
        table = [header]
        for row in rows:
            cells = [str(row[k]) for k in keys]
            if args.brute:
                b = row["brute"]
                cells += ["/".join(str(b[k]) for k in keys[2:]), "yes" if row["match"] else "NO"]
            orbits = {o["length"]: o["count"] for o in row.get("orbits", [])}
            cells.append(_orbit_text(orbits) if orbits else "{1:1}")
            table.append(cells)
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        for r in table:
            print("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
    return EXIT_OK if all_match else EXIT_FAIL


def cmd_csp(args) -> int:
    lo, hi = _parse_range(args)
    reports = [csp_verify(n, limit=_limit(args)) for n in range(lo, hi + 1)]
    lines = []
    for r in reports:
        lines.append(f"n={r.n}  X(q) = {r.polynomial}")
        lines.append(f"  residues mod q^{2 * r.n} - 1: {r.residues}")
        lines.append(f"  expected from orbits:    {r.expected}")
        lines.append(f"  stabilizer tally: {r.stabilizer_tally}")
        for c in r.condition1:
            lines.append(
                f"  order {c.order:>2} (shift {c.shift}): fixed {c.fixed_points}  {'ok' if c.passed else 'FAIL'}"
            )
        lines.append(f"  condition 1: {'pass' if r.condition1_passed else 'FAIL'}"
                     f"  condition 2: {'pass' if r.condition2_passed else 'FAIL'}")
    data = [r.to_dict() for r in reports]
    _emit(args, data if hi > lo else data[0], "\n".join(lines))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_verify(args) -> int:
    lo, hi = _parse_range(args) if (args.range or args.n) else (1, 8)
    if hi > 12 and not args.force:
        raise ResourceLimitError(f"verify up to n={hi} exceeds the default cap of 12; pass --force")
    report = run_verify(lo, hi, inject_fault=args.inject_fault)
    _emit(args, report.to_dict(), report.format_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_render(args) -> int:
    if args.kind == "matching":
        svg = render_matching(parse_tree(args.object))
    elif args.kind == "partition":
        svg = render_partition(parse_partition(args.object, args.n), complement=args.complement)
    elif args.kind == "meander":
        a = parse_tree(args.object)
        b = parse_tree(args.other) if args.other else phi(a)
        svg = render_meander(a, b)
    else:
        raise UsageError(f"unsupported object kind {args.kind!r}")
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="size (partitions of [1,n], trees with n edges)")
    common.add_argument("--format", choices=["text", "structured"], default="text")
    common.add_argument("--force", action="store_true", help="lift the n <= 12 enumeration cap")

    parser = argparse.ArgumentParser(
        prog="kreweras",
        description="Kreweras complementation, plane tree rerooting, orbit counts and cyclic sieving.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list NC(n) or plane trees")
    p.add_argument("--kind", choices=["partitions", "trees"], default="partitions")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("complement", parents=[common], help="iterate Kreweras complementation")
    p.add_argument("partition", help='partition text such as "1,3/2" or its JSON form')
    p.add_argument("--iterate", type=int, default=1, metavar="K")
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("orbit", parents=[common], help="orbit table for n, or the orbit of one partition")
    p.add_argument("partition", nargs="?")
    p.add_argument("--representatives", action="store_true", help="include all representatives")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("counts", parents=[common], help="closed-form planar tree counts and orbit predictions")
    p.add_argument("--range", metavar="A..B")
    p.add_argument("--brute", action="store_true", help="add brute-force columns")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("csp", parents=[common], help="check cyclic sieving for the q-Catalan number")
    p.add_argument("--range", metavar="A..B")
    p.set_defaults(func=cmd_csp)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check family")
    p.add_argument("--range", metavar="A..B", help="default 1..8")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", parents=[common], help="write an SVG drawing")
    p.add_argument("--kind", choices=["matching", "partition", "meander"], required=True)
    p.add_argument("object", help="Dyck word / tree JSON, or partition text")
    p.add_argument("--complement", action="store_true", help="also draw the Kreweras complement")
    p.add_argument("--other", help="second matching for a meander (default: phi of the first)")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except CrossingPartitionError as exc:
        print(f"error: partition is crossing: {exc} (quadruple {exc.quadruple})", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, InvalidPartitionError, InvalidTreeError, SizeMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
