"""Command-line interface: ``rainroman <command> ...``.

Exit codes: 0 success, 1 counterexample or invalid assignment, 2 usage or
parse error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import gzip
import json
import logging
import sys
from typing import Iterator, Sequence, TextIO

from .constructions import (
    B_EXTRA,
    C1C2,
    GFamilySpec,
    TkSpec,
    build_cycle,
    build_G_family,
    build_spider,
    build_Tk,
)
from .domination import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    RainbowAssignment,
    RomanAssignment,
    gamma_R_exact,
    gamma_r2_exact,
    is_valid_rainbow,
    is_valid_roman,
    rainbow_weight,
    roman_weight,
)
from .graph import Graph, Graph6Error, find_reducible_p5, parse_graph6, write_graph6
from .harness import SweepParseError, selftest_families, sweep
from .reductions import contract_p5

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# family spec strings ---------------------------------------------------------

def _pairs(text: str) -> list[tuple[int, int]]:
    out = []
    for item in filter(None, text.split(",")):
        i, sep, j = item.partition("-")
        if not sep:
            raise UsageError(f"block edge {item!r} must look like i-j")
        out.append((int(i), int(j)))
    return out


def _fields(spec: str) -> dict[str, str]:
    fields = {}
    for part in filter(None, (p.strip() for p in spec.split(";"))):
        key, sep, value = part.partition("=")
        if not sep:
            raise UsageError(f"spec field {part!r} must look like key=value")
        fields[key.strip().lower()] = value.strip()
    return fields


def graph_from_spec(family: str, spec: str) -> Graph:
    """Build a graph from a family name and a spec string.

    ``cycle``: ``n=8``; ``spider``: ``legs=1,2,2``; ``Tk``: ``k=3;tree=1-2,2-3``;
    ``Gfam``: ``variant=C1C2`` or ``k=3;tree=1-2,2-3;extra=1-3``. A bare value
    is accepted for ``cycle`` and ``spider``.
    """
    try:
        if family == "cycle":
            return build_cycle(int(_fields(spec)["n"] if "=" in spec else spec))
        if family == "spider":
            legs = _fields(spec)["legs"] if "=" in spec else spec
            return build_spider([int(x) for x in legs.split(",") if x])
        fields = _fields(spec)
        if family == "Gfam" and fields.get("variant", B_EXTRA).upper() == C1C2:
            return build_G_family(GFamilySpec(C1C2))
        tk = TkSpec(int(fields["k"]), _pairs(fields.get("tree", "")))
        if family == "Tk":
            return build_Tk(tk)
        if family == "Gfam":
            return build_G_family(GFamilySpec(B_EXTRA, tk, _pairs(fields.get("extra", ""))))
    except KeyError as exc:
        raise UsageError(f"spec {spec!r} is missing field {exc.args[0]!r}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown family {family!r}")


# commands --------------------------------------------------------------------

def _open_lines(path: str) -> Iterator[str]:
    if path == "-":
        yield from sys.stdin
        return
    if path.endswith(".gz"):
        with gzip.open(path, "rt") as fh:
            yield from fh
        return
    with open(path) as fh:
        yield from fh


def _graphs(path: str) -> Iterator[Graph]:
    for line in _open_lines(path):
        if line.strip():
            yield parse_graph6(line)


def _emit(out: TextIO, obj: dict) -> None:
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_solve(args, out: TextIO) -> int:
    for g in _graphs(args.input):
        row: dict = {"graph6": write_graph6(g), "n": g.n}
        if args.param in ("r2", "both"):
            w, f = gamma_r2_exact(g, args.budget)
            row.update(gamma_r2=w, rainbow=str(f))
        if args.param in ("roman", "both"):
            w, h = gamma_R_exact(g, args.budget)
            row.update(gamma_R=w, roman=str(h))
        _emit(out, row)
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    g = next(_graphs(args.input), None)
    if g is None:
        raise UsageError(f"no graph in {args.input}")
    try:
        if args.kind == "r2":
            f = RainbowAssignment.parse(args.assignment)
            valid, w = is_valid_rainbow(g, f), rainbow_weight(f)
        else:
            h = RomanAssignment.parse(args.assignment)
            valid, w = is_valid_roman(g, h), roman_weight(h)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(out, {"graph6": write_graph6(g), "kind": args.kind, "valid": valid, "weight": w})
    return EXIT_OK if valid else EXIT_COUNTEREXAMPLE


def cmd_generate(args, out: TextIO) -> int:
    out.write(write_graph6(graph_from_spec(args.family, args.spec)) + "\n")
    return EXIT_OK


def cmd_reduce(args, out: TextIO) -> int:
    for g in _graphs(args.input):
        path = find_reducible_p5(g)
        if path is None:
            out.write("irreducible\n")
            continue
        r = contract_p5(g, path)
        id_map = " ".join(f"{old}:{new}" for old, new in sorted(r.id_map.items()))
        out.write(f"{write_graph6(r.reduced)} path={','.join(map(str, path))} map={id_map}\n")
    return EXIT_OK


def cmd_sweep(args, out: TextIO) -> int:
    summary = sweep(
        _open_lines(args.input),
        min_degree=args.min_degree,
        exclude_c5=args.exclude_c5,
        connected_only=args.connected_only,
        budget=args.budget,
        jobs=args.jobs,
        strict=args.strict,
    )
    out.write(summary.to_json() + "\n")
    return EXIT_COUNTEREXAMPLE if summary.counterexamples else EXIT_OK


def cmd_selftest(args, out: TextIO) -> int:
    summary = selftest_families(args.kmax, args.budget)
    out.write(summary.to_json() + "\n")
    return EXIT_COUNTEREXAMPLE if summary.counterexamples else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainroman",
        description="Exact 2-rainbow and Roman domination numbers and bound checks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_budget(p: argparse.ArgumentParser) -> None:
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                       help="search-node ceiling per solver call")

    p = sub.add_parser("solve", help="optimal values and witnesses for each graph")
    p.add_argument("--input", required=True, help="graph6 file, or - for stdin")
    p.add_argument("--param", choices=("r2", "roman", "both"), default="both")
    with_budget(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check an assignment against a graph")
    p.add_argument("--input", required=True)
    p.add_argument("--assignment", required=True,
                   help="one character per vertex: 0/1/2/B (r2) or 0/1/2 (roman)")
    p.add_argument("--kind", choices=("r2", "roman"), required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="graph6 line for a named family member")
    p.add_argument("--family", choices=("cycle", "spider", "Tk", "Gfam"), required=True)
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("reduce", help="contract the first reducible P5 of each graph")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("sweep", help="check every bound on each graph of a stream")
    p.add_argument("--input", required=True)
    p.add_argument("--min-degree", type=int, default=None)
    p.add_argument("--exclude-c5", action="store_true")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--strict", action="store_true", help="abort on the first parse error")
    with_budget(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="verify the T_k and spider families")
    p.add_argument("--kmax", type=int, default=3)
    with_budget(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, Graph6Error, SweepParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
