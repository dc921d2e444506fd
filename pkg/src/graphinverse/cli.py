"""Command-line front end.

Subcommands (all take a graph file first):

  gis mul GRAPH X Y       product of two elements, canonical form
  gis inv GRAPH X         inverse of an element
  gis decide GRAPH        discrete-only / non-discrete verdict
  gis base-construct GRAPH   neighborhood-base descriptor for the witness
  gis base-verify GRAPH   run the base axiom + continuity sweeps
  gis laws GRAPH          defining relations + inverse-semigroup law suite

Exit codes: 0 success / all checks pass, 1 parse error, 2 validation
error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .bases import construct_base, verify_base_axioms, verify_continuity
from .elements import multiply, parse_element
from .errors import (
    CompositionError,
    GraphMismatch,
    ParseError,
    UnknownVertex,
    ValidationError,
    WitnessMismatch,
)
from .graphs import parse_graph
from .laws import verify_laws, verify_relations
from .reports import Report
from .topology import decide

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_VERIFICATION = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gis",
        description="Graph inverse semigroup calculator and topology decider.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, *positional: str) -> None:
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="graph description file")
        for arg in positional:
            p.add_argument(arg, help=f"element expression {arg}")
        p.add_argument("--k", type=int, default=20, metavar="K",
                       help="bundle index bound for sweeps (default 20)")
        p.add_argument("--l", type=int, default=4, metavar="L",
                       help="probe path length bound (default 4)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    add("mul", "multiply two elements", "x", "y")
    add("inv", "invert an element", "x")
    add("decide", "decide the discrete-only / non-discrete dichotomy")
    add("base-construct", "construct the neighborhood base for the witness")
    add("base-verify", "verify base axioms and continuity on truncations")
    add("laws", "verify defining relations and inverse-semigroup laws")
    return parser


def _load_graph(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read graph file: {exc}") from exc
    return parse_graph(text)


def _emit_report(report: Report, as_json: bool) -> int:
    if as_json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report)
        print("all checks passed" if report.passed else "FAILED: "
              + ", ".join(report.failed_names()))
    return EXIT_OK if report.passed else EXIT_VERIFICATION


def _run(args) -> int:
    g = _load_graph(args.graph)

    if args.command == "mul":
        product = multiply(parse_element(args.x, g), parse_element(args.y, g))
        print(json.dumps({"element": str(product)}) if args.json else product)
        return EXIT_OK

    if args.command == "inv":
        inverse = parse_element(args.x, g).inverse()
        print(json.dumps({"element": str(inverse)}) if args.json else inverse)
        return EXIT_OK

    if args.command == "decide":
        verdict = decide(g)
        print(json.dumps(verdict.to_report(), indent=2) if args.json else verdict)
        return EXIT_OK

    if args.command == "base-construct":
        verdict = decide(g)
        if verdict.discrete_only:
            raise ValidationError(
                "graph admits only the discrete locally compact topology; "
                "there is no base to construct"
            )
        base = construct_base(g, verdict.witness)
        print(json.dumps(base.to_dict(), indent=2) if args.json else base)
        return EXIT_OK

    if args.command == "base-verify":
        verdict = decide(g)
        if verdict.discrete_only:
            raise ValidationError(
                "graph admits only the discrete locally compact topology; "
                "there is no base to verify"
            )
        base = construct_base(g, verdict.witness)
        report = verify_base_axioms(base, max_index=args.k).merge(
            verify_continuity(base, max_index=args.k, max_length=args.l)
        )
        return _emit_report(report, args.json)

    if args.command == "laws":
        # The law suite itself is exhaustive over |u|, |v| <= 2 and edge
        # indices < 2; --k bounds the relation sweep only.
        report = verify_relations(g, index_bound=args.k).merge(verify_laws(g))
        return _emit_report(report, args.json)

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValidationError, UnknownVertex, GraphMismatch, CompositionError,
            WitnessMismatch) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
