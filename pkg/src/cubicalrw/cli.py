"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 input error, 3 fuel exhausted.
All output is plain text with a stable ordering, suitable for golden files.
"""

from __future__ import annotations

import argparse
import sys

from .branching import critical_branchings
from .cube import face_mismatches, validate_filler
from .errors import (FaceMismatchError, FuelExhaustedError,
                     IncompleteCompletionError, ParseError, PreconditionError,
                     RewritingError, TerminationOrderError)
from .fileformat import (PolygraphFile, parse_certificate, parse_polygraph,
                         parse_shell, serialize_certificate,
                         serialize_polygraph)
from .polygraph import validate_polygraph
from .rewrite import DEFAULT_FUEL, format_step, format_word, normalize
from .squier import Completion, fill_shell, squier_completion
from .words import parse_word

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2
EXIT_FUEL = 3


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, PreconditionError, TerminationOrderError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FuelExhaustedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FUEL
    except (FaceMismatchError, IncompleteCompletionError, RewritingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicalrw",
        description="String rewriting with square-cell witness certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    info = sub.add_parser("info", help="summarize a presentation file")
    info.add_argument("file")
    info.set_defaults(func=cmd_info)

    norm = sub.add_parser("normalize", help="rewrite a word to normal form")
    norm.add_argument("file")
    norm.add_argument("word")
    norm.add_argument("--strategy", choices=["leftmost", "rightmost"],
                      default="leftmost")
    norm.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    norm.set_defaults(func=cmd_normalize)

    br = sub.add_parser("branchings", help="list the critical branchings")
    br.add_argument("file")
    br.set_defaults(func=cmd_branchings)

    comp = sub.add_parser("complete", help="add one square per critical branching")
    comp.add_argument("file")
    comp.add_argument("-o", "--output", required=True)
    comp.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    comp.set_defaults(func=cmd_complete)

    fill = sub.add_parser("fill-shell", help="synthesize a filler certificate")
    fill.add_argument("file")
    fill.add_argument("--shell", required=True)
    fill.add_argument("-o", "--output", required=True)
    fill.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    fill.set_defaults(func=cmd_fill_shell)

    check = sub.add_parser("check", help="re-validate a certificate against a shell")
    check.add_argument("file")
    check.add_argument("--shell", required=True)
    check.add_argument("--cert", required=True)
    check.set_defaults(func=cmd_check)

    return parser


def _load(path: str) -> PolygraphFile:
    with open(path, encoding="utf-8") as fh:
        return parse_polygraph(fh.read())


def cmd_info(args) -> int:
    pf = _load(args.file)
    p = pf.polygraph
    print(f"regime: {p.regime}")
    print(f"generators ({len(p.generators)}): "
          + (" ".join(p.generators) if p.generators else "-"))
    print(f"rules ({len(p.rules)}):")
    for r in p.rules:
        print(f"  {r.name}: {format_word(r.lhs)} -> {format_word(r.rhs)}")
    print(f"squares: {len(p.squares)}")
    print(f"critical branchings: {len(critical_branchings(p))}")
    for v in validate_polygraph(p):
        print(str(v))
    return EXIT_OK


def cmd_normalize(args) -> int:
    pf = _load(args.file)
    w = parse_word(args.word, pf.polygraph.generators)
    path = normalize(pf.polygraph, w, args.strategy, args.fuel)
    for st in path.steps:
        print(format_step(st))
    print(f"normal form: {format_word(path.target)}")
    return EXIT_OK


def cmd_branchings(args) -> int:
    pf = _load(args.file)
    for b in critical_branchings(pf.polygraph):
        print(f"{format_word(b.source)} ; {format_step(b.first)} ; "
              f"{format_step(b.second)}")
    return EXIT_OK


def cmd_complete(args) -> int:
    pf = _load(args.file)
    precedence = pf.precedence or pf.polygraph.generators
    completion = squier_completion(pf.polygraph, precedence, args.fuel)
    out = serialize_polygraph(PolygraphFile(completion.polygraph, precedence))
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(out)
    print(f"added {len(completion.added)} squares")
    return EXIT_OK


def cmd_fill_shell(args) -> int:
    pf = _load(args.file)
    rules = pf.polygraph.rules_by_name()
    with open(args.shell, encoding="utf-8") as fh:
        shell = parse_shell(fh.read(), rules)
    completion = Completion.from_polygraph(pf.polygraph)
    cell = fill_shell(completion, shell, args.fuel)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(serialize_certificate(shell, cell))
    print("certificate written")
    return EXIT_OK


def cmd_check(args) -> int:
    """Re-parse and re-validate a certificate; independent of synthesis."""
    pf = _load(args.file)
    p = pf.polygraph
    rules = p.rules_by_name()
    with open(args.shell, encoding="utf-8") as fh:
        shell = parse_shell(fh.read(), rules)
    with open(args.cert, encoding="utf-8") as fh:
        _, cell = parse_certificate(fh.read(), rules, p.squares_by_name())
    if validate_filler(cell, shell):
        print("ok")
        return EXIT_OK
    for name in face_mismatches(cell, shell):
        print(f"face mismatch: {name}")
    return EXIT_VERIFICATION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
