"""Command line interface: ``semiprim <command> FILE``.

Exit codes: 0 analysed, 1 verify-gb found a failing composition,
2 usage, I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .freealg import monic
from .groebner import complete, homogenized_system, is_groebner, lead_words
from .monomial import ObstructionSet, build_graph, export_dot, normal_words
from .textio import ParseError, read_presentation
from .transfer import analyze, verify_prop34

EXIT_OK = 0
EXIT_GATE = 1
EXIT_ERROR = 2


def _obstructions(p):
    G = [monic(g, p.order) for g in p.relations]
    return ObstructionSet(tuple(lead_words(G, p.order)) if G else (), p.alphabet)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_analyze(args, p):
    report = analyze(p)
    out = report.render()
    data = report.to_dict()
    if args.prop34_bound is not None and p.order.is_graded:
        check = verify_prop34(p, args.prop34_bound)
        out += ("Homogenization cross-check\n"
                f"  G Groebner: {'yes' if check.gb_original else 'no'}\n"
                f"  ~G Groebner: {'yes' if check.gb_homogenized else 'no'}\n"
                f"  normal words T^r*u up to degree {check.degree_bound}: "
                f"{'match' if check.normal_words_match else 'MISMATCH'} ({check.counted} words)\n")
        data["prop34"] = {
            "gb_original": check.gb_original,
            "gb_homogenized": check.gb_homogenized,
            "normal_words_match": check.normal_words_match,
            "degree_bound": check.degree_bound,
            "words_checked": check.counted,
        }
    sys.stdout.write(out)
    if args.json:
        _write(args.json, json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


def cmd_graph(args, p):
    om = _obstructions(p)
    if not om.words:
        print("no relations: the free algebra has no Ufnarovski graph", file=sys.stderr)
        return EXIT_ERROR
    g = build_graph(om)
    fmt = p.alphabet.format_word
    if args.dot:
        _write(args.dot, export_dot(g))
    if args.dot != "-":
        print(f"ell = {g.ell}")
        print(f"vertices: {', '.join(fmt(v) for v in g.vertices)}")
        print(f"cyclic: {', '.join(fmt(v) for v in g.cyclic_vertices()) or '(none)'}")
        for e in g.edges:
            print(f"{fmt(g.vertices[e.source])} -> {fmt(g.vertices[e.target])}"
                  f" [{p.alphabet.letters[e.appended]}/{p.alphabet.letters[e.dropped]}]")
    return EXIT_OK


def cmd_normal_words(args, p):
    for w in normal_words(_obstructions(p), args.max_length):
        print(p.alphabet.format_word(w))
    return EXIT_OK


def cmd_verify_gb(args, p):
    verdict = is_groebner(p.relations, p.order)
    if verdict.is_groebner:
        print("Groebner basis: yes")
        return EXIT_OK
    print("Groebner basis: no")
    fmt = p.alphabet.format_word
    for amb, r in verdict.failures:
        print(f"{amb.kind} of relations {amb.left + 1} and {amb.right + 1} at "
              f"{fmt(amb.superword)}: remainder {p.fmt(r)}")
    return EXIT_GATE


def cmd_complete(args, p):
    basis, status = complete(p.relations, p.order, args.max_degree)
    print(f"status: {status}")
    for g in basis:
        print(p.fmt(g))
    return EXIT_OK


def cmd_homogenize(args, p):
    try:
        polys, ext = homogenized_system(p.relations, p.order, p.field)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    for f in polys:
        print(f.format(ext))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semiprim",
        description="Semiprimitivity of algebras presented by noncommutative Groebner bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full hypothesis check and verdicts")
    a.add_argument("file")
    a.add_argument("--json", metavar="OUT", help="also write the report as JSON ('-' for stdout)")
    a.add_argument("--prop34-bound", type=int, metavar="N",
                   help="cross-check the homogenized system up to weighted degree N")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("graph", help="Ufnarovski graph of the leading words")
    g.add_argument("file")
    g.add_argument("--dot", metavar="OUT", help="write Graphviz DOT ('-' for stdout)")
    g.set_defaults(func=cmd_graph)

    n = sub.add_parser("normal-words", help="list normal words")
    n.add_argument("file")
    n.add_argument("--max-length", type=int, default=3)
    n.set_defaults(func=cmd_normal_words)

    v = sub.add_parser("verify-gb", help="exit 1 unless the relations form a Groebner basis")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify_gb)

    c = sub.add_parser("complete", help="bounded Groebner basis completion")
    c.add_argument("file")
    c.add_argument("--max-degree", type=int, default=8)
    c.set_defaults(func=cmd_complete)

    h = sub.add_parser("homogenize", help="print ~G over the letters and T")
    h.add_argument("file")
    h.set_defaults(func=cmd_homogenize)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        p = read_presentation(args.file)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ParseError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args, p)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
