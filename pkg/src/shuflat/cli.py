"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size-cap
refusal.  The environment variable SHUF_SIZE_CAP overrides the default
size cap of the invoked command; an explicit --size-cap wins over both.
All output is deterministic: repeated runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import identities, lattices, triangles, words
from .words import SizeLimitExceeded

SCHEMA_VERSION = 1


def _default_cap(fallback):
    env = os.environ.get("SHUF_SIZE_CAP")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError("SHUF_SIZE_CAP must be an integer") from None
    return fallback


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _add_mn(parser):
    parser.add_argument("m", type=_nonneg)
    parser.add_argument("n", type=_nonneg)


def _parser():
    parser = argparse.ArgumentParser(
        prog="shuflat",
        description="Shuffle and bubble lattices: triangles, series, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all shuffle words in canonical order")
    _add_mn(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("--size-cap", type=int, default=None)

    p = sub.add_parser("hasse", help="export the cover digraph")
    _add_mn(p)
    p.add_argument("--order", choices=("shuf", "bub"), default="shuf")
    p.add_argument("--format", choices=("dot", "text", "json"), default="dot")
    p.add_argument("-o", "--output")
    p.add_argument("--size-cap", type=int, default=None)

    for kind, methods in (
        ("mtriangle", triangles.M_METHODS),
        ("htriangle", triangles.H_METHODS),
        ("chpoly", triangles.CH_METHODS),
    ):
        p = sub.add_parser(kind, help=f"compute the {kind} of Shuf(m,n)")
        _add_mn(p)
        p.add_argument("--method", choices=methods, default="formula")
        p.add_argument("--json", action="store_true")
        p.add_argument("-o", "--output")
        p.add_argument("--size-cap", type=int, default=None)
        p.add_argument(
            "--force",
            action="store_true",
            help="lift the brute-force size cap to the enumeration cap",
        )

    p = sub.add_parser("series", help="generating-series coefficients up to (M, N)")
    p.add_argument("max_m", type=_nonneg, metavar="M")
    p.add_argument("max_n", type=_nonneg, metavar="N")
    p.add_argument("--json", action="store_true")
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument(
        "--suite",
        choices=("identities", "relations", "methods", "all"),
        default="all",
    )
    p.add_argument("--max-m", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--series-max", type=int, default=8)
    p.add_argument("--json", metavar="REPORT", help="also write a JSON report")
    return parser


def _emit(text, output):
    if output:
        with open(output, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_enumerate(args):
    cap = args.size_cap if args.size_cap is not None else _default_cap(words.DEFAULT_SIZE_CAP)
    listing = words.enumerate_shuffle_words(args.m, args.n, cap)
    rendered = [words.format_word(w) for w in listing]
    if args.json:
        payload = {
            "schema": SCHEMA_VERSION,
            "m": args.m,
            "n": args.n,
            "count": len(rendered),
            "words": rendered,
        }
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        _emit("\n".join(rendered), args.output)
    return 0


def _cmd_hasse(args):
    cap = args.size_cap if args.size_cap is not None else _default_cap(words.DEFAULT_SIZE_CAP)
    if args.order == "shuf":
        poset = lattices.build_shuffle_lattice(args.m, args.n, cap)
        edges = [
            (words.format_word(poset.labels[a]), words.format_word(poset.labels[b]), None)
            for a, b in poset.covers
        ]
        nodes = [
            (words.format_word(label), poset.ranks[i])
            for i, label in enumerate(poset.labels)
        ]
        dot = poset.to_dot(label=words.format_word)
    else:
        listing = words.enumerate_shuffle_words(args.m, args.n, cap)
        covers = lattices.bubble_covers(args.m, args.n, cap)
        nodes = [(words.format_word(w), words.rank(w, args.m)) for w in listing]
        edges = [
            (words.format_word(c.lower), words.format_word(c.upper), c.kind)
            for c in covers
        ]
        dot = lattices.bubble_covers_dot(args.m, args.n, cap)

    if args.format == "dot":
        _emit(dot, args.output)
    elif args.format == "text":
        lines = [
            f"{lo} -> {hi}" + (f" [{kind}]" if kind else "")
            for lo, hi, kind in edges
        ]
        _emit("\n".join(lines), args.output)
    else:
        payload = {
            "schema": SCHEMA_VERSION,
            "m": args.m,
            "n": args.n,
            "order": args.order,
            "nodes": [{"word": w, "rank": r} for w, r in nodes],
            "edges": [
                {"lower": lo, "upper": hi, **({"kind": kind} if kind else {})}
                for lo, hi, kind in edges
            ],
        }
        _emit(json.dumps(payload, indent=2), args.output)
    return 0


def _cmd_triangle(args):
    if args.force:
        cap = words.DEFAULT_SIZE_CAP
    elif args.size_cap is not None:
        cap = args.size_cap
    else:
        cap = _default_cap(triangles.BRUTE_SIZE_CAP)
    result = triangles.compute(args.command, args.m, args.n, args.method, cap)
    if args.json:
        payload = {
            "schema": SCHEMA_VERSION,
            "kind": result.kind,
            "m": result.m,
            "n": result.n,
            "method": result.method,
            "terms": result.value.to_json_terms(),
        }
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        _emit(str(result.value), args.output)
    return 0


def _cmd_series(args):
    series = triangles.m_series(args.max_m, args.max_n)
    if args.json:
        payload = {
            "schema": SCHEMA_VERSION,
            "max_m": args.max_m,
            "max_n": args.max_n,
            "coefficients": [
                {
                    "m": i,
                    "n": j,
                    "terms": series.coefficient(i, j).to_json_terms(),
                }
                for i in range(args.max_m + 1)
                for j in range(args.max_n + 1)
            ],
        }
        _emit(json.dumps(payload, indent=2), args.output)
    else:
        lines = [
            f"({i},{j}): {series.coefficient(i, j)}"
            for i in range(args.max_m + 1)
            for j in range(args.max_n + 1)
        ]
        _emit("\n".join(lines), args.output)
    return 0


def emit_report(verdicts, notes=()):
    """Stable-sorted human report; returns (text, number_of_failures)."""
    ordered = sorted(verdicts, key=lambda v: (v.name, v.params))
    lines = []
    for v in ordered:
        status = "PASS" if v.passed else "FAIL"
        line = f"{status} {v.name} {v.params}"
        if not v.passed:
            line += f"\n  lhs: {v.lhs}\n  rhs: {v.rhs}"
            if v.detail:
                line += f"\n  {v.detail}"
        lines.append(line)
    for note in notes:
        lines.append(f"NOTE {note}")
    failed = sum(1 for v in ordered if not v.passed)
    lines.append(f"{len(ordered) - failed}/{len(ordered)} checks passed")
    return "\n".join(lines) + "\n", failed


def _cmd_verify(args):
    names = (
        ["identities", "relations", "methods"] if args.suite == "all" else [args.suite]
    )
    verdicts, notes = identities.run_suites(
        names, args.max_m, args.max_n, args.series_max
    )
    text, failed = emit_report(verdicts, notes)
    sys.stdout.write(text)
    if args.json:
        ordered = sorted(verdicts, key=lambda v: (v.name, v.params))
        payload = {
            "schema": SCHEMA_VERSION,
            "suites": names,
            "passed": failed == 0,
            "notes": notes,
            "verdicts": [v.to_json() for v in ordered],
        }
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    return 0 if failed == 0 else 1


_DISPATCH = {
    "enumerate": _cmd_enumerate,
    "hasse": _cmd_hasse,
    "mtriangle": _cmd_triangle,
    "htriangle": _cmd_triangle,
    "chpoly": _cmd_triangle,
    "series": _cmd_series,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    """Parse and execute; returns the process exit code."""
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _DISPATCH[args.command](args)
    except SizeLimitExceeded as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return 3
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
