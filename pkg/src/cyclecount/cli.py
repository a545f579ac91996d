"""Command-line entry point: ``cyclecount <subcommand> ...``.

Data goes to stdout, diagnostics to stderr; any failure exits nonzero.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import search
from .cycles import count_cycles, count_cycles_oracle, count_st_paths
from .ears import ear_extension_profile
from .multigraph import GraphError, parse_mgf, reduce, to_dot, to_mgf
from .treeduality import (
    count_subtrees,
    min_subtree_counts,
    spectrum_complete_below,
    subtree_count_spectrum,
    tree_canonical_string,
    tree_from_mgf,
    tree_to_outerplanar,
)
from .verify import SCOPES, run_checks


class CLIError(Exception):
    pass


def _read(path: str | None) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _filters(args) -> set[str]:
    return {f for f in search.FILTERS if getattr(args, f, False)}


def cmd_count(args) -> int:
    g = parse_mgf(_read(args.file))
    c = count_cycles(g)
    if args.oracle:
        o = count_cycles_oracle(g)
        if o != c:
            raise CLIError(f"counter gives {c} but oracle gives {o}")
    print(c)
    return 0


def cmd_paths(args) -> int:
    g = parse_mgf(_read(args.file))
    print(count_st_paths(g, args.v, args.w))
    return 0


def cmd_ear_profile(args) -> int:
    g = reduce(parse_mgf(_read(args.file))).graph
    for entry in ear_extension_profile(g):
        print(f"{entry.code.hex()} {entry.count}")
    return 0


def cmd_subtrees(args) -> int:
    print(count_subtrees(tree_from_mgf(_read(args.file))))
    return 0


def cmd_dual(args) -> int:
    t = tree_from_mgf(_read(args.file))
    op, fm = tree_to_outerplanar(t)
    g = op.to_multigraph()
    comments = [
        f"cycles {count_cycles(g)}",
        "face map over the unreduced outerplanar graph (edge indices)",
        f"outer {' '.join(map(str, op.outer))}",
        f"chords {' '.join(f'{a}-{b}' for a, b in op.chords)}",
    ]
    comments += [f"face {v}: {' '.join(map(str, sorted(fm.faces[v])))}" for v in range(t.n)]
    body = g if args.unreduced else reduce(g).graph
    sys.stdout.write(to_mgf(body, comments))
    return 0


def cmd_tree_spectrum(args) -> int:
    mins = min_subtree_counts(args.max_n)
    bound = spectrum_complete_below(args.max_n, mins)
    spec = subtree_count_spectrum(args.max_n)
    missing = [c for c in range(1, bound + 1) if c not in spec]
    if args.json:
        out = {
            "max_n": args.max_n,
            "complete_through": bound,
            "min_count_by_n": {str(n): c for n, c in sorted(mins.items())},
            "missing": missing,
            "witnesses": {str(c): tree_canonical_string(t) for c, t in sorted(spec.items())},
        }
        print(json.dumps(out, indent=2))
    else:
        print(f"complete through {bound}")
        print("missing " + " ".join(map(str, missing)))
    return 0


def cmd_search(args) -> int:
    table = search.witness_search(args.max_count, _filters(args), jobs=args.jobs)
    text = search.table_to_json(table)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_prove(args) -> int:
    cert = search.prove_nonexistence(args.absent, _filters(args))
    print(json.dumps(cert.as_json(), indent=2))
    return 0 if cert.absent else 1


def cmd_oeis(args) -> int:
    for x in search.oeis_prefix(args.seq, args.terms):
        print(x)
    return 0


def cmd_export_dot(args) -> int:
    sys.stdout.write(to_dot(parse_mgf(_read(args.file))))
    return 0


def cmd_verify(args) -> int:
    failed = 0
    for res in run_checks(args.scope):
        print(res.as_json(), flush=True)
        failed += not res.passed
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclecount", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("count", help="number of cycles of an MGF graph")
    s.add_argument("file", nargs="?")
    s.add_argument("--oracle", action="store_true", help="cross-check with subset enumeration")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("paths", help="number of paths between two vertices")
    s.add_argument("file")
    s.add_argument("v", type=int)
    s.add_argument("w", type=int)
    s.set_defaults(func=cmd_paths)

    s = sub.add_parser("ear-profile", help="one-ear extensions by homeomorphism class")
    s.add_argument("file", nargs="?")
    s.set_defaults(func=cmd_ear_profile)

    s = sub.add_parser("subtrees", help="number of subtrees of an MGF tree")
    s.add_argument("file", nargs="?")
    s.set_defaults(func=cmd_subtrees)

    s = sub.add_parser("dual", help="outerplanar cubic graph whose inner dual is the tree")
    s.add_argument("file", nargs="?")
    s.add_argument("--unreduced", action="store_true",
                   help="emit the outerplanar graph before degree-2 suppression")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("tree-spectrum", help="subtree counts of all small trees")
    s.add_argument("--max-n", type=int, default=13)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_tree_spectrum)

    for name, func, helptext in (
        ("search", cmd_search, "witness table for cycle counts"),
        ("prove", cmd_prove, "exhaustive nonexistence certificate"),
    ):
        s = sub.add_parser(name, help=helptext)
        for f in search.FILTERS:
            s.add_argument(f"--{f}", action="store_true")
        s.set_defaults(func=func)
        if name == "search":
            s.add_argument("--max-count", type=int, default=100)
            s.add_argument("--out")
            s.add_argument("--jobs", type=int, default=1)
        else:
            s.add_argument("--absent", type=int, required=True)

    s = sub.add_parser("oeis", help="terms of A385523 or A385524")
    s.add_argument("seq")
    s.add_argument("--terms", type=int, default=50)
    s.set_defaults(func=cmd_oeis)

    s = sub.add_parser("export-dot", help="Graphviz rendering of an MGF graph")
    s.add_argument("file", nargs="?")
    s.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("verify", help="run the reproduction checks")
    s.add_argument("--scope", choices=SCOPES + ("all",), default="all")
    s.add_argument("--all", dest="scope", action="store_const", const="all")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (GraphError, CLIError, ValueError, OSError) as exc:
        print(f"cyclecount: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
