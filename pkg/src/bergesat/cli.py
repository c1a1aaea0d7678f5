"""Command-line front end.

Exit codes: 0 for an affirmative answer or completed generation, 1 for
a negative answer (pattern absent, not saturated, nothing found), 2 for
usage and input-format problems, 3 for out-of-range parameters, 4 for a
scan that hit its time budget. Diagnostics go to stderr; stdout carries
only the answer.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__, patterns
from .berge import contains_berge
from .builders import (
    build_cycle_book,
    build_cycle_cliques,
    build_cycle_cliques_keq,
    build_matching,
    build_path_saturated,
    build_path_tree,
    build_star_cliques,
    build_star_tightcycle,
    build_triangle_star,
)
from .errors import (
    FormatError,
    InvalidHypergraphError,
    OrderTooSmallError,
    ParameterRegimeError,
    SaturationTimeout,
    TooFewVerticesError,
    TooLargeError,
    UnderspecifiedConstructionError,
    UnsupportedUniformityError,
)
from .formulas import (
    CycleUpperFamily,
    MatchingFamily,
    StarExactFamily,
    StarUpperFamily,
    TriangleFamily,
    a_km,
    closed_form,
    h_edge_count,
    sat_path_bounds,
)
from .hgio import (
    load_hypergraph,
    report_document,
    saturation_payload,
    save_hypergraph,
)
from .oracle import enumerate_linear_trees, min_saturated_tree, sat_exhaustive
from .satcheck import is_berge_saturated

_FAMILIES = {
    "path-tree": (build_path_tree, ("k", "m")),
    "path-saturated": (build_path_saturated, ("k", "m", "n")),
    "triangle-star": (build_triangle_star, ("k", "n")),
    "cycle-book": (build_cycle_book, ("k", "m", "n")),
    "cycle-cliques-keq": (build_cycle_cliques_keq, ("m", "n")),
    "cycle-cliques": (build_cycle_cliques, ("k", "m", "n")),
    "star-tightcycle": (build_star_tightcycle, ("k", "n")),
    "star-cliques": (build_star_cliques, ("k", "m", "n")),
    "matching": (build_matching, ("k", "l", "n")),
}

_FORMULAS = (
    "a-km", "h-count", "path-bounds", "matching", "triangle",
    "star-exact", "star-upper", "cycle-upper",
)


class _Usage(Exception):
    pass


def _require(args, needed, ctx):
    for name in needed:
        if getattr(args, name, None) is None:
            raise _Usage(f"{ctx} requires -{name}")
    for name in ("k", "m", "n", "l", "t"):
        if getattr(args, name, None) is not None and name not in needed:
            raise _Usage(f"{ctx} does not take -{name}")


def _resolve_pattern(spec):
    if spec.startswith("general:"):
        path = spec[len("general:"):]
        if not path:
            raise FormatError("general: needs a file path")
        g = load_hypergraph(path)
        if g.k != 2:
            raise FormatError(
                f"a general pattern file must be 2-uniform, got k={g.k}")
        return patterns.general(g.n, g.edges)
    return patterns.parse(spec)


def _cmd_gen(args):
    builder, needed = _FAMILIES[args.family]
    _require(args, needed, f"gen {args.family}")
    h = builder(*(getattr(args, name) for name in needed))
    save_hypergraph(h, args.output)
    return 0


def _cmd_contains(args):
    h = load_hypergraph(args.file)
    f = _resolve_pattern(args.pattern)
    emb = contains_berge(h, f)
    print("YES" if emb is not None else "NO")
    return 0 if emb is not None else 1


def _cmd_check(args):
    h = load_hypergraph(args.file)
    f = _resolve_pattern(args.pattern)
    rep = is_berge_saturated(h, f, workers=args.workers, timeout=args.timeout)
    if args.report:
        params = {
            "file": args.file,
            "pattern": args.pattern,
            "host": {"n": h.n, "k": h.k, "edges": len(h.edges)},
        }
        doc = report_document("saturation-check", params,
                              saturation_payload(rep))
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(doc)
    if not rep.free:
        print("host already contains the pattern", file=sys.stderr)
    print("SATURATED" if rep.saturated else "NOT SATURATED")
    return 0 if rep.saturated else 1


def _cmd_formula(args):
    name = args.name
    if name == "a-km":
        _require(args, ("k", "m"), "formula a-km")
        print(a_km(args.k, args.m))
    elif name == "h-count":
        _require(args, ("k", "m", "n"), "formula h-count")
        print(h_edge_count(args.k, args.m, args.n))
    elif name == "path-bounds":
        _require(args, ("k", "m", "n"), "formula path-bounds")
        b = sat_path_bounds(args.k, args.m, args.n)
        print(f"{b.lower} {b.upper}")
    elif name == "matching":
        _require(args, ("k", "l", "n"), "formula matching")
        print(closed_form(MatchingFamily(args.l), args.k, args.n).value)
    elif name == "triangle":
        _require(args, ("k", "n"), "formula triangle")
        print(closed_form(TriangleFamily(), args.k, args.n).value)
    elif name == "star-exact":
        _require(args, ("k", "n"), "formula star-exact")
        print(closed_form(StarExactFamily(), args.k, args.n).value)
    elif name == "star-upper":
        _require(args, ("k", "m", "n"), "formula star-upper")
        print(closed_form(StarUpperFamily(args.m), args.k, args.n).upper)
    else:
        _require(args, ("k", "m", "n"), "formula cycle-upper")
        print(closed_form(CycleUpperFamily(args.m), args.k, args.n).upper)
    return 0


def _cmd_oracle(args):
    which = args.which
    if which == "trees":
        _require(args, ("k", "t"), "oracle trees")
        print(len(enumerate_linear_trees(args.k, args.t)))
        return 0
    if which == "min-tree":
        _require(args, ("k", "m"), "oracle min-tree")
        if args.max_edges is None:
            raise _Usage("oracle min-tree requires --max-edges")
        res = min_saturated_tree(args.k, args.m, args.max_edges)
    else:
        _require(args, ("k", "n"), "oracle sat")
        if args.pattern is None:
            raise _Usage("oracle sat requires --pattern")
        res = sat_exhaustive(args.k, args.n, _resolve_pattern(args.pattern))
    print("NONE" if res.minimum is None else res.minimum)
    return 0 if res.minimum is not None else 1


def _build_parser():
    p = argparse.ArgumentParser(
        prog="bergesat",
        description="Berge-pattern saturation: construct, decide, verify.")
    p.add_argument("--version", action="version",
                   version=f"bergesat {__version__}")
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="write a construction to a hypergraph file")
    g.add_argument("family", choices=sorted(_FAMILIES))
    for flag in ("-k", "-m", "-n", "-l"):
        g.add_argument(flag, type=int)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=_cmd_gen)

    c = sub.add_parser("contains", help="decide Berge-pattern containment")
    c.add_argument("-f", "--file", required=True)
    c.add_argument("--pattern", required=True)
    c.set_defaults(func=_cmd_contains)

    ck = sub.add_parser("check", help="verify saturation by complement scan")
    ck.add_argument("-f", "--file", required=True)
    ck.add_argument("--pattern", required=True)
    ck.add_argument("--workers", type=int)
    ck.add_argument("--timeout", type=float)
    ck.add_argument("--report", help="also write a JSON report here")
    ck.set_defaults(func=_cmd_check)

    f = sub.add_parser("formula", help="evaluate a closed form")
    f.add_argument("name", choices=_FORMULAS)
    for flag in ("-k", "-m", "-n", "-l"):
        f.add_argument(flag, type=int)
    f.set_defaults(func=_cmd_formula)

    o = sub.add_parser("oracle", help="brute-force ground truth, tiny sizes")
    o.add_argument("which", choices=("trees", "min-tree", "sat"))
    for flag in ("-k", "-m", "-n", "-t"):
        o.add_argument(flag, type=int)
    o.add_argument("--max-edges", type=int, dest="max_edges")
    o.add_argument("--pattern")
    o.set_defaults(func=_cmd_oracle)
    return p


def run(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SaturationTimeout as exc:
        print(f"timeout: {exc}", file=sys.stderr)
        return 4
    except (FormatError, InvalidHypergraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (TooLargeError, UnsupportedUniformityError, OrderTooSmallError,
            TooFewVerticesError, ParameterRegimeError,
            UnderspecifiedConstructionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
