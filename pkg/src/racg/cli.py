"""Command-line front end.

Graph file format (one graph per file):
    vertices: a b c          required first
    edge: a b                one line per edge
    order: b a c             optional ShortLex override
    # comment                ignored, as are blank lines

Word format: whitespace-separated vertex names, ``e`` for the identity.

Exit status: 0 on success, 1 when a verifier finds a counterexample or a
cross-check disagrees, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import verify as verify_mod
from .classify import DEFAULT_FREENESS_DEPTH, classify
from .graph import GraphError, SimpleGraph
from .growth import growth_series, growth_type, series_coefficients
from .parabolic import conjugate_parabolic_intersection, lcr_decompose
from .words import (
    Element,
    UnknownVertexError,
    ball,
    format_word,
    parse_word,
    sphere_sizes,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class CliError(Exception):
    """Usage-level failure: reported on stderr, exit status 2."""


def load_graph(path: str) -> SimpleGraph:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as e:
        raise CliError(f"{path}: {e.strerror or e}")
    try:
        return SimpleGraph.from_text(text)
    except GraphError as e:
        raise CliError(f"{path}: {e}")


def load_word(g: SimpleGraph, text: str) -> Element:
    try:
        return parse_word(g, text)
    except UnknownVertexError as e:
        raise CliError(str(e))


def split_subset(g: SimpleGraph, raw: str) -> frozenset:
    names = [s for s in raw.replace(",", " ").split() if s]
    try:
        return g.check_subset(names)
    except UnknownVertexError as e:
        raise CliError(str(e))


def emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# -- subcommands -------------------------------------------------------------


def cmd_classify(args) -> int:
    g = load_graph(args.graph)
    cls = classify(g, witnesses=not args.no_witnesses, freeness_depth=args.depth)
    d = cls.to_json_dict(g)
    if args.json:
        emit_json(d)
        return EXIT_OK
    for key in (
        "amenable",
        "contains_F2",
        "strongly_solid",
        "contains_ZxF2",
        "hyperbolic",
    ):
        print(f"{key}: {str(d[key]).lower()}")
    print("center_clique:", " ".join(d["center_clique"]) or "-")
    print(
        "product_split:",
        (" ".join(d["product_split"][0]) or "-"),
        "|",
        (" ".join(d["product_split"][1]) or "-"),
    )
    for dec in d["afp_decompositions"]:
        print(
            f"afp {dec['vertex']}: star = {' '.join(dec['g1']) or '-'}; "
            f"rest = {' '.join(dec['g2']) or '-'}; "
            f"amalgam = {' '.join(dec['amalgam']) or '-'}"
        )
    return EXIT_OK


def cmd_witness(args) -> int:
    g = load_graph(args.graph)
    cls = classify(g, witnesses=True, freeness_depth=args.depth)
    w = cls.witnesses
    if args.json:
        emit_json(cls.to_json_dict(g)["witnesses"])
        return EXIT_OK
    if w.f2_pair:
        print(f"f2_pair (free to depth {w.f2_depth}):")
        print("  x =", format_word(w.f2_pair[0]))
        print("  y =", format_word(w.f2_pair[1]))
    else:
        print("f2_pair: none (amenable)")
    if w.zxf2_triple:
        z, x, y = w.zxf2_triple
        print("zxf2_triple:")
        print("  z =", format_word(z))
        print("  x =", format_word(x))
        print("  y =", format_word(y))
    else:
        print("zxf2_triple: none")
    if w.pattern_embedding:
        name, m = w.pattern_embedding
        pairs = " ".join(f"{k}->{v}" for k, v in sorted(m.items()))
        print(f"pattern: {name} via {pairs}")
    if w.special_subgroup:
        vs, shape = w.special_subgroup
        print(f"special_subgroup: {{{' '.join(g.sorted(vs))}}} = {shape}")
    return EXIT_OK


def cmd_nf(args) -> int:
    g = load_graph(args.graph)
    print(format_word(load_word(g, args.word)))
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = load_graph(args.graph)
    x = load_word(g, args.word)
    g1 = split_subset(g, args.g1)
    g2 = split_subset(g, args.g2)
    dec = lcr_decompose(x, g1, g2)
    if args.json:
        emit_json(
            {
                "left": format_word(dec.left),
                "center": format_word(dec.center),
                "right": format_word(dec.right),
            }
        )
    else:
        print("left:", format_word(dec.left))
        print("center:", format_word(dec.center))
        print("right:", format_word(dec.right))
    return EXIT_OK


def cmd_intersect(args) -> int:
    g = load_graph(args.graph)
    x = load_word(g, args.word)
    g1 = split_subset(g, args.g1)
    res = conjugate_parabolic_intersection(x, g1)
    if args.json:
        emit_json(
            {
                "h": format_word(res.conjugator_h),
                "core": g.sorted(res.core),
                "d": format_word(res.minimal_rep_d),
            }
        )
    else:
        print("h:", format_word(res.conjugator_h))
        print("core:", " ".join(g.sorted(res.core)) or "-")
        print("d:", format_word(res.minimal_rep_d))
    return EXIT_OK


def cmd_growth(args) -> int:
    g = load_graph(args.graph)
    series = growth_series(g)
    coeffs = series_coefficients(series, args.n)
    if args.json:
        out = {
            "numerator": list(series.numerator.coefficients),
            "denominator": list(series.denominator.coefficients),
            "coefficients": coeffs,
        }
    else:
        print("numerator:", list(series.numerator.coefficients))
        print("denominator:", list(series.denominator.coefficients))
        for k, c in enumerate(coeffs):
            print(f"{k}\t{c}")
    if args.check_bfs is not None:
        bfs = sphere_sizes(g, args.check_bfs)
        if bfs != coeffs[: args.check_bfs + 1]:
            msg = {
                "error": "growth series disagrees with BFS sphere sizes",
                "series": coeffs[: args.check_bfs + 1],
                "bfs": bfs,
            }
            print(json.dumps(msg, sort_keys=True), file=sys.stderr)
            return EXIT_MISMATCH
        if args.json:
            out["bfs_checked"] = args.check_bfs
        else:
            print(f"bfs check up to length {args.check_bfs}: ok")
    if args.json:
        emit_json(out)
    return EXIT_OK


def cmd_ball(args) -> int:
    g = load_graph(args.graph)
    for x in ball(g, args.radius):
        print(format_word(x))
    return EXIT_OK


# -- verify ------------------------------------------------------------------

SUITES = ("combinatorics", "condition-nest", "inner-product", "intersection", "lcr-unique")


def run_suite(suite: str, path: str, radius: int, uv_radius: int, n) -> dict:
    """One suite on one graph file; the report gains graph/skip fields."""
    g = load_graph(path)
    label = Path(path).name
    try:
        if suite == "combinatorics":
            rep = verify_mod.verify_combinatorics(g, radius)
        elif suite == "condition-nest":
            rep = verify_mod.verify_condition_nest(g, radius, uv_radius)
        elif suite == "inner-product":
            rep = verify_mod.verify_inner_product(g, n=n, radius=min(radius, 3))
        elif suite == "intersection":
            rep = verify_mod.verify_intersection(g, radius)
        elif suite == "lcr-unique":
            rep = verify_mod.verify_lcr_unique(g, radius + 1)
        else:
            raise CliError(f"unknown suite {suite!r}")
    except ValueError as e:
        # inner-product needs a trivially intersecting link family; graphs
        # without one (cliques, cones) are reported as skipped, not failed
        return {"name": suite, "graph": label, "skipped": str(e), "checked": 0, "mismatches": []}
    rep["graph"] = label
    return rep


def _suite_job(task):
    return run_suite(*task)


def cmd_verify(args) -> int:
    target = Path(args.target)
    if target.is_dir():
        files = sorted(str(p) for p in target.glob("*.graph"))
        if not files:
            raise CliError(f"{args.target}: no .graph files")
    elif target.is_file():
        files = [str(target)]
    else:
        raise CliError(f"{args.target}: no such file or directory")
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    tasks = [(s, f, args.radius, args.uv_radius, args.n) for s in suites for f in files]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            reports = list(pool.map(_suite_job, tasks))
    else:
        reports = [_suite_job(t) for t in tasks]
    failed = 0
    for rep in reports:
        for m in rep["mismatches"]:
            record = dict(m)
            record["suite"] = rep["name"]
            record["graph"] = rep["graph"]
            print(json.dumps(record, sort_keys=True))
        if rep["mismatches"]:
            failed += 1
    if args.suite == "all" or len(files) > 1:
        for rep in reports:
            status = "FAIL" if rep["mismatches"] else (
                "skip" if rep.get("skipped") else "pass"
            )
            print(
                f"{status}  {rep['name']:<14} {rep['graph']:<22} "
                f"checked={rep['checked']}"
            )
    else:
        rep = reports[0]
        if rep.get("skipped"):
            print(f"skip: {rep['skipped']}")
        else:
            print(f"{'FAIL' if failed else 'pass'}: checked={rep['checked']}")
    return EXIT_MISMATCH if failed else EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="racg",
        description="Right-angled Coxeter groups from finite simple graphs.",
        epilog=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph(p):
        p.add_argument("graph", help="path to a .graph file")

    p = sub.add_parser("classify", help="decide the classification table")
    add_graph(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-witnesses", action="store_true")
    p.add_argument("--depth", type=int, default=DEFAULT_FREENESS_DEPTH,
                   help="freeness certificate depth")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="print certified witness words")
    add_graph(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--depth", type=int, default=DEFAULT_FREENESS_DEPTH)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("nf", help="normal form of a word")
    add_graph(p)
    p.add_argument("word")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("decompose", help="boundary decomposition l * c * r")
    add_graph(p)
    p.add_argument("word")
    p.add_argument("--g1", required=True, help="left subgraph, comma-separated")
    p.add_argument("--g2", required=True, help="right subgraph, comma-separated")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("intersect", help="parabolic-conjugate intersection")
    add_graph(p)
    p.add_argument("word")
    p.add_argument("--g1", required=True, help="subgraph, comma-separated")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("growth", help="exact growth series and coefficients")
    add_graph(p)
    p.add_argument("-n", type=int, default=30, help="coefficients to print")
    p.add_argument("--check-bfs", type=int, metavar="K",
                   help="cross-check coefficients against BFS up to length K")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("ball", help="all elements up to a given length")
    add_graph(p)
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(func=cmd_ball)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("target", help="a .graph file or a directory of them")
    p.add_argument("--radius", type=int, default=4, help="basis ball radius")
    p.add_argument("--uv-radius", type=int, default=3,
                   help="conjugator ball radius (condition-nest)")
    p.add_argument("--n", type=int, default=None,
                   help="number of link subgraphs (inner-product)")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "radius", 1) < 0 or getattr(args, "depth", 1) < 1:
        parser.error("budgets must be positive")
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
