"""Command-line interface.

Exit codes: 0 verified, 1 a mathematically meaningful negative result
(non-flat edge, Lemma-1 violation, classification mismatch), 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, pentagon, search
from .errors import RicciFlatError
from .graph_core import format_edge_list, girth, read_edge_list
from .transport import format_rational, is_ricci_flat, kappa_alpha, lly_curvature, parse_rational

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _edge_arg(text):
    try:
        u, v = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected U,V but got {text!r}") from None
    return u, v


def _alpha_arg(text):
    try:
        alpha = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not 0 <= alpha <= 1:
        raise argparse.ArgumentTypeError(f"alpha {text} outside [0, 1]")
    return alpha


def _positive(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _write(out, text, path=None):
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


# -- subcommands -------------------------------------------------------------


def cmd_gen(args, out):
    g = catalog.make_family(catalog.parse_family(args.family))
    _write(out, format_edge_list(g), args.out)
    return EXIT_OK


def cmd_curvature(args, out):
    g = read_edge_list(args.graph)
    edges = [tuple(sorted(args.edge))] if args.edge else list(g.edges())
    alpha: Fraction | None = args.alpha
    rows = []
    for x, y in edges:
        value = kappa_alpha(g, x, y, alpha) if alpha is not None else lly_curvature(g, x, y)
        rows.append(((x, y), value))
    witness = next(((e, k) for e, k in rows if k != 0), None)
    if args.format == "json":
        doc = {
            "graph": {"n": g.n, "m": g.m},
            "quantity": "kappa" if alpha is None else "kappa_alpha",
            "alpha": None if alpha is None else format_rational(alpha),
            "edges": [{"edge": list(e), "value": format_rational(k)} for e, k in rows],
            "flat": witness is None,
            "witness": None if witness is None else {"edge": list(witness[0]), "value": format_rational(witness[1])},
        }
        out.write(_dump_json(doc))
    else:
        label = "kappa" if alpha is None else f"kappa_{format_rational(alpha)}"
        out.write(f"{'edge':<12}{label}\n")
        for (x, y), k in rows:
            out.write(f"{f'{x}-{y}':<12}{format_rational(k)}\n")
        if witness is None:
            out.write("flat: true\n")
        else:
            (x, y), k = witness
            out.write(f"flat: false (witness {x}-{y}, {label} = {format_rational(k)})\n")
    return EXIT_OK if witness is None else EXIT_NEGATIVE


def cmd_verify_catalog(args, out):
    entries = catalog.catalog_all(args.max_cycle, args.path_length)
    results = []
    for name, g, checked in entries:
        verdict = is_ricci_flat(g, checked)
        results.append((name, g, checked, verdict))
    all_flat = all(v.flat for *_, v in results)
    if args.format == "json":
        doc = {
            "families": [
                {
                    "name": name,
                    "n": g.n,
                    "m": g.m,
                    "checked_edges": len(checked),
                    "flat": v.flat,
                    "witness": None if v.flat else {"edge": list(v.witness), "kappa": format_rational(v.kappa)},
                }
                for name, g, checked, v in results
            ],
            "all_flat": all_flat,
        }
        out.write(_dump_json(doc))
    else:
        for name, g, checked, v in results:
            line = f"{name:<20}n={g.n:<4}m={g.m:<4}checked={len(checked):<4}flat: {str(v.flat).lower()}"
            if not v.flat:
                line += f" (witness {v.witness[0]}-{v.witness[1]}, kappa = {format_rational(v.kappa)})"
            out.write(line + "\n")
        out.write(f"all flat: {str(all_flat).lower()}\n")
    return EXIT_OK if all_flat else EXIT_NEGATIVE


def cmd_structure(args, out):
    g = read_edge_list(args.graph)
    profiles = pentagon.edge_profiles(g)
    gval = girth(g)
    lemma = pentagon.verify_lemma1(g) if gval >= 5 else None
    embedding = pentagon.pentagon_embedding(g) if args.embed else None
    irregular = [p.edge for p in profiles if p.irregular]
    c5_total = len(pentagon.all_five_cycles(g))
    if args.format == "json":
        doc = {
            "n": g.n,
            "m": g.m,
            "girth": None if gval == float("inf") else gval,
            "c5_total": c5_total,
            "summary": {"edges": len(profiles), "irregular": len(irregular), "not_irregular": len(profiles) - len(irregular)},
            "profiles": [p.to_json() for p in profiles],
            "irregular_edges": [list(e) for e in irregular],
            "lemma1": None if lemma is None else lemma.to_json(),
        }
        if embedding is not None:
            doc["embedding"] = embedding.to_json()
        out.write(_dump_json(doc))
    else:
        out.write(f"n={g.n} m={g.m} girth={gval} five-cycles={c5_total} irregular edges={len(irregular)}\n")
        out.write(f"{'edge':<10}{'c5':<4}{'irregular':<11}{'opposite':<10}occupied (x_i, y_j)\n")
        for p in profiles:
            x, y = p.edge
            pairs = " ".join(f"({a},{b})" for a, b in p.occupied_pairs())
            out.write(f"{f'{x}-{y}':<10}{p.c5_count:<4}{str(p.irregular).lower():<11}{str(p.has_opposite_pair).lower():<10}{pairs}\n")
        if lemma is None:
            out.write("lemma1: not applicable (girth < 5)\n")
        else:
            out.write(f"lemma1: {'pass' if lemma.passed else 'FAIL'} ({lemma.checked} flat 3-3 edges checked)\n")
            for x, y in lemma.violations:
                out.write(f"  violation at {x}-{y}\n")
        if embedding is not None:
            if embedding.closed:
                out.write(f"embedding: closed, {len(embedding.faces)} faces, euler characteristic {embedding.euler_characteristic}\n")
            else:
                x, y = embedding.witness
                out.write(f"embedding: failed at {x}-{y} ({embedding.reason})\n")
    return EXIT_OK if lemma is None or lemma.passed else EXIT_NEGATIVE


def cmd_search(args, out):
    workers = args.workers if args.workers is not None else search.workers_from_env()
    records = search.classify_ricci_flat(args.max_n, args.min_degree, args.max_degree, workers=workers)
    if args.out:
        _write(out, search.format_census(records), args.out)
    ok = all(r.matches_expectation for r in records)
    if args.format == "json":
        out.write(_dump_json({"records": [r.to_json() for r in records], "match": ok}))
    else:
        for r in records:
            found = ", ".join(r.families) or "-"
            expected = ", ".join(search.expected_families(r.n, r.min_degree, r.max_degree)) or "-"
            status = "ok" if r.matches_expectation else "MISMATCH"
            out.write(
                f"n={r.n:<3} enumerated={r.enumerated_count:<6} prefiltered={r.prefiltered:<6}"
                f"ricci-flat=[{found}] expected=[{expected}] {status}\n"
            )
        out.write(f"classification {'reproduced' if ok else 'MISMATCH'}\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ricci-flat", description="Exact Lin-Lu-Yau curvature and girth-five Ricci-flat graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit a catalog graph as an edge list")
    p.add_argument("--family", required=True, help="path:K, cycle:K, petersen, dodecahedral, half-dodecahedral, triplex, gp:K,T")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("curvature", help="per-edge curvature of a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--edge", type=_edge_arg)
    p.add_argument("--alpha", type=_alpha_arg)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("verify-catalog", help="check flatness of every classified family")
    p.add_argument("--max-cycle", type=int, default=20)
    p.add_argument("--path-length", type=int, default=50)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify_catalog)

    p = sub.add_parser("structure", help="pentagon structure, Lemma-1 check, optional embedding")
    p.add_argument("--graph", required=True)
    p.add_argument("--embed", action="store_true")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("search", help="census of small girth >= 5 graphs and their Ricci-flat members")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--min-degree", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--workers", type=_positive)
    p.add_argument("--out")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_search)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    """Execute one command and return its exit code."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except SystemExit as exc:  # --help and --version
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except (RicciFlatError, OSError, UnicodeDecodeError) as exc:
        err.write(f"ricci-flat: error: {exc}\n")
        return EXIT_USAGE


def main():
    code = run()
    sys.stdout.flush()
    raise SystemExit(code)
