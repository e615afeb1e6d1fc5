"""Command-line pipelines: ``chroma gen | split | adsplit | orient | color | verify | bench``.

Exit codes are 0 on success, 1 when a verification fails and 2 for usage,
file or parse errors.  ``CHROMA_SEED`` sets the default ``--seed``.
"""

from __future__ import annotations

import argparse
import os
import statistics
import sys
import time
import warnings
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .adsplit import oriented_degree_split
from .euler import degree_split
from .generators import FAMILIES, GenSpec, generate
from .graph import Graph, Orientation, build_graph, max_degree
from .io import (
    parse_coloring,
    parse_edge_list,
    parse_orientation,
    write_coloring,
    write_edge_list,
    write_orientation,
)
from .orient import forests_decomposition_orientation
from .recursive import (
    arboricity_edge_coloring,
    color_with_epsilon,
    edge_coloring,
    parse_epsilon,
)
from .verify import check_orientation, check_palette, check_proper

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("CHROMA_SEED")
    if raw is None:
        return 0
    try:
        return int(raw, 0)
    except ValueError:
        raise UsageError(f"CHROMA_SEED must be an integer, got {raw!r}") from None


def _read(path: str) -> bytes:
    return sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _side_graph(g: Graph, ids: Sequence[int]) -> Graph:
    return build_graph(g.n, [(g.eu[e], g.ev[e]) for e in ids])


# Subcommands -------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    out = generate(GenSpec(args.family, args.n, args.param, seed))
    _emit(write_edge_list(out.graph), args.output)
    return EXIT_OK


def cmd_split(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read(args.input))
    p = degree_split(g)
    prefix = args.prefix or str(Path(args.input).with_suffix(""))
    Path(f"{prefix}.1.el").write_text(write_edge_list(_side_graph(g, p.side1)))
    Path(f"{prefix}.2.el").write_text(write_edge_list(_side_graph(g, p.side2)))
    counts = p.counts()
    lines = [f"v {v} {counts[v][0]} {counts[v][1]}" for v in sorted(counts)]
    _emit("".join(line + "\n" for line in lines), None)
    return EXIT_OK


def _orientation_for(g: Graph, path: str | None):
    if path is None:
        return forests_decomposition_orientation(g).orientation
    return parse_orientation(_read(path), g)


def cmd_adsplit(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read(args.input))
    mu = _orientation_for(g, args.orientation)
    p = oriented_degree_split(g, mu)
    prefix = args.prefix or str(Path(args.input).with_suffix(""))
    for k, side in ((1, p.side1), (2, p.side2)):
        sub = _side_graph(g, side)
        forward = [mu.forward[e] for e in side]
        Path(f"{prefix}.{k}.or").write_text(write_orientation(Orientation(sub, forward)))
    counts = p.oriented_counts()
    lines = [f"v {v} {' '.join(map(str, counts[v]))}" for v in sorted(counts)]
    _emit("".join(line + "\n" for line in lines), None)
    return EXIT_OK


def cmd_orient(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read(args.input))
    peel = forests_decomposition_orientation(g)
    _emit(write_orientation(peel.orientation), args.output)
    stats = f"degeneracy {peel.degeneracy} alpha-hat {peel.alpha_hat} max-outdeg {peel.orientation.max_outdeg()}\n"
    (sys.stderr if args.output in (None, "-") else sys.stdout).write(stats)
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read(args.input))
    if args.h is not None:
        if args.h < 0:
            raise UsageError("--h must be non-negative")
        run = edge_coloring(g, args.h) if args.mode == "delta" else arboricity_edge_coloring(g, args.h)
        h = run.trace.h
        bound = max_degree(g) + 3 * 2**h if g.m else 0
    else:
        if g.m == 0:
            raise UsageError("graph has no edges")
        run = color_with_epsilon(g, args.epsilon, args.mode)
        h = run.params.h
        bound = run.params.bound
    c = run.coloring
    _emit(write_coloring(g, c), args.output)
    if args.trace:
        Path(args.trace).write_text("".join(line + "\n" for line in run.trace.to_lines()))
    summary = f"delta {max_degree(g)} h {h} palette {c.palette} max-color {c.max_color()} bound {bound}\n"
    (sys.stderr if args.output in (None, "-") else sys.stdout).write(summary)
    if args.verify:
        results = [check_proper(g, c), check_palette(c, bound)]
        failed = [r for r in results if not r]
        for r in failed:
            print(r.line())
        return EXIT_FAIL if failed else EXIT_OK
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = parse_edge_list(_read(args.graph))
    results = []
    if args.coloring:
        c = parse_coloring(_read(args.coloring), g)
        results.append(check_proper(g, c))
        results.append(check_palette(c, args.bound if args.bound is not None else c.palette))
    if args.orientation:
        mu = parse_orientation(_read(args.orientation), g)
        bound = args.outdeg_bound if args.outdeg_bound is not None else g.m
        results.append(check_orientation(g, mu, bound))
    if not results:
        raise UsageError("nothing to verify: pass --coloring and/or --orientation")
    for r in results:
        print(r.line())
    return EXIT_OK if all(results) else EXIT_FAIL


# Benchmarks --------------------------------------------------------------

BENCH_COLUMNS = ("n", "m", "delta", "alpha_hat", "epsilon", "h", "palette", "bound", "wall_ms")


def _bench_row(task: tuple[str, int, str, int, int, int]) -> tuple[list[str], bool]:
    suite, size, eps, seed, repeats, k = task
    if suite == "delta":
        g = generate(GenSpec("gnm", max(size // 10, 2), size, seed)).graph
    else:
        g = generate(GenSpec("forest-union", size, k, seed)).graph
    times = []
    run = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        run = color_with_epsilon(g, eps, suite)
        times.append((time.perf_counter() - t0) * 1000)
    assert run is not None and run.params is not None
    p = run.params
    c = run.coloring
    ok = bool(check_proper(g, c)) and bool(check_palette(c, p.bound)) and c.palette <= p.bound
    row = [
        str(g.n),
        str(g.m),
        str(p.delta),
        str(p.alpha_hat) if p.alpha_hat is not None else "-",
        str(p.epsilon),
        str(p.h),
        str(c.palette),
        str(p.bound),
        f"{statistics.median(times):.1f}",
    ]
    return row, ok


def _parse_size(s: str) -> int:
    s = s.strip()
    try:
        return int(s)
    except ValueError:
        pass
    try:
        x = float(s)
    except ValueError:
        raise UsageError(f"bad size {s!r}") from None
    if not x.is_integer():
        raise UsageError(f"size {s!r} is not an integer")
    return int(x)


def _split_list(raw: str | None, what: str) -> list[str]:
    items = [x for x in (raw or "").replace(",", " ").split() if x]
    if not items:
        raise UsageError(f"--{what} must list at least one value")
    return items


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = [_parse_size(s) for s in _split_list(args.sizes, "sizes")]
    if any(s < 1 for s in sizes):
        raise UsageError("sizes must be positive")
    epsilons = _split_list(args.epsilons, "epsilons")
    for e in epsilons:
        parse_epsilon(e)
    if args.repeats < 1:
        raise UsageError("--repeats must be at least 1")
    seed = args.seed if args.seed is not None else _default_seed()
    tasks = [(args.suite, s, e, seed, args.repeats, args.k) for s in sizes for e in epsilons]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_row, tasks))
    else:
        rows = [_bench_row(t) for t in tasks]
    out = ["# columns: " + "\t".join(BENCH_COLUMNS)]
    out.extend("\t".join(row) for row, _ in rows)
    _emit("\n".join(out) + "\n", args.output)
    bad = [i for i, (_, ok) in enumerate(rows) if not ok]
    for i in bad:
        print(f"FAIL bench row {i}", file=sys.stderr)
    return EXIT_FAIL if bad else EXIT_OK


# Parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chroma", description="Edge coloring through degree splitting.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a seeded graph as an edge list")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", type=int, default=None, help="m for gnm, k for forest-union")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("split", help="Euler degree split into two edge lists")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--prefix", default=None, help="output prefix for <prefix>.1.el and <prefix>.2.el")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("adsplit", help="oriented split into two orientation files")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--orientation", default=None, help="orientation file (default: min-degree peeling)")
    p.add_argument("--prefix", default=None, help="output prefix for <prefix>.1.or and <prefix>.2.or")
    p.set_defaults(func=cmd_adsplit)

    p = sub.add_parser("orient", help="acyclic low-outdegree orientation by peeling")
    p.add_argument("--input", "-i", required=True)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("color", help="recursive edge coloring")
    p.add_argument("--input", "-i", required=True)
    depth = p.add_mutually_exclusive_group(required=True)
    depth.add_argument("--epsilon", default=None, help="decimal or p/q in (0, 1)")
    depth.add_argument("--h", type=int, default=None, help="recursion depth")
    p.add_argument("--mode", choices=("delta", "arboricity"), default="delta")
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--trace", default=None)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring and/or orientation against a graph")
    p.add_argument("--graph", "-g", required=True)
    p.add_argument("--coloring", default=None)
    p.add_argument("--bound", type=int, default=None, help="palette bound (default: declared palette)")
    p.add_argument("--orientation", default=None)
    p.add_argument("--outdeg-bound", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="timing table (TSV) for the trade-off colorers")
    p.add_argument("--suite", choices=("delta", "arboricity"), required=True)
    p.add_argument("--sizes", required=True, help="m values (delta) or n values (arboricity)")
    p.add_argument("--epsilons", default="0.25")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--k", type=int, default=8, help="forest count for the arboricity suite")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            return args.func(args)
    except (UsageError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
