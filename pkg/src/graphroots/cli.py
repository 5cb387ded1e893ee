"""Command-line interface.

Exit codes: 0 success or YES, 1 NO (or a false check), 2 usage or I/O
error, 3 UNDECIDED because a budget ran out.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from .budget import Budget
from .certificates.audits import HypothesisError, audit_deg5_root, audit_deg6_instance, size_certificate_deg6
from .certificates.pathwidth import pathwidth_at_most, pathwidth_lower_bound
from .generators import Profile, ladder, planted, subdivide, wall
from .graph import Graph, components, is_square_root, max_degree, square
from .io import ParseError, emit_dot, read_graph, write_graph
from .recognizable import find_recognizable_edge, recognizable_edges
from .solver import (
    PATHWIDTH_LIMIT,
    SIZE_LIMIT,
    SolveOutcome,
    Status,
    solve,
    solve_max_deg5,
    solve_max_deg6,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load(path: str, fmt: str) -> Graph:
    return read_graph(_read_text(path), fmt)


def _budget(args) -> Budget:
    return Budget(max_nodes=args.node_budget, max_seconds=args.time_budget)


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def format_outcome(out: SolveOutcome) -> str:
    if out.status is Status.YES:
        lines = ["YES", f"ROOT {len(out.witness)}"]
        lines.extend(f"{u} {v}" for u, v in out.witness)
    elif out.status is Status.NO:
        lines = [f"NO {out.certificate.value}"]
        if out.detail:
            lines.append(f"# {out.detail}")
    else:
        lines = ["UNDECIDED budget"]
    return "\n".join(lines) + "\n"


def _exit_for(out: SolveOutcome) -> int:
    return {Status.YES: EXIT_OK, Status.NO: EXIT_NO, Status.UNDECIDED: EXIT_UNDECIDED}[out.status]


def pick_pipeline(g: Graph) -> str:
    delta = max_degree(g)
    if delta <= 5:
        return "deg5"
    if delta <= 6:
        return "deg6"
    return "general"


def run_pipeline(g: Graph, budget: Budget, threads: int = 1) -> tuple[str, SolveOutcome]:
    pipeline = pick_pipeline(g)
    if pipeline == "deg5":
        return pipeline, solve_max_deg5(g, budget)
    if pipeline == "deg6":
        return pipeline, solve_max_deg6(g, budget)
    return pipeline, solve(g, budget, threads=threads)


def _cheap_no(g: Graph) -> SolveOutcome | None:
    """A NO-certificate reachable without search, for graphs over the vertex cap."""
    pipeline = pick_pipeline(g)
    if pipeline == "general":
        return None
    for comp in components(g):
        sub, _ = g.induced_subgraph(comp)
        if pipeline == "deg5" and sub.n > PATHWIDTH_LIMIT + 1 and pathwidth_lower_bound(sub) > PATHWIDTH_LIMIT:
            return solve_max_deg5(g)
        if sub.n > SIZE_LIMIT and find_recognizable_edge(sub) is None:
            return solve_max_deg6(g)
    return None


def _emit(args, text: str) -> None:
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_square(args) -> int:
    h = _load(args.input, args.format)
    _emit(args, write_graph(square(h), args.format))
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load(args.input, args.format)
    if g.n > args.vertex_cap:
        out = _cheap_no(g)
        if out is None:
            raise UsageError(f"graph has {g.n} vertices, above the cap of {args.vertex_cap}, and no certificate resolves it")
        pipeline = pick_pipeline(g)
    else:
        threads = 1 if args.deterministic else args.threads
        pipeline, out = run_pipeline(g, _budget(args), threads)
    _emit(args, format_outcome(out))
    if args.emit_dot:
        with open(args.emit_dot, "w") as fh:
            fh.write(emit_dot(g, out.witness if out.status is Status.YES else None))
    print(f"pipeline {pipeline} nodes {out.nodes}", file=sys.stderr)
    return _exit_for(out)


def cmd_check_root(args) -> int:
    g = _load(args.input, args.format)
    h = _load(args.root, args.format)
    if h.n != g.n:
        raise UsageError(f"root has {h.n} vertices but graph has {g.n}")
    ok = is_square_root(h, g)
    _emit(args, f"{str(ok).lower()}\n")
    return EXIT_OK if ok else EXIT_NO


def cmd_recognizable(args) -> int:
    g = _load(args.input, args.format)
    _emit(args, "".join(f"{w}\n" for _, w in recognizable_edges(g)))
    return EXIT_OK


def cmd_certify(args) -> int:
    g = _load(args.input, args.format)
    lines = [
        f"vertices: {g.n}",
        f"edges: {g.m}",
        f"max_degree: {max_degree(g)}",
        f"components: {len(components(g))}",
        f"pathwidth_lower_bound: {pathwidth_lower_bound(g)}",
        f"pathwidth_at_most_{PATHWIDTH_LIMIT}: {pathwidth_at_most(g, PATHWIDTH_LIMIT, _budget(args)).answer.value}",
    ]
    rec = find_recognizable_edge(g)
    lines.append(f"recognizable_edge: {rec[1] if rec else 'none'}")
    try:
        cert = size_certificate_deg6(g)
        lines.append(f"size_certificate: {cert if cert else 'none'}")
    except HypothesisError as err:
        lines.append(f"size_certificate: not applicable ({err.hypothesis})")
    text = "\n".join(lines) + "\n"
    if args.root:
        h = _load(args.root, args.format)
        if h.n != g.n or not is_square_root(h, g):
            raise UsageError("--root is not a square root of the input graph")
        text += f"[audit deg5 source={args.source}]\n" + audit_deg5_root(h, args.source).to_text()
        text += "[audit deg6]\n" + audit_deg6_instance(h).to_text()
    _emit(args, text)
    return EXIT_OK


def _generate(args) -> Graph:
    family = args.family
    if family == "wall":
        h = wall(args.height)
    elif family == "subdivided-wall":
        h = subdivide(wall(args.height))
    elif family == "ladder":
        h = ladder(args.n)
    else:
        h = planted(args.seed, args.n, args.profile).root
    return square(h) if args.square else h


def cmd_gen(args) -> int:
    _emit(args, write_graph(_generate(args), args.format))
    return EXIT_OK


BENCH_FAMILIES = ("ladder", "subdivided-wall", "planted-le5", "planted-le6", "planted-unbounded")


def bench_rows(family: str, sizes: Sequence[int], seed: int, budget: Budget) -> list[dict[str, object]]:
    """One solved square per size; the ``seconds`` column is the only nondeterministic field."""
    rows = []
    for size in sizes:
        if family == "ladder":
            g = square(ladder(size))
        elif family == "subdivided-wall":
            g = square(subdivide(wall(size)))
        else:
            g = planted(seed, size, family.split("-", 1)[1]).square
        started = time.perf_counter()
        pipeline, out = run_pipeline(g, budget)
        rows.append(
            dict(
                family=family,
                size=size,
                n=g.n,
                m=g.m,
                max_degree=max_degree(g),
                pipeline=pipeline,
                status=out.status.value,
                certificate=out.certificate.value if out.certificate else "-",
                nodes=out.nodes,
                seconds=f"{time.perf_counter() - started:.4f}",
            )
        )
    return rows


def cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok]
    if not sizes or min(sizes) < 1:
        raise UsageError("--sizes needs a comma-separated list of positive integers")
    rows = bench_rows(args.family, sizes, args.seed, _budget(args))
    cols = list(rows[0])
    lines = ["\t".join(cols)]
    lines.extend("\t".join(str(r[c]) for c in cols) for r in rows)
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", default="-", help="input path, '-' for stdin")
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    common.add_argument("--output", default="-", help="output path, '-' for stdout")
    common.add_argument("--node-budget", type=_positive_int, default=None)
    common.add_argument("--time-budget", type=_positive_float, default=None, help="seconds")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=_positive_int, default=1)
    common.add_argument("--deterministic", action="store_true", help="force single-threaded search")
    common.add_argument("--emit-dot", metavar="PATH", default=None)

    parser = argparse.ArgumentParser(prog="graphroots", description="Square roots of low-degree graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("square", parents=[common], help="read H, write its square").set_defaults(func=cmd_square)

    p = sub.add_parser("solve", parents=[common], help="decide whether the input has a square root")
    p.add_argument("--vertex-cap", type=_positive_int, default=5000)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check-root", parents=[common], help="is --root a square root of --input?")
    p.add_argument("--root", required=True)
    p.set_defaults(func=cmd_check_root)

    sub.add_parser("recognizable", parents=[common], help="list recognizable edges").set_defaults(func=cmd_recognizable)

    p = sub.add_parser("certify", parents=[common], help="width bounds, size certificate, optional root audits")
    p.add_argument("--root", default=None, help="a square root of the input to audit")
    p.add_argument("--source", type=int, default=0, help="BFS source for the degree-5 audit")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("gen", parents=[common], help="generate a graph")
    p.add_argument("family", choices=("wall", "subdivided-wall", "ladder", "planted"))
    p.add_argument("--height", type=int, default=2)
    p.add_argument("--n", type=_positive_int, default=5)
    p.add_argument("--profile", choices=[pr.value for pr in Profile], default="le6")
    p.add_argument("--square", action="store_true", help="emit the square of the generated graph")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="timed sweep over a generated family")
    p.add_argument("--family", choices=BENCH_FAMILIES, default="planted-le6")
    p.add_argument("--sizes", default="10,20,30,40")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, UsageError, HypothesisError, OSError, ValueError, RuntimeError) as err:
        print(f"graphroots: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
