"""Command line interface.

Subcommands: gen, solve, exact, verify, bench, bound.  solve and exact
print a JSON document, bench prints CSV, gen prints an instance file; with
a fixed --seed every invocation is byte-reproducible.  Exit codes: 0 on
success, 1 on usage or input errors, 2 when a heuristic certifies the
input is outside its graph class.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from . import checks, covering, domination, exact
from .errors import ClassCertificateError, DiskApproxError
from .formats import (
    InstanceFile,
    parse_solution,
    read_instance,
    render_instance,
    solution_document,
    solution_to_json,
)
from .geometry import (
    polygon_independence_bound,
    random_connected_instance,
    random_instance,
)

SOLVE_PROBLEMS = ("vc", "color", "online-color", "mis", "ds", "ids", "tds", "cds")


def _parse_radius_spec(spec: str) -> tuple[float, float | None]:
    if ":" in spec:
        low_text, high_text = spec.split(":", 1)
        return float(low_text), float(high_text)
    return float(spec), None


def _parse_order_spec(spec: str, n: int) -> covering.ArrivalSequence:
    if spec == "ids":
        return covering.ArrivalSequence.of(range(n))
    if spec.startswith("random:"):
        return covering.ArrivalSequence.random(n, int(spec.split(":", 1)[1]))
    return covering.ArrivalSequence.of(int(tok) for tok in spec.split(","))


def _cmd_gen(args) -> int:
    radius, radius_high = _parse_radius_spec(args.radius)
    if args.connected:
        inst = random_connected_instance(args.n, args.box, radius, args.seed, radius_high)
    else:
        inst = random_instance(args.n, args.box, radius, args.seed, radius_high)
    text = render_instance(InstanceFile.from_instance(inst))
    if args.output:
        with open(args.output, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_solve(args) -> int:
    doc = read_instance(args.instance)
    G = doc.to_graph()
    inst = doc.to_geometric_instance() if doc.mode == "geometric" else None
    if args.variant:
        variant = args.variant
    else:
        variant = "unit" if inst is None or inst.unit else "circle"
    meta: dict = {"variant": variant, "n": G.n, "m": G.m}
    problem = args.problem

    if problem == "vc":
        cover = covering.vertex_cover(G, 4 if variant == "unit" else 6)
        result = solution_document(problem, len(cover), vertices=cover, meta=meta)
    elif problem == "color":
        coloring = covering.color_offline(G)
        result = solution_document(problem, coloring.num_colors, colors=coloring.colors, meta=meta)
    elif problem == "online-color":
        sequence = _parse_order_spec(args.order, G.n)
        coloring = covering.color_online_firstfit(G, sequence)
        meta["order"] = list(sequence.order)
        result = solution_document(problem, coloring.num_colors, colors=coloring.colors, meta=meta)
    elif problem == "mis":
        if inst is not None and variant == "unit" and inst.unit:
            chosen = domination.independent_set_geometric(inst)
            meta["method"] = "sweep"
        else:
            chosen = domination.independent_set_graph(G, 3 if variant == "unit" else 5)
            meta["method"] = "eligibility-search"
        result = solution_document(problem, len(chosen), vertices=chosen, meta=meta)
    elif problem in ("ds", "ids"):
        chosen = domination.dominating_set(G)
        result = solution_document(problem, len(chosen), vertices=chosen, meta=meta)
    elif problem == "tds":
        chosen = domination.total_dominating_set(G)
        result = solution_document(problem, len(chosen), vertices=chosen, meta=meta)
    elif problem == "cds":
        chosen, trace = domination.connected_dominating_set(G, args.root)
        meta["root"] = args.root if args.root is not None else 0
        meta["trace"] = trace.to_dict()
        result = solution_document(problem, len(chosen), vertices=chosen, meta=meta)
    else:
        raise DiskApproxError(f"unknown problem {problem!r}")
    sys.stdout.write(solution_to_json(result))
    return 0


def _cmd_exact(args) -> int:
    doc = read_instance(args.instance)
    G = doc.to_graph()
    meta = {"n": G.n, "m": G.m, "oracle": True}
    problem = args.problem
    if problem == "vc":
        value, witness = exact.exact_vc(G)
        result = solution_document(problem, value, vertices=witness, meta=meta)
    elif problem in ("color", "online-color"):
        value, coloring = exact.exact_chromatic(G)
        result = solution_document(problem, value, colors=coloring.colors, meta=meta)
    elif problem == "mis":
        value, witness = exact.exact_mis(G)
        result = solution_document(problem, value, vertices=witness, meta=meta)
    else:
        variants = {"ds": "plain", "ids": "independent", "tds": "total", "cds": "connected"}
        value, witness = exact.exact_domination(G, variants[problem])
        result = solution_document(problem, value, vertices=witness, meta=meta)
    sys.stdout.write(solution_to_json(result))
    return 0


def _validate_solution(G, doc) -> tuple[bool, str]:
    problem = doc["problem"]
    value = doc["value"]
    if "colors" in doc:
        colors = doc["colors"]
        if not checks.is_proper_coloring(G, colors):
            return False, "coloring is not proper"
        if value != max(colors, default=0):
            return False, "value does not match the number of colors"
        return True, "ok"
    vertices = doc.get("vertices", [])
    if value != len(vertices):
        return False, "value does not match the vertex count"
    validators = {
        "vc": checks.is_vertex_cover,
        "mis": checks.is_independent_set,
        "ds": checks.is_dominating_set,
        "ids": checks.is_independent_dominating_set,
        "tds": checks.is_total_dominating_set,
        "cds": checks.is_connected_dominating_set,
    }
    validator = validators.get(problem)
    if validator is None:
        return False, f"unknown problem {problem!r}"
    if not validator(G, vertices):
        return False, f"not a valid {problem} solution"
    return True, "ok"


def _cmd_verify(args) -> int:
    doc = read_instance(args.instance)
    G = doc.to_graph()
    with open(args.solution, "r", encoding="utf-8") as handle:
        solution = parse_solution(handle.read())
    ok, reason = _validate_solution(G, solution)
    print("valid" if ok else f"invalid: {reason}")
    return 0 if ok else 1


def _cmd_bench(args) -> int:
    low_text, high_text = args.n_range.split(":", 1)
    radius, radius_high = _parse_radius_spec(args.radius)
    problems = tuple(p.strip() for p in args.problems.split(",") if p.strip())
    records = bench_mod.run_bench(
        instances=args.instances,
        n_low=int(low_text),
        n_high=int(high_text),
        problems=problems,
        seed=args.seed,
        radius=radius,
        radius_high=radius_high,
        mean_degree=args.mean_degree,
    )
    sys.stdout.write(bench_mod.records_to_csv(records, with_timing=args.timings))
    return 0


def _cmd_bound(args) -> int:
    print(polygon_independence_bound(args.polygon).independence_bound)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diskapprox",
        description="Approximation heuristics and exact oracles for disk intersection graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random geometric instance")
    gen.add_argument("-n", type=int, required=True, help="number of disks")
    gen.add_argument("--box", type=float, required=True, help="side of the sampling square")
    gen.add_argument("--radius", default="1", help="disk radius, or LOW:HIGH for a uniform range")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument(
        "--connected",
        action="store_true",
        help="rejection-sample until the derived graph is connected",
    )
    gen.add_argument("-o", "--output", help="write to this path instead of stdout")
    gen.set_defaults(func=_cmd_gen)

    solve = sub.add_parser("solve", help="run a heuristic on an instance file")
    solve.add_argument("instance")
    solve.add_argument("--problem", required=True, choices=SOLVE_PROBLEMS)
    solve.add_argument("--variant", choices=("unit", "circle"), default=None)
    solve.add_argument("--root", type=int, default=None, help="root vertex for cds")
    solve.add_argument(
        "--order",
        default="ids",
        help="arrival order for online-color: 'ids', 'random:SEED', or a comma list",
    )
    solve.set_defaults(func=_cmd_solve)

    exact_cmd = sub.add_parser("exact", help="run an exact oracle on an instance file")
    exact_cmd.add_argument("instance")
    exact_cmd.add_argument("--problem", required=True, choices=SOLVE_PROBLEMS)
    exact_cmd.set_defaults(func=_cmd_exact)

    verify = sub.add_parser("verify", help="check a solution file against an instance")
    verify.add_argument("instance")
    verify.add_argument("solution")
    verify.set_defaults(func=_cmd_verify)

    bench = sub.add_parser("bench", help="heuristic vs oracle ratios as CSV")
    bench.add_argument("--instances", type=int, required=True)
    bench.add_argument("--n-range", required=True, help="LOW:HIGH vertex counts")
    bench.add_argument("--problems", required=True, help="comma-separated problem names")
    bench.add_argument("--seed", type=int, required=True)
    bench.add_argument("--radius", default="1", help="radius, or LOW:HIGH for the circle variant")
    bench.add_argument("--mean-degree", type=float, default=4.0)
    bench.add_argument(
        "--timings",
        action="store_true",
        help="record wall-clock ms (off by default so output is reproducible)",
    )
    bench.set_defaults(func=_cmd_bench)

    bound = sub.add_parser("bound", help="neighborhood independence bound for regular polygons")
    bound.add_argument("--polygon", type=int, required=True, help="number of sides")
    bound.set_defaults(func=_cmd_bound)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        return args.func(args)
    except ClassCertificateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DiskApproxError, OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
