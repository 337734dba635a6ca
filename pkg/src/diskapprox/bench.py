"""Benchmark harness: seeded instances, heuristic vs oracle, one CSV row each.

Instances are connected unit-disk (or arbitrary-radius) samples whose box
side targets a mean degree, the default matching the regime the guarantees
are usually exercised in.  Rows are emitted in generation order, which is
a pure function of the master seed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional

from . import covering, domination, exact
from .errors import BadParameter
from .geometry import instance_to_graph, random_connected_instance
from .rng import Rng, derive_seed

PROBLEMS = ("vc", "color", "online-color", "mis", "ds", "ids", "tds", "cds")

UNIT_BOUNDS = {
    "vc": 1.5,
    "color": 3.0,
    "online-color": 6.0,
    "mis": 3.0,
    "ds": 5.0,
    "ids": 5.0,
    "tds": 10.0,
    "cds": 10.0,
}
CIRCLE_BOUNDS = {"vc": 5.0 / 3.0, "color": 6.0, "mis": 5.0}

CSV_HEADER = "seed,n,box,radius,problem,heur,opt,ratio,bound,ms"


@dataclass(frozen=True)
class BenchRecord:
    """One heuristic-vs-oracle measurement."""

    seed: int
    n: int
    box: float
    radius: float
    radius_high: Optional[float]
    problem: str
    heur: int
    opt: int
    ratio: float
    bound: float
    ms: int

    def to_csv_row(self, with_timing: bool = False) -> str:
        radius = format(self.radius, "g")
        if self.radius_high is not None:
            radius += f":{format(self.radius_high, 'g')}"
        fields = (
            str(self.seed),
            str(self.n),
            format(self.box, ".6g"),
            radius,
            self.problem,
            str(self.heur),
            str(self.opt),
            format(self.ratio, ".6g"),
            format(self.bound, ".6g"),
            str(self.ms if with_timing else 0),
        )
        return ",".join(fields)


def _reach_moments(radius: float, radius_high: Optional[float]) -> tuple[float, float, float]:
    """E[reach^2], E[reach^3], E[reach^4] for reach = r_i + r_j."""
    if radius_high is None or radius_high == radius:
        reach = 2.0 * radius
        return reach**2, reach**3, reach**4

    span = radius_high - radius

    def single(power: int) -> float:
        return (radius_high ** (power + 1) - radius ** (power + 1)) / ((power + 1) * span)

    def moment(k: int) -> float:
        return sum(math.comb(k, i) * single(i) * single(k - i) for i in range(k + 1))

    return moment(2), moment(3), moment(4)


def tuned_box(n: int, radius: float, radius_high: Optional[float], mean_degree: float) -> float:
    """Box side giving the target expected mean degree, boundary effects included.

    For two uniform points in a square of side L and a reach at most L, the
    edge probability is exactly pi t^2 - (8/3) t^3 + t^4 / 2 with t = reach/L;
    averaging over the radius range keeps the formula exact because it is a
    polynomial in the reach.  The box never shrinks below the largest reach,
    which caps the density at nearly complete graphs for tiny n.
    """
    largest_reach = 2.0 * (radius_high if radius_high is not None else radius)
    if n <= 1:
        return largest_reach
    m2, m3, m4 = _reach_moments(radius, radius_high)

    def edge_probability(box: float) -> float:
        return (
            math.pi * m2 / box**2
            - (8.0 / 3.0) * m3 / box**3
            + m4 / (2.0 * box**4)
        )

    target = mean_degree / (n - 1)
    low = largest_reach
    if edge_probability(low) <= target:
        return low
    high = low
    while edge_probability(high) > target:
        high *= 2.0
    for _ in range(60):
        mid = (low + high) / 2.0
        if edge_probability(mid) > target:
            low = mid
        else:
            high = mid
    return high


def _solve_problem(problem, G, inst, variant, order_seed, limits):
    if problem == "vc":
        heur = len(covering.vertex_cover(G, 4 if variant == "unit" else 6))
        opt, _ = exact.exact_vc(G, limits)
    elif problem == "color":
        heur = covering.color_offline(G).num_colors
        opt, _ = exact.exact_chromatic(G, limits)
    elif problem == "online-color":
        sequence = covering.ArrivalSequence.random(G.n, order_seed)
        heur = covering.color_online_firstfit(G, sequence).num_colors
        opt, _ = exact.exact_chromatic(G, limits)
    elif problem == "mis":
        if variant == "unit":
            heur = len(domination.independent_set_geometric(inst))
        else:
            heur = len(domination.independent_set_graph(G, 5))
        opt, _ = exact.exact_mis(G, limits)
    elif problem == "ds":
        heur = len(domination.dominating_set(G))
        opt, _ = exact.exact_domination(G, "plain", limits)
    elif problem == "ids":
        heur = len(domination.dominating_set(G))
        opt, _ = exact.exact_domination(G, "independent", limits)
    elif problem == "tds":
        heur = len(domination.total_dominating_set(G))
        opt, _ = exact.exact_domination(G, "total", limits)
    elif problem == "cds":
        cover, _ = domination.connected_dominating_set(G)
        heur = len(cover)
        opt, _ = exact.exact_domination(G, "connected", limits)
    else:
        raise BadParameter(f"unknown problem {problem!r}")
    if problem == "mis":
        ratio = opt / heur if heur else 1.0
    else:
        ratio = heur / opt if opt else 1.0
    return heur, opt, ratio


def run_bench(
    instances: int,
    n_low: int,
    n_high: int,
    problems: tuple[str, ...],
    seed: int,
    radius: float = 1.0,
    radius_high: Optional[float] = None,
    mean_degree: float = 4.0,
    limits: exact.OracleLimits = exact.DEFAULT_LIMITS,
) -> list[BenchRecord]:
    """Benchmark ``instances`` connected instances over the requested problems."""
    if instances < 1:
        raise BadParameter("need at least one instance")
    if not 1 <= n_low <= n_high:
        raise BadParameter("bad n range")
    unknown = [p for p in problems if p not in PROBLEMS]
    if unknown:
        raise BadParameter(f"unknown problems: {unknown}")
    variant = "unit" if radius_high is None else "circle"
    bounds = UNIT_BOUNDS if variant == "unit" else CIRCLE_BOUNDS
    for p in problems:
        if p not in bounds:
            raise BadParameter(f"no {variant}-variant guarantee for problem {p!r}")

    size_stream = Rng(derive_seed(seed, 1 << 32))
    records: list[BenchRecord] = []
    for index in range(instances):
        n = n_low + size_stream.randrange(n_high - n_low + 1)
        instance_seed = derive_seed(seed, index)
        box = tuned_box(n, radius, radius_high, mean_degree)
        inst = random_connected_instance(n, box, radius, instance_seed, radius_high)
        G = instance_to_graph(inst)
        for problem in problems:
            order_seed = derive_seed(instance_seed, 7)
            started = time.perf_counter()
            heur, opt, ratio = _solve_problem(problem, G, inst, variant, order_seed, limits)
            elapsed_ms = int((time.perf_counter() - started) * 1000)
            records.append(
                BenchRecord(
                    seed=instance_seed,
                    n=n,
                    box=box,
                    radius=radius,
                    radius_high=radius_high,
                    problem=problem,
                    heur=heur,
                    opt=opt,
                    ratio=ratio,
                    bound=bounds[problem],
                    ms=elapsed_ms,
                )
            )
    return records


def records_to_csv(records: list[BenchRecord], with_timing: bool = False) -> str:
    lines = [CSV_HEADER]
    lines.extend(record.to_csv_row(with_timing) for record in records)
    return "\n".join(lines) + "\n"
