"""Vertex cover and the three coloring procedures.

The cover heuristic strips triangles whole, decomposes what is left, and
drops the largest color class of the half-integral core.  For unit-disk
inputs the core colors with 4 colors and the cover is within 1.5 of
optimal; with 6 colors (arbitrary radii) the factor is 5/3.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import BadParameter, MinDegreeExceeded
from .geometry import GeometricInstance, sector_clique
from .graphs import Graph, VertexSet, degeneracy_ordering, induced_subgraph
from .matching import nt_decompose
from .rng import Rng


@dataclass(frozen=True)
class Coloring:
    """Per-vertex colors 1..num_colors (0 vertices use 0 colors)."""

    colors: tuple[int, ...]
    num_colors: int

    @staticmethod
    def of(colors: Iterable[int]) -> "Coloring":
        colors = tuple(colors)
        num = max(colors, default=0)
        if colors and (min(colors) < 1 or len(set(colors)) != num):
            raise BadParameter("colors must form the contiguous range 1..num_colors")
        return Coloring(colors, num)

    def check_proper(self, G: Graph) -> None:
        """Raise unless this is a proper coloring of ``G``."""
        if len(self.colors) != G.n:
            raise BadParameter("coloring does not match the graph's vertex count")
        for u, v in G.edges:
            if self.colors[u] == self.colors[v]:
                raise BadParameter(f"edge ({u}, {v}) is monochromatic")


@dataclass(frozen=True)
class ArrivalSequence:
    """Order in which vertices are presented to the on-line colorer."""

    order: tuple[int, ...]

    @staticmethod
    def of(order: Iterable[int]) -> "ArrivalSequence":
        order = tuple(order)
        if sorted(order) != list(range(len(order))):
            raise BadParameter("arrival order must be a permutation of 0..n-1")
        return ArrivalSequence(order)

    @staticmethod
    def random(n: int, seed: int) -> "ArrivalSequence":
        items = list(range(n))
        Rng(seed).shuffle(items)
        return ArrivalSequence(tuple(items))


def _first_fit(G: Graph, order: Iterable[int]) -> Coloring:
    colors = [0] * G.n
    for v in order:
        used = {colors[u] for u in G.neighbors(v) if colors[u]}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    return Coloring.of(colors)


def color_triangle_free(G: Graph, degree_bound: int = 3) -> Coloring:
    """Peel minimum-degree vertices while <= degree_bound, then color the
    stack in reverse with first-fit; uses at most degree_bound + 1 colors.

    If peeling stalls, the remaining vertices induce a subgraph of minimum
    degree above the bound, which certifies the input is outside the
    intended class; that witness set rides on MinDegreeExceeded.
    """
    degree = [G.degree(v) for v in range(G.n)]
    heap = [(degree[v], v) for v in range(G.n)]
    heapq.heapify(heap)
    removed = [False] * G.n
    stack: list[int] = []
    while heap:
        current, v = heapq.heappop(heap)
        if removed[v] or current != degree[v]:
            continue
        if current > degree_bound:
            alive = [u for u in range(G.n) if not removed[u]]
            raise MinDegreeExceeded(
                f"residual subgraph has minimum degree {current} > {degree_bound}",
                VertexSet.of(alive, G.n),
            )
        removed[v] = True
        stack.append(v)
        for u in G.neighbors(v):
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))
    # each vertex sees at most degree_bound colored neighbors in this pass
    return _first_fit(G, reversed(stack))


def vertex_cover(G: Graph, color_bound: int = 4) -> VertexSet:
    """Cover every edge of ``G``.

    Triangles are removed whole (lowest edge first, lowest apex), the
    triangle-free remainder is decomposed, its half-integral core is colored
    with ``color_bound`` colors, and the largest color class is spared.
    Within max(1.5, 2 * (1 - 1/color_bound)) of optimal whenever the core
    coloring succeeds: bound 4 for unit-disk inputs, 6 for arbitrary radii.
    """
    if color_bound < 2:
        raise BadParameter("color bound must be at least 2")
    alive = [True] * G.n
    working = [set(G.neighbors(v)) for v in range(G.n)]
    taken: list[int] = []
    while True:
        hit = None
        for u, v in G.edges:
            if alive[u] and alive[v]:
                common = working[u] & working[v]
                if common:
                    hit = (u, v, min(common))
                    break
        if hit is None:
            break
        for w in hit:
            alive[w] = False
            for x in working[w]:
                working[x].discard(w)
            working[w] = set()
            taken.append(w)

    remainder = VertexSet.of([v for v in range(G.n) if alive[v]], G.n)
    core, core_ids = induced_subgraph(G, remainder)
    decomposition = nt_decompose(core)
    cover = taken + [core_ids[v] for v in decomposition.forced]

    if len(decomposition.half) > 0:
        half_graph, half_ids = induced_subgraph(core, decomposition.half)
        try:
            coloring = color_triangle_free(half_graph, color_bound - 1)
        except MinDegreeExceeded as exc:
            original = [core_ids[half_ids[w]] for w in exc.witness]
            raise MinDegreeExceeded(str(exc), VertexSet.of(original, G.n)) from None
        counts = [0] * (coloring.num_colors + 1)
        for c in coloring.colors:
            counts[c] += 1
        spared = max(range(1, coloring.num_colors + 1), key=lambda c: (counts[c], -c))
        cover.extend(
            core_ids[half_ids[v]]
            for v, c in enumerate(coloring.colors)
            if c != spared
        )
    return VertexSet.of(cover, G.n)


def color_offline(G: Graph) -> Coloring:
    """First-fit along the reverse minimum-degree removal order.

    Uses at most degeneracy + 1 colors, which is within 3x of optimal on
    unit-disk graphs and 6x on arbitrary-radius disk graphs.
    """
    return _first_fit(G, reversed(degeneracy_ordering(G).order))


def color_online_firstfit(G: Graph, sequence: ArrivalSequence) -> Coloring:
    """Color each arriving vertex with the smallest color unused by the
    neighbors presented before it; never recolors.

    Uses at most max_degree + 1 colors on any graph and is 6-competitive
    with the off-line optimum on unit-disk graphs.
    """
    if len(sequence.order) != G.n:
        raise BadParameter("arrival sequence does not match the graph")
    return _first_fit(G, sequence.order)


def coloring_lower_bound(G: Graph, inst: Optional[GeometricInstance] = None) -> int:
    """Certified lower bound on the chromatic number of a unit-disk input.

    Combines ceil(degeneracy / 3) + 1 with the geometric sector clique when
    the instance is available.
    """
    if G.n == 0:
        return 0
    degeneracy = degeneracy_ordering(G).degeneracy
    bound = (degeneracy + 2) // 3 + 1
    if inst is not None:
        bound = max(bound, len(sector_clique(inst, G)))
    return bound
