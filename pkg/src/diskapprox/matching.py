"""Bipartite maximum matching, the Konig cover construction, and the
Nemhauser-Trotter style half-integral decomposition built from them."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import BadParameter, IdOutOfRange, NotMaximumMatching
from .graphs import Graph, VertexSet


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with separate left/right id spaces; build with build_bipartite()."""

    left_n: int
    right_n: int
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def left_adjacency(self) -> tuple[tuple[int, ...], ...]:
        lists: list[list[int]] = [[] for _ in range(self.left_n)]
        for l, r in self.edges:
            lists[l].append(r)
        return tuple(tuple(sorted(nbrs)) for nbrs in lists)


@dataclass(frozen=True)
class NtDecomposition:
    """Half-integral cover decomposition of a graph's vertex set.

    ``forced`` lies inside some optimum vertex cover; any cover of the
    subgraph induced on ``half`` together with ``forced`` covers the whole
    graph; ``excluded`` is independent with all its neighbors in ``forced``;
    and len(forced) + len(half)/2 never exceeds the optimum cover size.
    """

    forced: VertexSet
    half: VertexSet
    excluded: VertexSet

    @property
    def lower_bound(self) -> float:
        return len(self.forced) + len(self.half) / 2.0


def build_bipartite(left_n: int, right_n: int, edges: Iterable[tuple[int, int]]) -> BipartiteGraph:
    if left_n < 0 or right_n < 0:
        raise BadParameter("side sizes must be nonnegative")
    seen: set[tuple[int, int]] = set()
    for l, r in edges:
        if not (0 <= l < left_n) or not (0 <= r < right_n):
            raise IdOutOfRange(f"edge ({l}, {r}) outside {left_n}x{right_n}")
        seen.add((l, r))
    return BipartiteGraph(left_n, right_n, tuple(sorted(seen)))


def max_matching(B: BipartiteGraph) -> tuple[tuple[int, int], ...]:
    """Maximum-cardinality matching by layered augmentation (Hopcroft-Karp).

    Returned as (left, right) pairs sorted by left id; scanning order is
    fixed so the matching is deterministic.
    """
    adjacency = B.left_adjacency
    match_left = [-1] * B.left_n
    match_right = [-1] * B.right_n
    layer = [0] * B.left_n

    def build_layers() -> bool:
        queue: deque[int] = deque()
        for l in range(B.left_n):
            if match_left[l] == -1:
                layer[l] = 0
                queue.append(l)
            else:
                layer[l] = -1
        free_right_reachable = False
        while queue:
            l = queue.popleft()
            for r in adjacency[l]:
                nxt = match_right[r]
                if nxt == -1:
                    free_right_reachable = True
                elif layer[nxt] == -1:
                    layer[nxt] = layer[l] + 1
                    queue.append(nxt)
        return free_right_reachable

    def augment(l: int) -> bool:
        for r in adjacency[l]:
            nxt = match_right[r]
            if nxt == -1 or (layer[nxt] == layer[l] + 1 and augment(nxt)):
                match_left[l] = r
                match_right[r] = l
                return True
        layer[l] = -1
        return False

    while build_layers():
        for l in range(B.left_n):
            if match_left[l] == -1:
                augment(l)
    return tuple((l, match_left[l]) for l in range(B.left_n) if match_left[l] != -1)


def konig_cover(
    B: BipartiteGraph, matching: Iterable[tuple[int, int]]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Minimum vertex cover of ``B`` from a maximum matching.

    Alternating reachability from the unmatched left vertices; the cover is
    the unreached lefts plus the reached rights.  Its size must equal the
    matching size and it must touch every edge; anything else proves the
    supplied matching was not maximum.
    """
    matching = tuple(matching)
    edge_set = set(B.edges)
    match_left: dict[int, int] = {}
    match_right: dict[int, int] = {}
    for l, r in matching:
        if (l, r) not in edge_set:
            raise BadParameter(f"({l}, {r}) is not an edge of the bipartite graph")
        if l in match_left or r in match_right:
            raise BadParameter("not a matching: repeated endpoint")
        match_left[l] = r
        match_right[r] = l

    adjacency = B.left_adjacency
    reached_left = [False] * B.left_n
    reached_right = [False] * B.right_n
    queue: deque[int] = deque()
    for l in range(B.left_n):
        if l not in match_left:
            reached_left[l] = True
            queue.append(l)
    while queue:
        l = queue.popleft()
        for r in adjacency[l]:
            if match_left.get(l) == r or reached_right[r]:
                continue  # leave via non-matching edges only
            reached_right[r] = True
            partner = match_right.get(r)
            if partner is not None and not reached_left[partner]:
                reached_left[partner] = True
                queue.append(partner)

    cover_left = tuple(l for l in range(B.left_n) if not reached_left[l])
    cover_right = tuple(r for r in range(B.right_n) if reached_right[r])
    if len(cover_left) + len(cover_right) != len(matching):
        raise NotMaximumMatching(
            f"cover size {len(cover_left) + len(cover_right)} != matching size {len(matching)}"
        )
    left_set = set(cover_left)
    right_set = set(cover_right)
    for l, r in B.edges:
        if l not in left_set and r not in right_set:
            raise NotMaximumMatching(f"edge ({l}, {r}) left uncovered")
    return cover_left, cover_right


def nt_decompose(G: Graph) -> NtDecomposition:
    """Decompose via a minimum cover of the bipartite double graph.

    Each edge (u, v) becomes (u_left, v_right) and (v_left, u_right); a vertex
    scores half per copy inside the Konig cover, and the vertices with score
    1, 1/2 and 0 form ``forced``, ``half`` and ``excluded``.
    """
    double_edges: list[tuple[int, int]] = []
    for u, v in G.edges:
        double_edges.append((u, v))
        double_edges.append((v, u))
    double = build_bipartite(G.n, G.n, double_edges)
    cover_left, cover_right = konig_cover(double, max_matching(double))
    copies = [0] * G.n
    for l in cover_left:
        copies[l] += 1
    for r in cover_right:
        copies[r] += 1
    forced = [v for v in range(G.n) if copies[v] == 2]
    half = [v for v in range(G.n) if copies[v] == 1]
    excluded = [v for v in range(G.n) if copies[v] == 0]
    return NtDecomposition(
        VertexSet.of(forced, G.n),
        VertexSet.of(half, G.n),
        VertexSet.of(excluded, G.n),
    )
