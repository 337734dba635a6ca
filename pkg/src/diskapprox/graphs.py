"""Immutable undirected graphs and the ordering/search primitives shared by the heuristics.

Vertices are dense integers 0..n-1 and every tie anywhere in the package
breaks toward the lowest id, so repeated runs produce identical output.
Graphs never mutate after construction; algorithms express deletion
through induced subgraphs or local alive masks.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .errors import BadParameter, IdOutOfRange, NotConnected, SelfLoop


@dataclass(frozen=True)
class VertexSet:
    """Sorted vertex ids belonging to a host graph on ``host_n`` vertices."""

    members: tuple[int, ...]
    host_n: int

    @staticmethod
    def of(vertices: Iterable[int], host_n: int) -> "VertexSet":
        members = tuple(sorted(set(vertices)))
        if members and (members[0] < 0 or members[-1] >= host_n):
            raise IdOutOfRange(f"vertex ids must lie in [0, {host_n})")
        return VertexSet(members, host_n)

    @cached_property
    def _lookup(self) -> frozenset[int]:
        return frozenset(self.members)

    def __contains__(self, vertex: int) -> bool:
        return vertex in self._lookup

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


class Graph:
    """Simple undirected graph; construct with :func:`build_graph`."""

    __slots__ = ("n", "edges", "adj", "_neighbor_sets")

    def __init__(self, n, edges, adj, neighbor_sets):
        self.n = n
        self.edges = edges          # sorted tuple of (u, v) pairs with u < v
        self.adj = adj              # per-vertex sorted neighbor tuples
        self._neighbor_sets = neighbor_sets

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, vertex: int) -> tuple[int, ...]:
        return self.adj[vertex]

    def neighbor_set(self, vertex: int) -> frozenset[int]:
        return self._neighbor_sets[vertex]

    def degree(self, vertex: int) -> int:
        return len(self.adj[vertex])

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[u]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegeneracyResult:
    """Removal order from repeated minimum-degree deletion, and the value it certifies.

    ``degeneracy`` is the largest current degree observed at any removal,
    i.e. the largest d such that some subgraph has minimum degree d.  Within
    the suffix starting at position i, order[i] has degree <= degeneracy.
    """

    order: tuple[int, ...]
    degeneracy: int


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Canonical graph on ``n`` vertices; (u, v) and (v, u) collapse, duplicates too."""
    if n < 0:
        raise BadParameter("vertex count must be nonnegative")
    seen: set[tuple[int, int]] = set()
    for u, v in edge_list:
        if not (0 <= u < n) or not (0 <= v < n):
            raise IdOutOfRange(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        seen.add((u, v) if u < v else (v, u))
    edges = tuple(sorted(seen))
    lists: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        lists[u].append(v)
        lists[v].append(u)
    adj = tuple(tuple(sorted(nbrs)) for nbrs in lists)
    neighbor_sets = tuple(frozenset(nbrs) for nbrs in adj)
    return Graph(n, edges, adj, neighbor_sets)


def induced_subgraph(G: Graph, subset: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``subset`` with relabelled ids; the map sends new id -> original id."""
    if subset.host_n != G.n:
        raise IdOutOfRange("vertex set does not belong to this graph")
    id_map = subset.members
    back = {old: new for new, old in enumerate(id_map)}
    edges = [
        (back[u], back[v])
        for u, v in G.edges
        if u in subset and v in subset
    ]
    return build_graph(len(id_map), edges), id_map


def degeneracy_ordering(G: Graph) -> DegeneracyResult:
    """Repeatedly remove a minimum-degree vertex (lowest id on ties)."""
    degree = [G.degree(v) for v in range(G.n)]
    heap = [(degree[v], v) for v in range(G.n)]
    heapq.heapify(heap)
    removed = [False] * G.n
    order: list[int] = []
    degeneracy = 0
    while heap:
        current, v = heapq.heappop(heap)
        if removed[v] or current != degree[v]:
            continue  # stale entry
        removed[v] = True
        order.append(v)
        if current > degeneracy:
            degeneracy = current
        for u in G.neighbors(v):
            if not removed[u]:
                degree[u] -= 1
                heapq.heappush(heap, (degree[u], u))
    return DegeneracyResult(tuple(order), degeneracy)


def find_triangle(G: Graph) -> Optional[tuple[int, int, int]]:
    """First triangle in lowest-edge order (lowest common neighbor), or None."""
    for u, v in G.edges:
        common = G.neighbor_set(u) & G.neighbor_set(v)
        if common:
            return tuple(sorted((u, v, min(common))))
    return None


def greedy_maximal_independent_set(G: Graph, order: Iterable[int]) -> VertexSet:
    """Take each vertex of ``order`` unless it or a neighbor was taken before it."""
    order = tuple(order)
    if sorted(order) != list(range(G.n)):
        raise BadParameter("order must be a permutation of the vertices")
    blocked = [False] * G.n
    chosen: list[int] = []
    for v in order:
        if blocked[v]:
            continue
        chosen.append(v)
        blocked[v] = True
        for u in G.neighbors(v):
            blocked[u] = True
    return VertexSet.of(chosen, G.n)


def bfs_levels(G: Graph, root: int) -> tuple[tuple[tuple[int, ...], ...], tuple[Optional[int], ...]]:
    """Breadth-first level sets and tree parents from ``root``.

    Levels come out sorted and each vertex's parent is its lowest-id
    neighbor on the previous level.  Raises NotConnected if some vertex
    is unreachable.
    """
    if not 0 <= root < G.n:
        raise IdOutOfRange(f"root {root} outside [0, {G.n})")
    parent: list[Optional[int]] = [None] * G.n
    seen = [False] * G.n
    seen[root] = True
    levels: list[tuple[int, ...]] = []
    frontier = [root]
    reached = 1
    while frontier:
        levels.append(tuple(frontier))
        discovered: list[int] = []
        for v in frontier:
            for u in G.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    discovered.append(u)
                    reached += 1
        frontier = sorted(discovered)
    if reached != G.n:
        raise NotConnected(f"only {reached} of {G.n} vertices reachable from {root}")
    return tuple(levels), tuple(parent)


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    try:
        bfs_levels(G, 0)
    except NotConnected:
        return False
    return True


def components(G: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted tuples, ordered by smallest member."""
    seen = [False] * G.n
    out: list[tuple[int, ...]] = []
    for start in range(G.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        member: list[int] = []
        while stack:
            v = stack.pop()
            member.append(v)
            for u in G.neighbors(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        out.append(tuple(sorted(member)))
    return tuple(out)
