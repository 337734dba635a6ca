"""Exhaustive exact solvers for small graphs.

These are the ground truth every heuristic is measured against.  They run
on bitmask adjacency, reject inputs beyond fixed size caps, and obey a
wall-clock budget: each call returns an optimum with a witness or raises
TooLarge / Timeout, never a silently approximate answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from .covering import Coloring
from .errors import BadParameter, IsolatedVertex, NotConnected, Timeout, TooLarge
from .graphs import Graph, VertexSet, is_connected

DOMINATION_VARIANTS = ("plain", "independent", "total", "connected")


@dataclass(frozen=True)
class OracleLimits:
    """Size caps and wall-clock budget for the exact solvers."""

    max_independent_set: int = 24
    max_vertex_cover: int = 24
    max_clique: int = 24
    max_chromatic: int = 16
    max_domination: int = 18
    max_connected_domination: int = 16
    time_budget: float = 60.0  # seconds per call

    def __post_init__(self):
        caps = (
            self.max_independent_set,
            self.max_vertex_cover,
            self.max_clique,
            self.max_chromatic,
            self.max_domination,
            self.max_connected_domination,
        )
        if any(cap <= 0 for cap in caps) or self.time_budget <= 0:
            raise BadParameter("oracle limits must be positive")


DEFAULT_LIMITS = OracleLimits()


class _Deadline:
    """Cheap periodic wall-clock check raising Timeout when the budget is gone."""

    __slots__ = ("expires", "ticks")

    def __init__(self, budget: float):
        self.expires = time.perf_counter() + budget
        self.ticks = 0

    def check(self) -> None:
        self.ticks += 1
        if self.ticks & 0xFFF == 0 and time.perf_counter() > self.expires:
            raise Timeout("oracle time budget exhausted")


def _neighbor_masks(G: Graph) -> list[int]:
    masks = [0] * G.n
    for u, v in G.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _mask_to_vertices(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _mis_search(G: Graph, deadline: _Deadline) -> tuple[int, int]:
    """Branch and bound for a maximum independent set; returns (size, bitmask)."""
    masks = _neighbor_masks(G)
    best_size = -1
    best_mask = 0

    def search(alive: int, chosen: int, count: int) -> None:
        nonlocal best_size, best_mask
        deadline.check()
        if count + alive.bit_count() <= best_size:
            return
        if alive == 0:
            best_size, best_mask = count, chosen
            return
        # branch on the highest-degree survivor (lowest id on ties)
        pick = -1
        pick_degree = -1
        scan = alive
        while scan:
            low = scan & -scan
            v = low.bit_length() - 1
            scan ^= low
            degree = (masks[v] & alive).bit_count()
            if degree > pick_degree:
                pick_degree = degree
                pick = v
        if pick_degree <= 1:
            # survivors form isolated vertices and disjoint edges: greedy is exact
            take_mask, take_count, rest = chosen, count, alive
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                take_mask |= low
                take_count += 1
                rest &= ~(masks[v] | low)
            if take_count > best_size:
                best_size, best_mask = take_count, take_mask
            return
        bit = 1 << pick
        search(alive & ~(masks[pick] | bit), chosen | bit, count + 1)
        search(alive & ~bit, chosen, count)

    search((1 << G.n) - 1, 0, 0)
    return best_size, best_mask


def exact_mis(G: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> tuple[int, VertexSet]:
    """Maximum independent set size with a witness."""
    if G.n > limits.max_independent_set:
        raise TooLarge(f"n={G.n} exceeds the independent-set cap {limits.max_independent_set}")
    size, mask = _mis_search(G, _Deadline(limits.time_budget))
    return size, VertexSet.of(_mask_to_vertices(mask), G.n)


def exact_vc(G: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> tuple[int, VertexSet]:
    """Minimum vertex cover: complement of a maximum independent set."""
    if G.n > limits.max_vertex_cover:
        raise TooLarge(f"n={G.n} exceeds the vertex-cover cap {limits.max_vertex_cover}")
    size, mask = _mis_search(G, _Deadline(limits.time_budget))
    cover = [v for v in range(G.n) if not (mask >> v) & 1]
    return G.n - size, VertexSet.of(cover, G.n)


def exact_clique(G: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> tuple[int, VertexSet]:
    """Maximum clique by its own branch and bound (independent of exact_mis)."""
    if G.n > limits.max_clique:
        raise TooLarge(f"n={G.n} exceeds the clique cap {limits.max_clique}")
    masks = _neighbor_masks(G)
    deadline = _Deadline(limits.time_budget)
    best_size = 0
    best_mask = 0

    def search(candidates: int, chosen: int, count: int) -> None:
        nonlocal best_size, best_mask
        deadline.check()
        if count > best_size:
            best_size, best_mask = count, chosen
        if count + candidates.bit_count() <= best_size:
            return
        while candidates:
            low = candidates & -candidates
            v = low.bit_length() - 1
            search(candidates & masks[v], chosen | low, count + 1)
            candidates ^= low
            if count + candidates.bit_count() <= best_size:
                return

    search((1 << G.n) - 1, 0, 0)
    return best_size, VertexSet.of(_mask_to_vertices(best_mask), G.n)


def _try_k_coloring(G: Graph, k: int, seed_clique: tuple[int, ...], deadline: _Deadline):
    """Complete backtracking search for a proper k-coloring, or None.

    The seed clique is pre-colored 1..len(clique); new colors may only be
    introduced in order, which prunes color permutations.
    """
    if len(seed_clique) > k:
        return None
    colors = [0] * G.n
    for index, v in enumerate(seed_clique):
        colors[v] = index + 1

    def backtrack(colored: int, used: int) -> bool:
        deadline.check()
        if colored == G.n:
            return True
        # most saturated uncolored vertex; ties by degree, then lowest id
        pick = -1
        pick_key = (-1, -1, 0)
        for v in range(G.n):
            if colors[v]:
                continue
            saturation = len({colors[u] for u in G.neighbors(v) if colors[u]})
            key = (saturation, G.degree(v), -v)
            if key > pick_key:
                pick_key = key
                pick = v
        forbidden = {colors[u] for u in G.neighbors(pick)}
        for c in range(1, min(k, used + 1) + 1):
            if c in forbidden:
                continue
            colors[pick] = c
            if backtrack(colored + 1, max(used, c)):
                return True
            colors[pick] = 0
        return False

    if backtrack(len(seed_clique), len(seed_clique)):
        return colors
    return None


def exact_chromatic(G: Graph, limits: OracleLimits = DEFAULT_LIMITS) -> tuple[int, Coloring]:
    """Chromatic number by iterative deepening from the clique number."""
    if G.n > limits.max_chromatic:
        raise TooLarge(f"n={G.n} exceeds the chromatic cap {limits.max_chromatic}")
    if G.n == 0:
        return 0, Coloring.of([])
    deadline = _Deadline(limits.time_budget)
    _, clique = exact_clique(G, limits)

    # first-fit in id order caps the search
    upper = 0
    greedy = [0] * G.n
    for v in range(G.n):
        used = {greedy[u] for u in G.neighbors(v) if greedy[u]}
        c = 1
        while c in used:
            c += 1
        greedy[v] = c
        upper = max(upper, c)

    for k in range(len(clique), upper + 1):
        assignment = _try_k_coloring(G, k, clique.members, deadline)
        if assignment is not None:
            return k, Coloring.of(assignment)
    raise AssertionError("k-coloring search must succeed at the greedy bound")


def _induced_connected(chosen: tuple[int, ...], masks: list[int]) -> bool:
    if len(chosen) <= 1:
        return True
    chosen_mask = 0
    for v in chosen:
        chosen_mask |= 1 << v
    seen = 1 << chosen[0]
    stack = [chosen[0]]
    while stack:
        v = stack.pop()
        fresh = masks[v] & chosen_mask & ~seen
        while fresh:
            low = fresh & -fresh
            fresh ^= low
            seen |= low
            stack.append(low.bit_length() - 1)
    return seen == chosen_mask


def exact_domination(
    G: Graph, variant: str = "plain", limits: OracleLimits = DEFAULT_LIMITS
) -> tuple[int, VertexSet]:
    """Minimum dominating set of the requested variant with a witness.

    Increasing-size subset search over bitmask neighborhood closures; the
    first subset that validates is optimal.  Variants: plain, independent,
    total, connected.
    """
    if variant not in DOMINATION_VARIANTS:
        raise BadParameter(f"unknown domination variant {variant!r}")
    cap = limits.max_connected_domination if variant == "connected" else limits.max_domination
    if G.n > cap:
        raise TooLarge(f"n={G.n} exceeds the domination cap {cap}")
    if variant == "connected" and not is_connected(G):
        raise NotConnected("connected domination needs a connected graph")
    if variant == "total":
        for v in range(G.n):
            if G.degree(v) == 0:
                raise IsolatedVertex(v)
    if G.n == 0:
        return 0, VertexSet.of([], 0)

    masks = _neighbor_masks(G)
    closed = [masks[v] | (1 << v) for v in range(G.n)]
    reach = masks if variant == "total" else closed
    full = (1 << G.n) - 1
    deadline = _Deadline(limits.time_budget)

    for size in range(1, G.n + 1):
        for chosen in combinations(range(G.n), size):
            deadline.check()
            covered = 0
            for v in chosen:
                covered |= reach[v]
            if covered != full:
                continue
            if variant == "independent":
                chosen_mask = 0
                for v in chosen:
                    chosen_mask |= 1 << v
                if any(masks[v] & chosen_mask for v in chosen):
                    continue
            elif variant == "connected" and not _induced_connected(chosen, masks):
                continue
            return size, VertexSet.of(chosen, G.n)
    raise AssertionError("the full vertex set always dominates")
