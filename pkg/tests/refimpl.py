"""Naive exhaustive references the library's solvers are audited against.

Everything enumerates subsets or color assignments directly: slow but
obviously correct on the small graphs the tests feed it.
"""

from itertools import combinations, product

from diskapprox import checks
from diskapprox.graphs import Graph, build_graph
from diskapprox.rng import Rng


def all_subsets(n):
    for size in range(n + 1):
        yield from combinations(range(n), size)


def brute_mis(G: Graph) -> int:
    return max(len(s) for s in all_subsets(G.n) if checks.is_independent_set(G, s))


def brute_vc(G: Graph) -> int:
    return min(len(s) for s in all_subsets(G.n) if checks.is_vertex_cover(G, s))


def brute_clique(G: Graph) -> int:
    return max(len(s) for s in all_subsets(G.n) if checks.is_clique(G, s))


def brute_chromatic(G: Graph) -> int:
    if G.n == 0:
        return 0
    for k in range(1, G.n + 1):
        # vertex 0 may always take color 1, which prunes color permutations
        for rest in product(range(1, k + 1), repeat=G.n - 1):
            assignment = (1,) + rest
            if checks.is_proper_coloring(G, assignment):
                return k
    raise AssertionError("n colors always suffice")


def brute_domination(G: Graph, variant: str):
    """Minimum size of the requested domination variant, or None if none exists."""
    validators = {
        "plain": checks.is_dominating_set,
        "independent": checks.is_independent_dominating_set,
        "total": checks.is_total_dominating_set,
        "connected": checks.is_connected_dominating_set,
    }
    validator = validators[variant]
    for size in range(G.n + 1):
        for subset in combinations(range(G.n), size):
            if validator(G, subset):
                return size
    return None


def brute_degeneracy(G: Graph) -> int:
    best = 0
    for subset in all_subsets(G.n):
        if not subset:
            continue
        inside = set(subset)
        lowest = min(len(G.neighbor_set(v) & inside) for v in subset)
        best = max(best, lowest)
    return best


def minimum_vertex_covers(G: Graph) -> list[frozenset[int]]:
    best = brute_vc(G)
    return [
        frozenset(s)
        for s in combinations(range(G.n), best)
        if checks.is_vertex_cover(G, s)
    ]


def lp_half_integral_vc(G: Graph) -> float:
    """Optimum of the vertex-cover LP over x in {0, 1/2, 1}^n."""
    best = float(G.n)
    for levels in product((0, 1, 2), repeat=G.n):
        if all(levels[u] + levels[v] >= 2 for u, v in G.edges):
            best = min(best, sum(levels) / 2.0)
    return best


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def random_graph(n: int, probability: float, rng: Rng) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.uniform() < probability
    ]
    return build_graph(n, edges)


def complement(G: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(G.n)
        for v in range(u + 1, G.n)
        if not G.has_edge(u, v)
    ]
    return build_graph(G.n, edges)
