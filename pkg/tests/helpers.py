"""Independent brute-force oracles and small-graph utilities.

Everything here is deliberately naive (plain enumeration, no ordering
heuristics, no shared code with the library's solvers) so the tests
check the fast paths against genuinely independent ground truth.
"""

from __future__ import annotations

import itertools
import random

from p5color.graph import Graph


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    )


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def contains_induced(g: Graph, pattern: Graph) -> bool:
    """Generic induced-subgraph isomorphism by trying every injection."""
    k = pattern.n
    if k > g.n:
        return False
    for sub in itertools.combinations(range(g.n), k):
        for perm in itertools.permutations(sub):
            if all(
                g.adjacent(perm[i], perm[j]) == pattern.adjacent(i, j)
                for i in range(k)
                for j in range(i + 1, k)
            ):
                return True
    return False


def is_colorable(g: Graph, k: int) -> bool:
    """Plain backtracking in vertex order 0..n-1, no heuristics."""
    color = [0] * g.n

    def go(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(1, k + 1):
            if all(color[u] != c for u in g.neighbors(v)):
                color[v] = c
                if go(v + 1):
                    return True
                color[v] = 0
        return False

    return go(0)


def chi_bruteforce(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = 1
    while not is_colorable(g, k):
        k += 1
    return k


def chi_w_bruteforce(g: Graph, w: dict[int, int]) -> int:
    """Smallest k admitting a set coloring, by direct enumeration of
    color-set assignments."""
    weights = [w.get(v, 1) for v in range(g.n)]
    k = max(weights, default=0)
    while not _set_colorable(g, weights, k):
        k += 1
    return k


def _set_colorable(g: Graph, weights: list[int], k: int) -> bool:
    choices = [
        [frozenset(c) for c in itertools.combinations(range(1, k + 1), weights[v])]
        for v in range(g.n)
    ]
    assigned: list[frozenset] = [frozenset()] * g.n

    def go(v: int) -> bool:
        if v == g.n:
            return True
        for cs in choices[v]:
            if all(not (cs & assigned[u]) for u in g.neighbors(v) if u < v):
                assigned[v] = cs
                if go(v + 1):
                    return True
        assigned[v] = frozenset()
        return False

    return go(0)


def has_clique_separator_bruteforce(g: Graph) -> bool:
    """Any clique subset whose removal disconnects, by scanning all subsets."""
    from p5color.graph import components, is_clique

    for r in range(0, max(g.n - 1, 0)):
        for s in itertools.combinations(range(g.n), r):
            if not is_clique(g, s):
                continue
            rest = [v for v in range(g.n) if v not in s]
            if len(rest) < 2:
                continue
            sub, _ = g.induced(rest)
            if len(components(sub)) >= 2:
                return True
    return False


def max_matching_by_edge_subsets(g: Graph) -> int:
    """Maximum matching by include/exclude recursion over the edge list."""
    edges = sorted(g.edges)

    def go(i: int, used: frozenset[int]) -> int:
        if i == len(edges):
            return 0
        best = go(i + 1, used)
        u, v = edges[i]
        if u not in used and v not in used:
            best = max(best, 1 + go(i + 1, used | {u, v}))
        return best

    return go(0, frozenset())
