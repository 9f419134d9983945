"""Clique-separator decomposition: separator search, the binary
decomposition tree, and bottom-up composition of chromatic numbers.

Separator search runs MCS-M to obtain a minimal triangulation H of the
input; every clique separator of a graph contains a clique minimal
separator, clique minimal separators survive minimal triangulation, and
in a chordal graph every minimal separator shows up as the set of
later-ordered H-neighbors of some vertex. Testing those n candidate
sets for cliqueness in the original graph and for disconnection is
therefore a complete (and polynomial) search.
"""

from __future__ import annotations

import heapq
from collections.abc import Callable
from dataclasses import dataclass

from .coloring import MultiColoring, validate_coloring
from .graph import Graph, components, is_clique, set_of


@dataclass(frozen=True)
class CLeaf:
    """A C-block: an induced subgraph with no clique separator."""

    block: frozenset[int]


@dataclass(frozen=True)
class CNode:
    separator: frozenset[int]
    left: CDecompTree
    right: CDecompTree

    @property
    def span(self) -> frozenset[int]:
        return tree_span(self.left) | tree_span(self.right)


CDecompTree = CLeaf | CNode


def tree_span(t: CDecompTree) -> frozenset[int]:
    if isinstance(t, CLeaf):
        return t.block
    return t.span


def tree_leaves(t: CDecompTree) -> list[CLeaf]:
    if isinstance(t, CLeaf):
        return [t]
    return tree_leaves(t.left) + tree_leaves(t.right)


def tree_to_json(t: CDecompTree) -> dict:
    if isinstance(t, CLeaf):
        return {"leaf": sorted(t.block)}
    return {
        "separator": sorted(t.separator),
        "left": tree_to_json(t.left),
        "right": tree_to_json(t.right),
    }


# -- separator search ----------------------------------------------------------


def _mcs_m(g: Graph) -> tuple[list[int], list[int]]:
    """Maximum cardinality search for minimal triangulation.

    Returns (number, h_adj): number[v] is v's position (n down to 1) and
    h_adj[v] the adjacency bitmask of v in the triangulated graph H.
    """
    n = g.n
    weight = [0] * n
    number = [0] * n
    h_adj = [g.adj_bits(v) for v in range(n)]
    numbered = 0
    for i in range(n, 0, -1):
        v = min(
            (u for u in range(n) if not numbered >> u & 1),
            key=lambda u: (-weight[u], u),
        )
        number[v] = i
        numbered |= 1 << v
        # minimax reachability: best[u] = min over u..v paths through
        # unnumbered vertices of the largest interior weight (-1 = direct edge)
        best = [n + 1] * n
        heap: list[tuple[int, int]] = []
        mask = g.adj_bits(v) & ~numbered
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            mask ^= low
            best[u] = -1
            heapq.heappush(heap, (-1, u))
        while heap:
            cost, x = heapq.heappop(heap)
            if cost > best[x]:
                continue
            through = max(cost, weight[x])
            mask = g.adj_bits(x) & ~numbered
            while mask:
                low = mask & -mask
                y = low.bit_length() - 1
                mask ^= low
                if through < best[y]:
                    best[y] = through
                    heapq.heappush(heap, (through, y))
        for u in range(n):
            if not numbered >> u & 1 and best[u] < weight[u]:
                weight[u] += 1
                h_adj[u] |= 1 << v
                h_adj[v] |= 1 << u
    return number, h_adj


def _separator_candidates(g: Graph) -> list[frozenset[int]]:
    """Candidate separators: later-ordered H-neighborhoods from MCS-M."""
    number, h_adj = _mcs_m(g)
    out = []
    seen = set()
    for v in range(g.n):
        later = 0
        mask = h_adj[v]
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            mask ^= low
            if number[u] > number[v]:
                later |= low
        cand = set_of(later)
        if cand and cand not in seen:
            seen.add(cand)
            out.append(cand)
    return out


def _splits_into(g: Graph, q: frozenset[int]) -> list[frozenset[int]] | None:
    """Components of g - q, or None when removal leaves g connected."""
    rest = [v for v in range(g.n) if v not in q]
    if len(rest) < 2:
        return None
    sub, ids = g.induced(rest)
    comps = components(sub)
    if len(comps) < 2:
        return None
    return [frozenset(ids[v] for v in comp) for comp in comps]


def find_clique_separator(
    g: Graph,
) -> tuple[frozenset[int], frozenset[int], frozenset[int]] | None:
    """A clique separator split (Q, A, B), or None when g has none.

    Q is a clique whose removal disconnects; A is the component of g - Q
    containing the smallest remaining vertex id and B is everything else
    (kept whole; recursion re-splits it). A disconnected input returns
    the empty separator with its component groups. Among clique
    separators found, the lexicographically smallest vertex set wins.
    """
    comps = components(g)
    if len(comps) >= 2:
        a = comps[0]
        b = frozenset().union(*comps[1:])
        return frozenset(), a, b
    if g.n <= 2:
        return None
    found = []
    for q in _separator_candidates(g):
        if not is_clique(g, q):
            continue
        parts = _splits_into(g, q)
        if parts is not None:
            found.append((q, parts))
    if not found:
        return None
    q, parts = min(found, key=lambda item: sorted(item[0]))
    a = parts[0]
    b = frozenset().union(*parts[1:])
    return q, a, b


# -- decomposition tree ----------------------------------------------------------


def build_tree(g: Graph) -> CDecompTree:
    """Binary decomposition tree whose leaves are the C-blocks of g.

    Deterministic: separators are tie-broken lexicographically and the
    left side is the component holding the smallest vertex.
    """

    def build(span: frozenset[int]) -> CDecompTree:
        sub, ids = g.induced(span)
        split = find_clique_separator(sub)
        if split is None:
            return CLeaf(span)
        q, a, b = ({ids[v] for v in part} for part in split)
        return CNode(frozenset(q), build(frozenset(a | q)), build(frozenset(b | q)))

    return build(frozenset(range(g.n)))


def validate_tree(g: Graph, t: CDecompTree) -> None:
    """Raise ValueError unless t satisfies every structural invariant."""
    if tree_span(t) != frozenset(range(g.n)):
        raise ValueError("tree span does not cover the vertex set")

    def walk(node: CDecompTree) -> None:
        if isinstance(node, CLeaf):
            sub, _ = g.induced(node.block)
            if find_clique_separator(sub) is not None:
                raise ValueError(f"leaf block {sorted(node.block)} has a clique separator")
            return
        left = tree_span(node.left)
        right = tree_span(node.right)
        if left & right != node.separator:
            raise ValueError("left and right spans must intersect exactly in the separator")
        if not is_clique(g, node.separator):
            raise ValueError(f"separator {sorted(node.separator)} is not a clique")
        for u, v in g.edges:
            if (u in left - node.separator and v in right - node.separator) or (
                v in left - node.separator and u in right - node.separator
            ):
                raise ValueError(f"edge ({u},{v}) crosses the separator {sorted(node.separator)}")
        walk(node.left)
        walk(node.right)

    walk(t)


# -- chromatic composition ----------------------------------------------------------

LeafSolver = Callable[[Graph], tuple[int, MultiColoring]]


def chi_compose(
    g: Graph, t: CDecompTree, leaf_chi: LeafSolver
) -> tuple[int, MultiColoring]:
    """Compose leaf chromatic numbers/colorings into one for g.

    chi(g) is the max over the two sides at every node; the merge
    permutes the smaller side's colors so its classes agree with the
    larger side on the separator clique, then maps its surplus colors
    into the larger side's unused ones.
    """

    def solve(node: CDecompTree) -> tuple[int, dict[int, int]]:
        if isinstance(node, CLeaf):
            sub, ids = g.induced(node.block)
            k, mc = leaf_chi(sub)
            try:
                validate_coloring(sub, mc)
            except ValueError as exc:
                raise RuntimeError(f"leaf solver returned an invalid coloring: {exc}") from exc
            if mc.k > k:
                raise RuntimeError("leaf solver used more colors than it reported")
            return k, {ids[v]: next(iter(mc.of(v))) for v in range(sub.n)}
        k1, c1 = solve(node.left)
        k2, c2 = solve(node.right)
        if k1 > k2:
            k1, c1, k2, c2 = k2, c2, k1, c1
        # align the smaller side's colors with the larger side's on Q
        perm = {c1[q]: c2[q] for q in sorted(node.separator)}
        free_targets = [c for c in range(1, k2 + 1) if c not in perm.values()]
        for c in range(1, k1 + 1):
            if c not in perm:
                perm[c] = free_targets.pop(0)
        merged = {v: perm[c] for v, c in c1.items()}
        merged.update(c2)
        return k2, merged

    k, cmap = solve(t)
    mc = MultiColoring.from_singletons(cmap, g.n)
    validate_coloring(g, mc)
    return k, mc
