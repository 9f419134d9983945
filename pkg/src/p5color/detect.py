"""Induced-subgraph detectors and hereditary class membership checks.

Each detector is a specialized backtracking enumeration over vertex
tuples in lexicographic order, pruned with adjacency bitmasks, so the
returned witnesses are reproducible. Witness vertices are listed in a
canonical pattern order: path order for paths, cyclic order for holes,
the non-adjacent pair first for near-complete patterns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CutoffExceeded, PreconditionError
from .graph import (
    Graph,
    bits_of,
    is_independent_set,
    set_of,
)

DEFAULT_BERGE_MAX_N = 16
DEFAULT_RAMSEY_MAX_PART = 20


@dataclass(frozen=True)
class Witness:
    """An induced occurrence of a named forbidden pattern."""

    pattern: str
    vertices: tuple[int, ...]


def witness_ok(g: Graph, w: Witness) -> bool:
    """Re-verify that w.vertices induce w.pattern in the listed order."""
    vs = w.vertices
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    required = _pattern_edges(w.pattern, len(vs))
    if required is None:
        return False
    actual = {
        (i, j)
        for i, j in itertools.combinations(range(len(vs)), 2)
        if g.adjacent(vs[i], vs[j])
    }
    return actual == required


def _pattern_edges(pattern: str, size: int) -> set[tuple[int, int]] | None:
    """Edge set of the named pattern on positions 0..size-1, or None."""
    all_pairs = set(itertools.combinations(range(size), 2))
    path = {(i, i + 1) for i in range(size - 1)}
    cycle = path | ({(0, size - 1)} if size >= 3 else set())
    if pattern == "P5":
        return path if size == 5 else None
    if pattern == "co-P5":
        return all_pairs - path if size == 5 else None
    if pattern == "O3":
        return set() if size == 3 else None
    if pattern.startswith("co-C"):
        length = _int_suffix(pattern[4:])
        return all_pairs - cycle if length == size and size >= 5 else None
    if pattern.startswith("C"):
        length = _int_suffix(pattern[1:])
        return cycle if length == size and size >= 3 else None
    if pattern.startswith("K") and pattern.endswith("-e"):
        p = _int_suffix(pattern[1:-2])
        return all_pairs - {(0, 1)} if p == size and size >= 3 else None
    return None


def _int_suffix(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        return -1


# -- induced paths and cycles ----------------------------------------------


def _find_induced_path(g: Graph, k: int) -> tuple[int, ...] | None:
    """Lexicographically first ordered vertex tuple inducing P_k."""
    if k == 1:
        return (0,) if g.n >= 1 else None
    full = (1 << g.n) - 1

    def extend(path: list[int], banned: int) -> tuple[int, ...] | None:
        # banned: vertices adjacent to any non-tip path vertex, plus the path
        if len(path) == k:
            return tuple(path)
        tip = path[-1]
        cand = g.adj_bits(tip) & ~banned & full
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            found = extend(path + [v], banned | g.adj_bits(tip) | (1 << v))
            if found is not None:
                return found
        return None

    for start in range(g.n):
        found = extend([start], 1 << start)
        if found is not None:
            return found
    return None


def find_induced_p5(g: Graph) -> Witness | None:
    path = _find_induced_path(g, 5)
    return Witness("P5", path) if path is not None else None


def find_induced_co_p5(g: Graph) -> Witness | None:
    """Vertices listed in path order of the complement."""
    path = _find_induced_path(g.complement(), 5)
    return Witness("co-P5", path) if path is not None else None


def find_induced_c5(g: Graph) -> Witness | None:
    """Lexicographically first induced 5-cycle, in cyclic order starting
    at its smallest vertex."""
    hole = _find_hole(g, 5)
    return Witness("C5", hole) if hole is not None else None


def _find_hole(g: Graph, length: int) -> tuple[int, ...] | None:
    """Induced cycle of the given length, as a tuple in cyclic order.

    The tuple starts at the cycle's smallest vertex; orientation is fixed
    by requiring the second vertex to be smaller than the last. Two
    banned masks are tracked because the closing vertex must avoid the
    interior's neighborhoods yet meet the start's.
    """

    def extend(
        path: list[int], banned_all: int, banned_mid: int
    ) -> tuple[int, ...] | None:
        first = path[0]
        tip = path[-1]
        if len(path) == length - 1:
            cand = g.adj_bits(tip) & g.adj_bits(first) & ~banned_mid
            while cand:
                low = cand & -cand
                v = low.bit_length() - 1
                cand ^= low
                if v > path[1]:
                    return (*path, v)
            return None
        cand = g.adj_bits(tip) & ~banned_all
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if v < first:
                continue
            found = extend(
                path + [v],
                banned_all | g.adj_bits(tip) | low,
                banned_mid | low | (g.adj_bits(tip) if len(path) >= 2 else 0),
            )
            if found is not None:
                return found
        return None

    if g.n < length:
        return None
    for start in range(g.n):
        found = extend([start], 1 << start, 1 << start)
        if found is not None:
            return found
    return None


# -- near-complete patterns --------------------------------------------------


def find_induced_kp_minus_e(g: Graph, p: int) -> Witness | None:
    """Induced K_p minus one edge; the two non-adjacent vertices come first."""
    if p < 3:
        raise PreconditionError(f"K_p-e needs p >= 3, got p={p}")
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if g.adjacent(x, y):
                continue
            common = g.adj_bits(x) & g.adj_bits(y)
            clique = _lex_clique_in_mask(g, common, p - 2)
            if clique is not None:
                return Witness(f"K{p}-e", (x, y, *clique))
    return None


def _lex_clique_in_mask(g: Graph, mask: int, size: int) -> tuple[int, ...] | None:
    """Lexicographically first clique of the given size inside mask."""
    if size == 0:
        return ()
    if mask.bit_count() < size:
        return None
    cand = mask
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        rest = _lex_clique_in_mask(g, mask & g.adj_bits(v) & ~((1 << (v + 1)) - 1), size - 1)
        if rest is not None:
            return (v, *rest)
    return None


def find_independent_triple(g: Graph) -> Witness | None:
    """An independent set of size 3, or None if g is O3-free."""
    full = (1 << g.n) - 1
    for u in range(g.n):
        non_u = full & ~g.adj_bits(u) & ~((1 << (u + 1)) - 1)
        cand_v = non_u
        while cand_v:
            low = cand_v & -cand_v
            v = low.bit_length() - 1
            cand_v ^= low
            third = non_u & ~g.adj_bits(v) & ~((1 << (v + 1)) - 1)
            if third:
                w = (third & -third).bit_length() - 1
                return Witness("O3", (u, v, w))
    return None


def is_o3_free(g: Graph) -> bool:
    """True iff g has no independent set of size 3."""
    return find_independent_triple(g) is None


# -- Berge check (desk scale) -------------------------------------------------


def find_odd_hole_or_antihole(
    g: Graph, max_n: int = DEFAULT_BERGE_MAX_N
) -> Witness | None:
    """First induced odd hole of g or of its complement, length >= 5.

    Enumeration over vertex subsets; refuses graphs beyond max_n rather
    than approximating.
    """
    if g.n > max_n:
        raise CutoffExceeded(
            f"Berge check is desk-scale only: n={g.n} exceeds cutoff {max_n}"
        )
    co = g.complement()
    for length in range(5, g.n + 1, 2):
        hole = _hole_on_some_subset(g, length)
        if hole is not None:
            return Witness(f"C{length}", hole)
        # co-C5 is again C5, so length 5 needs only one side
        if length >= 7:
            anti = _hole_on_some_subset(co, length)
            if anti is not None:
                return Witness(f"co-C{length}", anti)
    return None


def _hole_on_some_subset(g: Graph, length: int) -> tuple[int, ...] | None:
    """Scan subsets of the given size for one inducing a chordless cycle."""
    for subset in itertools.combinations(range(g.n), length):
        mask = bits_of(subset)
        if all((g.adj_bits(v) & mask).bit_count() == 2 for v in subset):
            cyc = _walk_cycle(g, subset, mask)
            if cyc is not None:
                return cyc
    return None


def _walk_cycle(g: Graph, subset: tuple[int, ...], mask: int) -> tuple[int, ...] | None:
    """Cyclic order of a 2-regular induced subgraph, if it is one cycle."""
    start = subset[0]
    first_two = sorted(set_of(g.adj_bits(start) & mask))
    order = [start, first_two[0]]
    while len(order) < len(subset):
        nbrs = set_of(g.adj_bits(order[-1]) & mask)
        nxt = [x for x in nbrs if x != order[-2]]
        if len(nxt) != 1 or nxt[0] in order:
            return None
        order.append(nxt[0])
    if not g.adjacent(order[-1], start):
        return None
    return tuple(order)


def is_berge_small(g: Graph, max_n: int = DEFAULT_BERGE_MAX_N) -> bool:
    """True iff neither g nor its complement has an induced odd hole."""
    return find_odd_hole_or_antihole(g, max_n=max_n) is None


# -- class membership ----------------------------------------------------------

CLASS_P5_COP5 = "p5-cop5"
CLASS_P5_KPE = "p5-kpe"


def _normalize_class(name: str) -> str:
    return name.replace("_", "-").lower()


def find_class_violation(g: Graph, class_name: str, p: int | None = None) -> Witness | None:
    """First forbidden-pattern witness under deterministic vertex order,
    or None when g belongs to the class."""
    cls = _normalize_class(class_name)
    if cls == CLASS_P5_COP5:
        return find_induced_p5(g) or find_induced_co_p5(g)
    if cls == CLASS_P5_KPE:
        if p is None or p < 3:
            raise PreconditionError(f"class {CLASS_P5_KPE} needs a parameter p >= 3")
        return find_induced_p5(g) or find_induced_kp_minus_e(g, p)
    raise ValueError(f"unknown graph class {class_name!r}")


def class_membership(g: Graph, class_name: str, p: int | None = None) -> bool:
    return find_class_violation(g, class_name, p) is None


# -- bipartite Ramsey witness (desk scale) -------------------------------------


@dataclass(frozen=True)
class RamseyWitness:
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    kind: str  # "complete" or "empty"


def _ramsey_target(n: int, s: int) -> int:
    # floor((n/s)^(1/s)) without float error: largest t with t^s * s <= n
    t = 1
    while (t + 1) ** s * s <= n:
        t += 1
    return t


def bipartite_ramsey_witness(
    g: Graph,
    part_a,
    part_b,
    s: int,
    max_part: int = DEFAULT_RAMSEY_MAX_PART,
) -> RamseyWitness:
    """Equal-size subsets A' of A and B' of B spanning a complete or empty
    bipartite subgraph, of the guaranteed size floor((n/s)^(1/s)).

    Bounded exhaustive search; raises when the parts exceed the desk-scale
    cutoff.
    """
    a = sorted(set(part_a))
    b = sorted(set(part_b))
    if set(a) & set(b) or set(a) | set(b) != set(range(g.n)):
        raise PreconditionError("parts must partition the vertex set")
    if not is_independent_set(g, a) or not is_independent_set(g, b):
        raise PreconditionError("parts must be independent sets")
    if len(a) != len(b):
        raise PreconditionError("parts must have equal size")
    n = len(a)
    if n <= s ** (s + 1):
        raise PreconditionError(f"part size {n} must exceed s^(s+1) = {s ** (s + 1)}")
    if n > max_part:
        raise CutoffExceeded(
            f"Ramsey witness search is desk-scale only: part size {n} exceeds {max_part}"
        )
    t = _ramsey_target(n, s)
    for sub_a in itertools.combinations(a, t):
        inter = -1
        union = 0
        for v in sub_a:
            inter &= g.adj_bits(v)
            union |= g.adj_bits(v)
        for sub_b in itertools.combinations(b, t):
            bmask = bits_of(sub_b)
            if bmask & union == 0:
                return RamseyWitness(sub_a, sub_b, "empty")
            if bmask & ~inter == 0:
                return RamseyWitness(sub_a, sub_b, "complete")
    raise RuntimeError(
        f"no complete/empty pair of size {t} found; bipartite Ramsey bound violated"
    )
