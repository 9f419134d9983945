import itertools
import random

import pytest

from p5color.detect import (
    RamseyWitness,
    bipartite_ramsey_witness,
    class_membership,
    find_class_violation,
    find_independent_triple,
    find_induced_c5,
    find_induced_co_p5,
    find_induced_kp_minus_e,
    find_induced_p5,
    find_odd_hole_or_antihole,
    is_berge_small,
    is_o3_free,
    witness_ok,
)
from p5color.errors import CutoffExceeded, PreconditionError
from p5color.graph import Graph
from p5color.oracle import independence_number_exact

from helpers import contains_induced, random_graph

P5 = Graph.path(5)
C5 = Graph.cycle(5)
K4_MINUS_E = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def kp_minus_e(p: int) -> Graph:
    return Graph(p, [e for e in Graph.complete(p).edges if e != (0, 1)])


def test_p5_detector_known_cases():
    assert find_induced_p5(C5) is None
    w = find_induced_p5(Graph.path(6))
    assert w is not None and witness_ok(Graph.path(6), w)
    assert w.vertices == (0, 1, 2, 3, 4)


def test_c5_detector_identity():
    w = find_induced_c5(C5)
    assert w.vertices == (0, 1, 2, 3, 4)
    assert find_induced_c5(Graph.cycle(6)) is None
    assert find_induced_c5(Graph.cycle(7)) is None


def test_co_p5_detector():
    co = P5.complement()
    w = find_induced_co_p5(co)
    assert w is not None and witness_ok(co, w)
    assert find_induced_co_p5(C5) is None  # C5 is self-complementary and P5-free


def test_kp_minus_e_known_cases():
    assert find_induced_kp_minus_e(Graph.complete(4), 4) is None
    w = find_induced_kp_minus_e(K4_MINUS_E, 4)
    assert w is not None and sorted(w.vertices) == [0, 1, 2, 3]
    assert not K4_MINUS_E.adjacent(w.vertices[0], w.vertices[1])
    # derived by the exhaustive oracle: C5 has no K4-e
    assert not contains_induced(C5, kp_minus_e(4))
    assert find_induced_kp_minus_e(C5, 4) is None
    with pytest.raises(PreconditionError):
        find_induced_kp_minus_e(C5, 2)


def test_o3_known_cases():
    assert is_o3_free(C5)
    w = find_independent_triple(P5)
    assert w is not None and w.vertices == (0, 2, 4)
    assert is_o3_free(Graph.complete(7))


def test_o3_free_iff_independence_number_at_most_two():
    rng = random.Random(3)
    for _ in range(60):
        g = random_graph(rng.randint(1, 9), rng.random(), rng)
        assert is_o3_free(g) == (independence_number_exact(g) <= 2)


def test_berge_known_cases():
    w = find_odd_hole_or_antihole(C5)
    assert w is not None and w.pattern == "C5" and witness_ok(C5, w)
    assert not is_berge_small(C5)
    assert not is_berge_small(Graph.cycle(7))
    assert find_odd_hole_or_antihole(Graph.cycle(7)).pattern == "C7"
    anti7 = Graph.cycle(7).complement()
    assert find_odd_hole_or_antihole(anti7).pattern == "co-C7"
    assert witness_ok(anti7, find_odd_hole_or_antihole(anti7))


def test_bipartite_graphs_are_berge():
    rng = random.Random(4)
    for _ in range(25):
        a = rng.randint(1, 5)
        b = rng.randint(1, 5)
        edges = [
            (i, a + j) for i in range(a) for j in range(b) if rng.random() < 0.5
        ]
        assert is_berge_small(Graph(a + b, edges))


def test_berge_cutoff_refuses_loudly():
    with pytest.raises(CutoffExceeded):
        is_berge_small(Graph.empty(17))
    assert is_berge_small(Graph.empty(17), max_n=20)


def test_detectors_agree_with_exhaustive_oracle():
    rng = random.Random(5)
    co_p5 = P5.complement()
    k5e = kp_minus_e(5)
    for _ in range(150):
        g = random_graph(rng.randint(4, 8), rng.random(), rng)
        for finder, pattern in [
            (find_induced_p5, P5),
            (find_induced_co_p5, co_p5),
            (find_induced_c5, C5),
            (lambda h: find_induced_kp_minus_e(h, 4), kp_minus_e(4)),
            (lambda h: find_induced_kp_minus_e(h, 5), k5e),
        ]:
            w = finder(g)
            assert (w is not None) == contains_induced(g, pattern)
            if w is not None:
                assert witness_ok(g, w)


def test_class_membership_known_cases():
    assert class_membership(C5, "p5-cop5")
    v = find_class_violation(P5, "p5-cop5")
    assert v.pattern == "P5" and v.vertices == (0, 1, 2, 3, 4)
    v2 = find_class_violation(K4_MINUS_E, "p5-kpe", 4)
    assert v2.pattern == "K4-e" and sorted(v2.vertices) == [0, 1, 2, 3]
    with pytest.raises(PreconditionError):
        find_class_violation(C5, "p5-kpe")
    with pytest.raises(ValueError):
        find_class_violation(C5, "nonsense")


def test_class_membership_is_hereditary():
    rng = random.Random(6)
    checked = 0
    while checked < 25:
        g = random_graph(rng.randint(3, 9), 0.3, rng)
        if find_class_violation(g, "p5-kpe", 4) is not None:
            continue
        checked += 1
        keep = [v for v in range(g.n) if rng.random() < 0.6]
        sub, _ = g.induced(keep)
        assert class_membership(sub, "p5-kpe", 4)


def _bipartite(n: int, cross) -> Graph:
    edges = [(i, n + j) for i in range(n) for j in range(n) if cross(i, j)]
    return Graph(2 * n, edges)


def test_ramsey_witness_complete_and_empty():
    g = _bipartite(9, lambda i, j: True)
    w = bipartite_ramsey_witness(g, range(9), range(9, 18), 2)
    assert isinstance(w, RamseyWitness) and w.kind == "complete"
    assert len(w.side_a) == len(w.side_b) == 2
    g2 = _bipartite(9, lambda i, j: False)
    w2 = bipartite_ramsey_witness(g2, range(9), range(9, 18), 2)
    assert w2.kind == "empty"


def test_ramsey_witness_random_bipartite_always_exists():
    rng = random.Random(7)
    for _ in range(30):
        cross = {(i, j) for i in range(9) for j in range(9) if rng.random() < 0.5}
        g = _bipartite(9, lambda i, j: (i, j) in cross)
        w = bipartite_ramsey_witness(g, range(9), range(9, 18), 2)
        assert len(w.side_a) == len(w.side_b) == 2
        pairs = list(itertools.product(w.side_a, w.side_b))
        if w.kind == "complete":
            assert all(g.adjacent(u, v) for u, v in pairs)
        else:
            assert not any(g.adjacent(u, v) for u, v in pairs)


def test_ramsey_witness_preconditions():
    g = _bipartite(9, lambda i, j: True)
    with pytest.raises(PreconditionError):
        bipartite_ramsey_witness(g, range(8), range(8, 18), 2)  # unequal parts
    with pytest.raises(PreconditionError):
        bipartite_ramsey_witness(g, range(9), range(9, 18), 3)  # 9 <= 3^4
    tri = Graph(6, [(0, 1)])
    with pytest.raises(PreconditionError):
        bipartite_ramsey_witness(tri, [0, 1, 2], [3, 4, 5], 2)  # part not independent
    with pytest.raises(CutoffExceeded):
        big = _bipartite(21, lambda i, j: False)
        bipartite_ramsey_witness(big, range(21), range(21, 42), 2)


def test_berge_longer_odd_holes_at_the_size_boundary():
    assert not is_berge_small(Graph.cycle(9))
    w = find_odd_hole_or_antihole(Graph.cycle(9))
    assert w.pattern == "C9" and witness_ok(Graph.cycle(9), w)
    assert is_berge_small(Graph.cycle(8))
