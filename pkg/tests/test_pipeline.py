import random

import pytest

from p5color.cliquesep import build_tree, validate_tree
from p5color.coloring import validate_coloring
from p5color.detect import class_membership, find_induced_c5, is_o3_free
from p5color.errors import CutoffExceeded, NotInClass
from p5color.graph import Graph
from p5color.modular import md_tree, validate_md_tree
from p5color.oracle import chi_exact, chi_w_exact
from p5color.pipeline import (
    ROUTE_EXACT_FALLBACK,
    ROUTE_O3_MATCHING,
    ROUTE_PERFECT_EXACT,
    ROUTE_PRIME_C5,
    GenerationTimeout,
    gen_p5_cop5,
    gen_p5_kpe,
    solve_p5_cop5,
    solve_p5_kpe,
    verify_gyarfas,
    verify_lemma4,
    verify_lemma5,
)

BOWTIE = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def test_solve_cop5_c5_routes_through_prime_c5():
    report = solve_p5_cop5(Graph.cycle(5))
    assert report.chi == 3
    assert [r.route for r in report.routes] == [ROUTE_PRIME_C5]
    validate_coloring(Graph.cycle(5), report.coloring)


def test_solve_cop5_p4_routes_through_perfect():
    report = solve_p5_cop5(Graph.path(4))
    assert report.chi == 2
    assert [r.route for r in report.routes] == [ROUTE_PERFECT_EXACT]


def test_solve_cop5_cograph_needs_no_prime_route():
    # K3 join O2: chromatic number 3 + 1
    g = Graph(5, [(0, 1), (0, 2), (1, 2)] + [(i, j) for i in range(3) for j in (3, 4)])
    report = solve_p5_cop5(g)
    assert report.chi == 4
    assert report.routes == []


def test_solve_cop5_rejects_nonmembers():
    with pytest.raises(NotInClass) as err:
        solve_p5_cop5(Graph.path(5))
    assert err.value.witness.pattern == "P5"


def test_solve_cop5_weighted():
    report = solve_p5_cop5(Graph.cycle(5), {v: 2 for v in range(5)})
    assert report.chi == 5  # brute force: weighted C5, all weights 2
    assert report.chi == chi_w_exact(Graph.cycle(5), {v: 2 for v in range(5)})[0]


def test_solve_kpe_complete_graph():
    for n in (1, 4, 9):
        report = solve_p5_kpe(Graph.complete(n), 4)
        assert report.chi == n
        assert [r.route for r in report.routes] == [ROUTE_O3_MATCHING]


def test_solve_kpe_c5():
    report = solve_p5_kpe(Graph.cycle(5), 4)
    assert report.chi == 3
    assert [r.route for r in report.routes] == [ROUTE_O3_MATCHING]


def test_solve_kpe_bowtie_two_blocks():
    report = solve_p5_kpe(BOWTIE, 4)
    assert report.chi == 3
    assert len(report.routes) == 2
    assert {r.route for r in report.routes} == {ROUTE_O3_MATCHING}


def test_solve_kpe_rejects_nonmembers():
    k4e = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(NotInClass) as err:
        solve_p5_kpe(k4e, 4)
    assert err.value.witness.pattern == "K4-e"


def test_solve_kpe_p3_degenerate_class():
    # {P5, P3}-free graphs are disjoint unions of cliques
    g = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4)])
    report = solve_p5_kpe(g, 3)
    assert report.chi == 3


def _complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def test_solve_kpe_exact_fallback_route():
    # K_{2,3}: triangle-free (so K4-e-free), P5-free, independence number 3,
    # and no clique separator; the one C-block must take the exact fallback
    g = _complete_bipartite(2, 3)
    assert class_membership(g, "p5-kpe", 4)
    assert not is_o3_free(g)
    report = solve_p5_kpe(g, 4)
    assert report.chi == chi_exact(g)[0] == 2
    assert [r.route for r in report.routes] == [ROUTE_EXACT_FALLBACK]


def test_solve_kpe_cutoff_is_loud():
    g = _complete_bipartite(5, 6)
    assert class_membership(g, "p5-kpe", 4)
    with pytest.raises(CutoffExceeded):
        solve_p5_kpe(g, 4, oracle_max_n=6)


def test_route_soundness_on_generated_members():
    rng = random.Random(50)
    for _ in range(25):
        n = rng.randint(2, 10)
        g = gen_p5_cop5(n, rng.randrange(2**32))
        report = solve_p5_cop5(g)
        for rec in report.routes:
            if rec.route == ROUTE_PRIME_C5:
                sub, _ = g.induced(rec.vertices)
                assert find_induced_c5(sub) is not None and sub.n == 5
        gr = gen_p5_kpe(n, 4, rng.randrange(2**32)).graph
        report2 = solve_p5_kpe(gr, 4)
        for rec in report2.routes:
            sub, _ = gr.induced(rec.vertices)
            if rec.route == ROUTE_O3_MATCHING:
                assert is_o3_free(sub)


def test_end_to_end_cop5_matches_exact():
    rng = random.Random(51)
    for _ in range(60):
        g = gen_p5_cop5(rng.randint(1, 10), rng.randrange(2**32))
        report = solve_p5_cop5(g)
        assert report.chi == chi_exact(g)[0]
        validate_coloring(g, report.coloring)


def test_end_to_end_kpe_matches_exact():
    rng = random.Random(52)
    for p in (4, 5):
        for _ in range(30):
            g = gen_p5_kpe(rng.randint(1, 10), p, rng.randrange(2**32)).graph
            report = solve_p5_kpe(g, p)
            assert report.chi == chi_exact(g)[0]
            validate_coloring(g, report.coloring)


def test_end_to_end_weighted_cop5_matches_exact():
    rng = random.Random(53)
    for _ in range(40):
        n = rng.randint(1, 8)
        g = gen_p5_cop5(n, rng.randrange(2**32))
        w = {v: rng.randint(1, 3) for v in range(n)}
        report = solve_p5_cop5(g, w)
        assert report.chi == chi_w_exact(g, w)[0]
        validate_coloring(g, report.coloring, w)


def test_decomposition_trees_validate():
    rng = random.Random(54)
    for _ in range(20):
        g = gen_p5_cop5(rng.randint(1, 9), rng.randrange(2**32))
        validate_md_tree(g, md_tree(g))
        gr = gen_p5_kpe(rng.randint(1, 9), 4, rng.randrange(2**32)).graph
        validate_tree(gr, build_tree(gr))


def test_generators_always_return_members():
    rng = random.Random(55)
    for _ in range(30):
        n = rng.randint(1, 12)
        assert class_membership(gen_p5_cop5(n, rng.randrange(2**32)), "p5-cop5")
        res = gen_p5_kpe(n, 5, rng.randrange(2**32))
        assert class_membership(res.graph, "p5-kpe", 5)
        assert res.attempts >= 1


def test_generators_are_seed_deterministic():
    assert gen_p5_cop5(9, 123) == gen_p5_cop5(9, 123)
    assert gen_p5_kpe(9, 4, 123) == gen_p5_kpe(9, 4, 123)


def test_generator_timeout_suggests_density():
    with pytest.raises(GenerationTimeout):
        gen_p5_kpe(12, 4, 0, density=0.95, max_attempts=40)


def test_report_json_is_stable_and_timing_optional():
    g = gen_p5_cop5(8, 9)
    a = solve_p5_cop5(g).to_json()
    b = solve_p5_cop5(g).to_json()
    assert a == b and "ms" not in a
    assert "ms" in solve_p5_cop5(g).to_json(include_timings=True)


def test_verify_lemma5_small():
    report = verify_lemma5(n_max=6, samples_per_n=0, seed=0)
    assert report.ok and report.total > 0
    # C5 is the unique non-Berge prime member at n=5: 5!/10 labelings
    assert report.counts.get("n=5:c5") == 12
    # the only prime graph on 4 vertices is P4: 4!/2 labelings, all Berge
    assert report.counts.get("n=4:berge") == 12


def test_verify_lemma4_small():
    report = verify_lemma4(p=4, samples=40, n_max=10, seed=1)
    assert report.ok and report.total >= 40
    assert report.counts.get("o3-free", 0) > 0


def test_verify_gyarfas_small():
    report = verify_gyarfas(samples=60, n_max=10, seed=2)
    assert report.ok and report.total == 60


def test_empty_graph_reports():
    r = solve_p5_cop5(Graph.empty(0))
    assert r.chi == 0 and r.n == 0
    r2 = solve_p5_kpe(Graph.empty(0), 4)
    assert r2.chi == 0
