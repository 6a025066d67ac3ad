import itertools

import pytest
from hypothesis import given, settings

from abchrom.coloring import Coloring, is_acyclic, is_proper
from abchrom.corpus import connected_graphs_upto
from abchrom.errors import BudgetExceeded
from abchrom.exact import (EviPath, WeakPartition, acyclic_degree, acyclic_degree_by_paths, clique_number,
                           degree_sequence_bound, elp, enumerate_colorings, evi_compatible, exact_invariants,
                           is_b_coloring, m_a_degree, m_degree, weak_partitions)
from abchrom.families import family, generate, parse_family_spec
from abchrom.fixtures import load
from abchrom.graph import build_graph

from conftest import graphs


def _gen(text):
    return generate(parse_family_spec(text))[0]


def test_enumerate_examples(c4):
    assert len(list(enumerate_colorings(build_graph(2, [(0, 1)]), "proper"))) == 1
    assert len(list(enumerate_colorings(build_graph(3, [(0, 1), (1, 2)]), "proper"))) == 2
    proper = {c.colors for c in enumerate_colorings(c4, "proper")}
    acyclic = {c.colors for c in enumerate_colorings(c4, "acyclic")}
    assert proper - acyclic == {(1, 2, 1, 2)}


def test_enumerate_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_colorings(build_graph(8, []), "proper", budget=50))


def _chi_brute(g):
    for k in range(1, g.n + 1):
        for labels in itertools.product(range(k), repeat=g.n):
            if all(labels[u] != labels[v] for u, v in g.edges):
                return k
    return 0


def _omega_brute(g):
    best = 1 if g.n else 0
    for r in range(2, g.n + 1):
        for s in itertools.combinations(range(g.n), r):
            if all(b in g.adj[a] for a, b in itertools.combinations(s, 2)):
                best = r
    return best


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_chi_and_omega_against_brute_force(g):
    rep = exact_invariants(g, with_m_a=False)
    assert rep.chi == _chi_brute(g)
    assert rep.omega == clique_number(g) == _omega_brute(g)
    assert rep.omega <= rep.chi <= rep.A <= rep.A_b <= rep.n
    assert rep.phi <= rep.max_degree + 1


def test_known_values():
    for n in range(1, 7):
        assert exact_invariants(_gen(f"complete:{n}"), with_m_a=False).A_b == n
    for length in range(5, 9):
        assert exact_invariants(_gen(f"path:{length}"), with_m_a=False).A_b == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_complete_bipartite(n):
    rep = exact_invariants(_gen(f"kbip:{n},{n}"), with_m_a=False)
    assert rep.phi == 2 and rep.A_b == n + 1


def test_report_witnesses_and_json():
    g = _gen("cycle:6")
    rep = exact_invariants(g)
    assert rep.chain_holds()
    assert is_acyclic(g, rep.witnesses["A_b"]) and rep.witnesses["A_b"].k == rep.A_b
    assert is_b_coloring(g, rep.witnesses["phi"]) and rep.witnesses["phi"].k == rep.phi
    out = rep.to_json()
    assert out["A_b"] == 3 and out["m_a"] == rep.m_a


def test_m_degree_examples():
    assert m_degree(_gen("path:5")) == 3
    assert degree_sequence_bound([2, 2, 2, 1, 1]) == 3
    for n in (1, 2):
        assert m_degree(_gen(f"star_of_stars:{n}")) == n + 2
        assert m_degree(_gen(f"roof:{n}")) == n + 4


def test_b_coloring_check(c4):
    assert is_b_coloring(c4, Coloring((1, 2, 1, 2), 2))
    assert not is_b_coloring(c4, Coloring((1, 2, 1, 3), 3))


def test_fig4_acyclic_degree():
    f = load("fig4")
    g, v = f.graph, f.vertex("y1^1")
    P = WeakPartition(v, frozenset(f.vertex(x) for x in ("u", "z1^1", "y1^2")),
                      (frozenset({f.vertex("x1^1"), f.vertex("x2^1")}),))
    P.check(g)
    assert elp(g, v, P) == 3
    assert acyclic_degree(g, v) == 7


def test_roof_acyclic_degree():
    g, legend = generate(family("roof", 1))
    v = legend["y1^1"]
    assert acyclic_degree(g, v) == 5
    assert m_a_degree(g) == 6


def test_degree_one_and_complete():
    p2 = build_graph(2, [(0, 1)])
    assert acyclic_degree(p2, 0) == 1
    for n in (3, 4, 5):
        assert m_a_degree(_gen(f"complete:{n}")) == n
    assert m_a_degree(_gen("quad:1")) == 3


def test_evi_compatibility():
    a = EviPath((0, 1, 2))
    assert evi_compatible(a, EviPath((0, 3, 2)))  # shared endpoints only
    assert not evi_compatible(a, EviPath((4, 1, 5)))  # shared middle vertex
    assert not evi_compatible(a, EviPath((1, 6, 7)))  # even in one, odd in the other
    assert a.even_vertices() == {1} and a.odd_vertices() == {0, 2}


def test_weak_partitions_count():
    # neighborhood of size 3: Bell(3) = 5 partitions
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    parts = list(weak_partitions(star, 0))
    assert len(parts) == 5
    for P in parts:
        P.check(star)


def test_two_acyclic_degree_routes_agree_small_corpus():
    for g in connected_graphs_upto(5):
        for v in range(g.n):
            d = acyclic_degree(g, v)
            assert d == acyclic_degree_by_paths(g, v)
            assert d >= len(g.adj[v])


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_acyclic_degree_routes_agree_random(g):
    for v in range(g.n):
        assert acyclic_degree(g, v) == acyclic_degree_by_paths(g, v)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_bounds_chain(g):
    rep = exact_invariants(g)
    assert rep.A_b <= rep.m_a
    assert rep.phi <= rep.m_degree
    if rep.max_degree >= 2:
        assert rep.m_a <= rep.max_degree ** 2 / 2 + 1
