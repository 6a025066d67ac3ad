import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abchrom.corpus import all_graphs, canonical_form, connected_graphs, random_graphs
from abchrom.graph import build_graph, is_connected, relabel

from conftest import graphs

# OEIS A000088 and A001349
ALL_COUNTS = [1, 2, 4, 11, 34, 156]
CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112]


@pytest.mark.parametrize("n", range(1, 7))
def test_counts(n):
    assert len(all_graphs(n)) == ALL_COUNTS[n - 1]
    conn = connected_graphs(n)
    assert len(conn) == CONNECTED_COUNTS[n - 1]
    assert all(is_connected(g) for g in conn)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@pytest.mark.parametrize("n", [4, 5])
def test_pairwise_non_isomorphic(n):
    gs = [_nx(g) for g in all_graphs(n)]
    for a, b in itertools.combinations(gs, 2):
        assert not nx.is_isomorphic(a, b)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_canonical_form_invariant_under_relabel(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_canonical_form_separates(g, h):
    if g.n == h.n and g.m == h.m:
        assert (canonical_form(g) == canonical_form(h)) == nx.is_isomorphic(_nx(g), _nx(h))


def test_random_graphs_seeded():
    a = random_graphs(20, seed=5)
    b = random_graphs(20, seed=5)
    assert [g.edges for g in a] == [g.edges for g in b]
    assert all(3 <= g.n <= 9 for g in a)


def test_canonical_form_simple():
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert canonical_form(p3) == canonical_form(build_graph(3, [(0, 2), (2, 1)]))
    assert canonical_form(p3) != canonical_form(build_graph(3, [(0, 1)]))
