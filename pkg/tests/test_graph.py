import pytest
from hypothesis import given, settings

from abchrom.errors import DuplicateEdgeError, EdgeCountMismatch, GraphFormatError, SelfLoopError, VertexRangeError
from abchrom.families import family, generate
from abchrom.graph import (build_graph, complement, components, degree_stats, disjoint_union, is_connected,
                           is_odd_cycle_graph, join, relabel, simple_cycles)
from abchrom.graphio import parse_coloring, parse_graph, serialize_coloring, serialize_graph
from abchrom.coloring import Coloring
from abchrom.fixtures import ALL, load

from conftest import graphs


def empty(n):
    return build_graph(n, [])


def test_build_k2():
    g = build_graph(2, [(0, 1)])
    assert g.max_degree == 1 and g.m == 1


def test_build_c4(c4):
    assert [c4.degree(v) for v in range(4)] == [2, 2, 2, 2]


@pytest.mark.parametrize("n,edges,exc", [
    (3, [(0, 0)], SelfLoopError),
    (3, [(0, 3)], VertexRangeError),
    (3, [(0, -1)], VertexRangeError),
    (3, [(0, 1), (1, 0)], DuplicateEdgeError),
])
def test_build_errors(n, edges, exc):
    with pytest.raises(exc):
        build_graph(n, edges)


def test_degree_stats():
    p5, _ = generate(family("path", 5))
    assert degree_stats(p5) == (2, 1, (2, 2, 2, 1, 1))
    k4, _ = generate(family("complete", 4))
    assert degree_stats(k4)[:2] == (3, 3)
    sos, _ = generate(family("star_of_stars", 2))
    seq = degree_stats(sos)[2]
    assert seq.count(3) == 4 and seq.count(1) == 6


def test_join_examples():
    w6 = join(build_graph(1, []), generate(family("cycle", 5))[0])
    assert (w6.n, w6.m) == (6, 10)
    k23 = join(empty(2), empty(3))
    assert k23.m == 6 and all(k23.degree(v) == 3 for v in range(2)) and all(k23.degree(v) == 2 for v in range(2, 5))
    assert join(empty(1), empty(1)).edges == ((0, 1),)


@given(graphs(max_n=5), graphs(max_n=5))
def test_join_degrees(g, h):
    j = join(g, h)
    assert j.n == g.n + h.n and j.m == g.m + h.m + g.n * h.n
    assert all(j.degree(v) == g.degree(v) + h.n for v in range(g.n))
    assert all(j.degree(g.n + v) == h.degree(v) + g.n for v in range(h.n))


@given(graphs())
def test_handshake_and_symmetry(g):
    assert 2 * g.m == sum(g.degree(v) for v in range(g.n))
    assert all(v in g.adj[u] for v in range(g.n) for u in g.adj[v])


def test_odd_cycle_graph_examples(c4):
    assert is_odd_cycle_graph(generate(family("cycle", 5))[0])
    assert not is_odd_cycle_graph(c4)
    bowtie = build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert is_odd_cycle_graph(bowtie)
    diamond = build_graph(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)])
    assert not is_odd_cycle_graph(diamond)


@settings(max_examples=300)
@given(graphs(max_n=8))
def test_odd_cycle_graph_matches_enumeration(g):
    brute = all(len(c) % 2 == 1 for c in simple_cycles(g))
    assert is_odd_cycle_graph(g) == brute


def test_simple_cycles_counts():
    k4, _ = generate(family("complete", 4))
    assert len(list(simple_cycles(k4))) == 7
    k5, _ = generate(family("complete", 5))
    # 10 triangles, 15 four-cycles, 12 five-cycles
    assert len(list(simple_cycles(k5))) == 37


def test_components_and_complement():
    g = disjoint_union(build_graph(2, [(0, 1)]), empty(2))
    assert sorted(map(sorted, components(g))) == [[0, 1], [2], [3]]
    assert not is_connected(g)
    assert complement(complement(g)) == g
    assert relabel(g, [3, 2, 1, 0]).edges == ((2, 3),)


def test_dimacs_path():
    g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", "dimacs")
    assert g.edges == ((0, 1), (1, 2))


def test_dimacs_comments_and_errors():
    assert parse_graph("c hi\np edge 2 1\nc mid\ne 1 2\n", "dimacs").m == 1
    with pytest.raises(EdgeCountMismatch):
        parse_graph("p edge 3 3\ne 1 2\ne 2 3\n", "dimacs")
    with pytest.raises(GraphFormatError) as err:
        parse_graph("p edge 3 2\ne 1 2\ne 2 x\n", "dimacs")
    assert err.value.line == 3
    with pytest.raises(GraphFormatError) as err:
        parse_graph("3\n0 1\n1 1\n", "edgelist")
    assert err.value.line == 3


def test_serialize_c4(c4):
    assert serialize_graph(c4, "edgelist") == "4\n0 1\n0 3\n1 2\n2 3\n"


def test_serialize_c4_cycle_order():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert serialize_graph(g, "edgelist") == "4\n0 1\n0 3\n1 2\n2 3\n"


@pytest.mark.parametrize("name", sorted(ALL))
@pytest.mark.parametrize("fmt", ["edgelist", "dimacs"])
def test_roundtrip_fixtures(name, fmt):
    g = load(name).graph
    assert parse_graph(serialize_graph(g, fmt), fmt) == g


@given(graphs(max_n=9))
def test_roundtrip_random(g):
    for fmt in ("edgelist", "dimacs"):
        assert parse_graph(serialize_graph(g, fmt), fmt) == g


def test_coloring_text_formats():
    c = Coloring((1, 2, 1, 3), 3)
    assert parse_coloring(serialize_coloring(c)) == c
    assert parse_coloring("[1, 2, 1, 3]") == c
    with pytest.raises(GraphFormatError):
        parse_coloring("2\n1 3")
