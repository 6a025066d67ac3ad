import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abchrom.coloring import Coloring, is_acyclic, is_proper, trivial_coloring
from abchrom.errors import NotAcyclicError, NotProperError
from abchrom.exact import enumerate_colorings
from abchrom.fixtures import load
from abchrom.graph import build_graph
from abchrom.recolor import (STRATEGIES, _removable_brute_force, acyclic_recoloring_step, is_minimal_by_definition,
                             is_minimal_by_witnesses, recoloring_step, run_recoloring_algorithm)
from abchrom.witness import is_b_vertex

from conftest import graphs


def test_proper_step_examples(c4):
    out = recoloring_step(c4, trivial_coloring(c4), 4)
    assert out.present and out.result.k == 3 and is_proper(c4, out.result)
    k3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert all(not recoloring_step(k3, Coloring((1, 2, 3), 3), i).present for i in (1, 2, 3))
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert not recoloring_step(p3, Coloring((1, 2, 1), 2), 2).present


def test_fig1_steps():
    f = load("fig1-g")
    g = f.graph
    out = acyclic_recoloring_step(g, f.colorings["z2"], 3)
    assert out.present and out.result.k == f.colorings["z2"].k - 1 and is_acyclic(g, out.result)
    moved = dict(out.assignment_log)
    for name in ("v", "u", "w", "t"):
        assert f.vertex(name) in moved
    assert not acyclic_recoloring_step(g, f.colorings["z4"], 3).present


def test_c4_witness_coloring_is_stuck(c4):
    c = Coloring((1, 2, 1, 3), 3)
    assert all(not acyclic_recoloring_step(c4, c, i).present for i in (1, 2, 3))
    assert is_minimal_by_definition(c4, c) and is_minimal_by_witnesses(c4, c)


def test_algorithm_examples(c4):
    assert run_recoloring_algorithm(build_graph(5, [])).k == 1
    for strategy in STRATEGIES:
        assert run_recoloring_algorithm(c4, strategy=strategy, seed=3).k == 3
    k5 = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert run_recoloring_algorithm(k5).colors == (1, 2, 3, 4, 5)


def test_algorithm_rejects_bad_start(c4):
    with pytest.raises(NotProperError):
        run_recoloring_algorithm(c4, Coloring((1, 1, 2, 2), 2))
    with pytest.raises(NotAcyclicError):
        run_recoloring_algorithm(c4, Coloring((1, 2, 1, 2), 2))
    with pytest.raises(ValueError):
        run_recoloring_algorithm(c4, variant="greedy")


@pytest.mark.parametrize("name,key,expected", [
    ("fig1-c8", "c", True), ("fig1-g", "z2", False), ("fig1-g", "z4", True),
    ("fig2", "c", True), ("fig7", "x3", True),
])
def test_fixture_minimality(name, key, expected):
    f = load(name)
    c = f.colorings[key]
    assert is_minimal_by_definition(f.graph, c) is expected
    assert is_minimal_by_witnesses(f.graph, c) is expected


def test_trivial_coloring_not_minimal_unless_complete():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 2)])
    assert not is_minimal_by_definition(g, trivial_coloring(g))
    assert is_minimal_by_witnesses(build_graph(3, []), Coloring((1, 1, 1), 1))


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.integers(0, 10_000), st.sampled_from(STRATEGIES), st.booleans())
def test_run_terminates_minimal_acyclic(g, seed, strategy, random_choice):
    trace = []
    c = run_recoloring_algorithm(g, strategy=strategy, seed=seed, random_choice=random_choice, trace=trace)
    assert len(trace) <= max(g.n - 1, 0)
    assert c.k == g.n - len(trace)
    assert is_proper(g, c) and is_acyclic(g, c)
    assert is_minimal_by_definition(g, c)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.integers(0, 10_000))
def test_proper_variant_keeps_b_vertices(g, seed):
    c = trivial_coloring(g)
    rng = random.Random(seed)
    while True:
        before = [v for v in range(g.n) if is_b_vertex(g, c, v)]
        for i in range(1, c.k + 1):
            out = recoloring_step(g, c, i, rng=rng)
            if out.present:
                break
        else:
            break
        after = out.result
        # surviving b-vertices stay b-vertices after a proper step
        assert all(is_b_vertex(g, after, v) for v in before if c[v] != out.removed_color)
        c = after
    assert is_minimal_by_definition(g, c, "proper")


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_step_agrees_with_brute_force(g):
    for c in enumerate_colorings(g, "acyclic"):
        for i in range(1, c.k + 1):
            members = c.color_class(i)
            assert acyclic_recoloring_step(g, c, i).present == _removable_brute_force(g, c, i, members)
