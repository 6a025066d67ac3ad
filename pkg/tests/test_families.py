import pytest

from abchrom.coloring import is_acyclic, is_proper
from abchrom.errors import FamilyError
from abchrom.exact import exact_invariants
from abchrom.families import (family, formula_ab, generate, is_tree, join_of, parse_family_spec,
                              reference_coloring, tree_ab_bounds)
from abchrom.graph import degree_stats
from abchrom.recolor import is_minimal_by_definition


def _specs_up_to(n_max):
    texts = []
    for n in range(1, n_max + 1):
        texts += [f"empty:{n}", f"path:{n}", f"complete:{n}", f"star:{n}", f"cycle:{n}",
                  f"wheel:{n}", f"fan:{n}", f"star_of_stars:{n}"]
    for a in range(1, 6):
        for b in range(a, 6):
            texts += [f"kbip:{a},{b}", f"split:{a},{b}"]
    texts += ["roof:1", "quad:1", "join(cycle:5,complete:2)", "join(path:5,empty:3)",
              "join(cycle:3,cycle:5)", "join(empty:2,empty:3,empty:1)"]
    out = []
    for text in texts:
        try:
            spec = parse_family_spec(text)
        except FamilyError:
            continue
        g, _ = generate(spec)
        if g.n <= n_max:
            out.append(text)
    return out


def test_parse_and_print():
    assert str(parse_family_spec("path:7")) == "path:7"
    assert str(parse_family_spec("join(cycle:5,cycle:5)")) == "join(cycle:5,cycle:5)"
    assert parse_family_spec("quad:2") == family("quad_extremal", 2)
    assert parse_family_spec("kbip:2,3") == family("complete_bipartite", 2, 3)
    three = parse_family_spec("join(empty:1, empty:2, empty:3)")
    assert three == join_of(family("empty", 1), family("empty", 2), family("empty", 3))


@pytest.mark.parametrize("text", ["", "nope:3", "path", "path:0", "cycle:2", "kbip:2", "join(path:3)",
                                  "join(path:3,path:4", "path:3,4"])
def test_parse_errors(text):
    with pytest.raises(FamilyError):
        parse_family_spec(text)


def test_generate_examples():
    g, _ = generate(family("star_of_stars", 2))
    assert g.n == 10
    assert degree_stats(g)[2].count(3) == 4 and degree_stats(g)[2].count(1) == 6
    g, _ = generate(family("roof", 2))
    assert g.n == 58 and g.max_degree == 5
    g, _ = generate(family("quad_extremal", 1))
    assert g.n == 4 and g.m == 4 and all(len(a) == 2 for a in g.adj)
    g, _ = generate(family("quad_extremal", 2))
    assert g.n == 91


def test_join_legend_prefixes():
    g, legend = generate(parse_family_spec("join(complete:1,cycle:5)"))
    assert g.n == 6 and g.m == 10
    assert all(name.startswith(("G.", "H.")) for name in legend)


@pytest.mark.parametrize("text", _specs_up_to(10))
def test_formula_matches_oracle(text):
    spec = parse_family_spec(text)
    try:
        expected = formula_ab(spec)
    except FamilyError:
        pytest.skip("outside the closed-form range")
    ab = exact_invariants(generate(spec)[0], with_m_a=False).A_b
    if isinstance(expected, tuple):
        assert expected[0] <= ab <= expected[1]
    else:
        assert ab == expected


def test_formula_examples():
    assert formula_ab(family("complete_bipartite", 3, 5)) == 6
    assert formula_ab(parse_family_spec("join(cycle:5,cycle:7)")) == 10
    assert formula_ab(parse_family_spec("join(complete:4,empty:3)")) == 5
    assert formula_ab(family("roof", 3)) == 10
    assert formula_ab(family("quad_extremal", 2)) == 9


@pytest.mark.parametrize("text", ["wheel:4", "fan:5", "path:4"])
def test_formula_out_of_range(text):
    with pytest.raises(FamilyError):
        formula_ab(parse_family_spec(text))


def test_tree_interval():
    g, _ = generate(family("star_of_stars", 2))
    assert is_tree(g)
    lo, hi = tree_ab_bounds(g)
    assert (lo, hi) == (3, 4)
    assert lo <= exact_invariants(g, with_m_a=False).A_b <= hi


@pytest.mark.parametrize("text", ["path:5", "path:8", "cycle:3", "cycle:6", "cycle:7", "quad:1", "roof:1"])
def test_reference_colorings_minimal(text):
    spec = parse_family_spec(text)
    g, _ = generate(spec)
    c = reference_coloring(spec)
    assert is_proper(g, c) and is_acyclic(g, c)
    assert is_minimal_by_definition(g, c)
    assert c.k == formula_ab(spec)


def test_path_coloring_formula():
    c = reference_coloring(family("path", 7))
    assert c.colors == (2, 3, 1, 2, 3, 1, 2)


def test_large_reference_colorings():
    g, legend = generate(family("roof", 2))
    c = reference_coloring(family("roof", 2))
    assert c.k == 8 and is_acyclic(g, c)
    g, _ = generate(family("quad_extremal", 2))
    c = reference_coloring(family("quad_extremal", 2))
    assert c.k == 9 and is_acyclic(g, c)


def test_reference_unsupported():
    with pytest.raises(FamilyError):
        reference_coloring(family("wheel", 6))
