from abchrom.coloring import trivial_coloring
from abchrom.fixtures import load
from abchrom.graph import build_graph
from abchrom.plotting import draw_coloring, draw_heuristic_histogram, layout


def test_draw_fixture(tmp_path):
    f = load("fig2")
    labels = {i: name for name, i in f.legend.items()}
    path = draw_coloring(f.graph, f.colorings["c"], tmp_path / "fig2.png", labels=labels,
                         title="fig2", highlight=[f.vertex("b")])
    assert path.stat().st_size > 1000
    assert path.read_bytes()[:4] == b"\x89PNG"


def test_draw_disconnected_and_uncolored(tmp_path):
    g = build_graph(5, [(0, 1)])
    assert len(layout(g)) == 5
    assert draw_coloring(g, None, tmp_path / "g.svg").exists()
    assert draw_coloring(g, trivial_coloring(g), tmp_path / "g.pdf").exists()


def test_histogram(tmp_path):
    path = draw_heuristic_histogram({2: 30, 3: 70}, {"A": 2, "A_b": 3}, tmp_path / "h.png")
    assert path.exists()
