"""Hand-transcribed figure graphs with their colorings and a name -> index legend."""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring
from .families import family, generate, roof_coloring
from .graph import Graph, build_graph


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: Graph
    legend: dict[str, int]
    colorings: dict[str, Coloring] = field(default_factory=dict)
    description: str = ""

    def vertex(self, label: str) -> int:
        return self.legend[label]


def _from_names(names: list[str], edges: list[tuple[str, str]]) -> tuple[Graph, dict[str, int]]:
    legend = {name: i for i, name in enumerate(names)}
    return build_graph(len(names), [(legend[a], legend[b]) for a, b in edges]), legend


def _colors(legend: dict[str, int], assignment: dict[str, int]) -> Coloring:
    seq = [0] * len(legend)
    for name, x in assignment.items():
        seq[legend[name]] = x
    return Coloring(tuple(seq), max(seq))


def fig1_c8() -> Fixture:
    """Colored 8-cycle with only color 1 holding a weak acyclic b-vertex."""
    names = ["p0", "y", "p2", "x", "p4", "p5", "p6", "p7"]
    edges = [(names[i], names[(i + 1) % 8]) for i in range(8)]
    g, legend = _from_names(names, edges)
    c = Coloring((1, 3, 1, 3, 1, 2, 1, 2), 3)
    return Fixture("fig1-c8", g, legend, {"c": c}, "8-cycle 2,3-CC, minimal without weak witnesses for 2 and 3")


def fig1_g() -> Fixture:
    """8-cycle with pendant gadgets; c(z) = 2 allows recoloring class 3, c(z) = 4 does not."""
    names = ["p0", "v", "p2", "u", "p4", "p5", "a", "b", "w", "c", "z", "d", "t"]
    cyc = ["p0", "v", "p2", "u", "p4", "p5", "a", "b"]
    edges = [(cyc[i], cyc[(i + 1) % 8]) for i in range(8)]
    edges += [("b", "w"), ("w", "a"), ("b", "c"), ("c", "a"), ("u", "d"), ("v", "z"), ("t", "c")]
    g, legend = _from_names(names, edges)
    base = {"p0": 1, "v": 3, "p2": 1, "u": 3, "p4": 1, "p5": 2, "a": 1, "b": 2,
            "w": 3, "c": 4, "d": 4, "t": 3}
    return Fixture("fig1-g", g, legend, {
        "z2": _colors(legend, {**base, "z": 2}),
        "z4": _colors(legend, {**base, "z": 4}),
    }, "c(z)=2 is reducible in class 3, c(z)=4 is minimal")


# Figure 2 vertex names follow the drawing; the text names differ:
# text a,b,c,d,e,f,g,h = drawing b,a,d,g,e,j,a1,b1
FIG2_TEXT_NAMES = {"a": "b", "b": "a", "c": "d", "d": "g", "e": "e", "f": "j", "g": "a1", "h": "b1"}


def fig2() -> Fixture:
    """Five-coloring whose CCS(1) {C, C'} is not recolorable."""
    edges = [
        ("g", "a"), ("a", "b"), ("b", "c"), ("c", "e"), ("e", "f"), ("f", "g"), ("g", "d"), ("d", "b"),
        ("b", "b1"), ("b", "a1"), ("a1", "a2"), ("a2", "a"), ("a", "a1"), ("a1", "d"), ("d", "a2"),
        ("a", "d"), ("d", "h"), ("h", "i"), ("i", "j"), ("j", "m"), ("m", "l"), ("l", "k"), ("k", "g"),
        ("e1", "e"), ("e", "e2"), ("j1", "j"), ("j", "j2"),
    ]
    colors = {"a": 2, "b": 1, "c": 2, "d": 4, "e": 3, "f": 2, "g": 1, "h": 5, "b1": 4, "a1": 5,
              "a2": 3, "e1": 4, "e2": 5, "i": 4, "j": 1, "k": 4, "l": 5, "m": 4, "j1": 2, "j2": 3}
    names = list(colors)
    g, legend = _from_names(names, edges)
    return Fixture("fig2", g, legend, {"c": _colors(legend, colors)},
                   "C = b c e f g a is a 1-CC, C' = d h i j m l k g is a 1,5-CC")


def fig4() -> Fixture:
    """H_2^1 with the two spine neighbors u and y_1^2 of y_1^1."""
    g, legend = generate(family("roof", 2))
    keep = ["u"] + [k for k in legend if k.endswith("^1")] + ["y1^2"]
    names = sorted(keep, key=lambda k: legend[k])
    index = {legend[k]: i for i, k in enumerate(names)}
    edges = [(index[a], index[b]) for a, b in g.edges if a in index and b in index]
    sub = build_graph(len(names), edges)
    return Fixture("fig4", sub, {k: i for i, k in enumerate(names)}, {},
                   "d^a(y1^1) = 7 via A0 = {u, z1^1, y1^2}, A1 = {x1^1, x2^1}, elp = 3")


def fig6() -> Fixture:
    g, legend = generate(family("roof", 2))
    return Fixture("fig6", g, legend, {"c": roof_coloring(2)}, "roof graph G_2 with an 8-coloring, Delta = 5")


# Figure 7 text names: x = b2, y = c2, x' = a2, y' = d2, z = c1, u = b1, v = b
FIG7_TEXT_NAMES = {"x": "b2", "y": "c2", "x'": "a2", "y'": "d2", "z": "c1", "u": "b1", "v": "b"}


def fig7() -> Fixture:
    edges = [
        ("a", "b1"), ("b1", "c"), ("c", "d1"), ("d1", "a"), ("a", "c1"), ("c1", "d"), ("d", "a1"),
        ("a1", "c"), ("c", "e"), ("e", "b"), ("b", "a1"), ("a1", "e1"), ("e1", "b1"), ("b1", "d"),
        ("d", "e"), ("e", "a"), ("a", "a2"), ("a2", "b2"), ("b2", "c2"), ("c2", "d2"), ("d", "d2"),
        ("d2", "d1"), ("d1", "b"), ("b", "b2"), ("b2", "b1"), ("a1", "a2"), ("c1", "e1"),
        ("e1", "d1"), ("b", "c1"), ("c", "c2"), ("c2", "c1"), ("e", "e1"), ("a2", "d2"),
    ]
    base = {"a": 1, "b": 2, "c": 3, "d": 4, "a1": 1, "b1": 2, "c1": 3, "d1": 4,
            "a2": 5, "e": 6, "e1": 5, "d2": 6, "c2": 5}
    names = list(base) + ["b2"]
    g, legend = _from_names(names, edges)
    return Fixture("fig7", g, legend, {
        "x6": _colors(legend, {**base, "b2": 6}),
        "x3": _colors(legend, {**base, "b2": 3}),
    }, "c(x)=6 is a b-coloring but not acyclic; c(x)=3 is acyclic")


ALL = {
    "fig1-c8": fig1_c8,
    "fig1-g": fig1_g,
    "fig2": fig2,
    "fig4": fig4,
    "fig6": fig6,
    "fig7": fig7,
}


def load(name: str) -> Fixture:
    try:
        return ALL[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(ALL)}") from None


def export(directory) -> list:
    """Write every fixture as <name>.edges, <name>.legend.json and <name>.<coloring>.col."""
    import json
    from pathlib import Path

    from .graphio import serialize_coloring, serialize_graph

    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in ALL:
        f = load(name)
        files = {f"{name}.edges": serialize_graph(f.graph),
                 f"{name}.legend.json": json.dumps(f.legend, indent=2) + "\n"}
        for key, c in f.colorings.items():
            files[f"{name}.{key}.col"] = serialize_coloring(c)
        for fname, text in files.items():
            (out / fname).write_text(text)
            written.append(out / fname)
    return written
