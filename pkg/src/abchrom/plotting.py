"""Static figures of colored graphs and invariant summaries (matplotlib, Agg backend)."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from .coloring import Coloring  # noqa: E402
from .graph import Graph  # noqa: E402


def _nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def layout(g: Graph, seed: int = 0) -> dict[int, tuple[float, float]]:
    h = _nx(g)
    if g.n <= 40 and g.m > 0 and nx.is_connected(h):
        return nx.kamada_kawai_layout(h)
    return nx.spring_layout(h, seed=seed)


def draw_coloring(g: Graph, c: Coloring | None, path, *, labels: dict[int, str] | None = None,
                  title: str | None = None, highlight: list[int] | None = None, seed: int = 0) -> Path:
    """Write a PNG/SVG/PDF of g with vertices filled by color class."""
    path = Path(path)
    pos = layout(g, seed)
    fig, ax = plt.subplots(figsize=(5, 5))
    h = _nx(g)
    nx.draw_networkx_edges(h, pos, ax=ax, width=1.0, edge_color="#555555")
    if c is not None:
        cmap = plt.get_cmap("tab20" if c.k > 10 else "tab10")
        fill = [cmap((x - 1) % cmap.N) for x in c.colors]
    else:
        fill = ["white"] * g.n
    edge = ["red" if highlight and v in highlight else "black" for v in range(g.n)]
    nx.draw_networkx_nodes(h, pos, ax=ax, node_color=fill, edgecolors=edge,
                           node_size=260 if g.n < 40 else 80)
    if g.n <= 60:
        text = {v: (labels or {}).get(v, str(c[v]) if c is not None else str(v)) for v in range(g.n)}
        nx.draw_networkx_labels(h, pos, labels=text, ax=ax, font_size=7)
    ax.set_axis_off()
    if title:
        ax.set_title(title, fontsize=9)
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def draw_heuristic_histogram(counts: dict[int, int], bounds: dict[str, int], path) -> Path:
    """Bar chart of final color counts over heuristic runs, with oracle bounds as lines."""
    path = Path(path)
    fig, ax = plt.subplots(figsize=(5, 3))
    ks = sorted(counts)
    ax.bar(ks, [counts[k] for k in ks], color="#4477aa", width=0.6)
    for name, val in bounds.items():
        if val is not None:
            ax.axvline(val, linestyle="--", linewidth=1, color="#aa3377")
            ax.text(val, ax.get_ylim()[1] * 0.95, name, fontsize=7, ha="center")
    ax.set_xlabel("colors in final coloring")
    ax.set_ylabel("runs")
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
