"""Acyclic b-chromatic number toolkit.

Acyclic colorings, the acyclic recoloring algorithm, acyclic b-vertex
witnesses for minimality, exact oracles for chi, A, phi and A_b, the
acyclic-degree bound m_a, and the graph families with known values.
"""

__version__ = "0.1.0"

from .coloring import Coloring, is_acyclic, is_proper, trivial_coloring  # noqa: E402
from .graph import Graph, build_graph, join  # noqa: E402

__all__ = ["Coloring", "Graph", "build_graph", "is_acyclic", "is_proper", "join", "trivial_coloring", "__version__"]
