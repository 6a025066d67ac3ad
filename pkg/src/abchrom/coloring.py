"""Colorings as value objects, plus properness and acyclicity checks.

Colors are the integers ``1..k`` and every one of them is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ColoringError, NotProperError
from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(x) for x in self.colors))
        used = set(self.colors)
        if self.k < 0 or (self.colors and self.k == 0):
            raise ColoringError(f"invalid color count {self.k}")
        if any(x < 1 or x > self.k for x in used):
            raise ColoringError(f"colors must lie in 1..{self.k}")
        if len(used) != self.k:
            missing = sorted(set(range(1, self.k + 1)) - used)
            raise ColoringError(f"empty color classes {missing}")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "Coloring":
        seq = tuple(int(x) for x in seq)
        return cls(seq, max(seq, default=0))

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Coloring":
        """Relabel arbitrary hashable labels to 1..k by first occurrence."""
        code: dict = {}
        out = []
        for x in labels:
            if x not in code:
                code[x] = len(code) + 1
            out.append(code[x])
        return cls(tuple(out), len(code))

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    def normalized(self) -> "Coloring":
        """Canonical representative of the color-class partition."""
        return Coloring.from_labels(self.colors)

    def color_class(self, i: int) -> list[int]:
        return [v for v, x in enumerate(self.colors) if x == i]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {i: [] for i in range(1, self.k + 1)}
        for v, x in enumerate(self.colors):
            out[x].append(v)
        return out

    def to_list(self) -> list[int]:
        return list(self.colors)


@dataclass(frozen=True)
class ColorNeighborhood:
    open: frozenset[int]
    closed: frozenset[int]


def check_size(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise ColoringError(f"coloring has {len(c)} entries, graph has {g.n} vertices")


def trivial_coloring(g: Graph) -> Coloring:
    return Coloring(tuple(range(1, g.n + 1)), g.n)


def color_neighborhood(g: Graph, c: Coloring, v: int) -> ColorNeighborhood:
    check_size(g, c)
    opened = frozenset(c[u] for u in g.adj[v])
    return ColorNeighborhood(opened, opened | {c[v]})


def is_proper(g: Graph, c: Coloring) -> bool:
    check_size(g, c)
    return all(c[u] != c[v] for u, v in g.edges)


def _find(parent: dict, x):
    root = x
    while parent.get(root, root) != root:
        root = parent[root]
    while parent.get(x, x) != root:
        parent[x], x = root, parent[x]
    return root


def bichromatic_cycle_pairs(g: Graph, colors: Sequence[int]) -> list[tuple[int, int]]:
    """Color pairs {a, b} whose induced subgraph contains a cycle.

    One union-find forest per pair; an edge joining two already-connected
    vertices closes a cycle. Assumes a proper assignment.
    """
    parents: dict[tuple[int, int], dict] = {}
    bad = set()
    for u, v in g.edges:
        a, b = colors[u], colors[v]
        key = (a, b) if a < b else (b, a)
        if key in bad:
            continue
        parent = parents.setdefault(key, {})
        ru, rv = _find(parent, u), _find(parent, v)
        if ru == rv:
            bad.add(key)
        else:
            parent[ru] = rv
    return sorted(bad)


def is_acyclic(g: Graph, c: Coloring) -> bool:
    """True iff every two color classes induce a forest. Requires a proper coloring."""
    if not is_proper(g, c):
        raise NotProperError("acyclicity is defined for proper colorings only")
    return not bichromatic_cycle_pairs(g, c.colors)


def closes_cycle(g: Graph, colors: Sequence[int], v: int, new: int) -> bool:
    """Would giving v the color ``new`` create a bichromatic cycle through v?

    Only colors of the other vertices are read. The cycle must use ``new`` and
    some color j present twice in N(v); it exists iff two j-neighbors of v are
    joined by a path in G[V_j ∪ V_new] avoiding v.
    """
    by_color: dict[int, list[int]] = {}
    for u in g.adj[v]:
        by_color.setdefault(colors[u], []).append(u)
    for j, nbrs in by_color.items():
        if len(nbrs) < 2 or j == new:
            continue
        covered: set[int] = set()
        for s in nbrs:
            if s in covered:
                continue
            reach = _reach_in_pair(g, colors, s, (j, new), v)
            if len(reach.intersection(nbrs)) > 1:
                return True
            covered |= reach
    return False


def _reach_in_pair(g: Graph, colors: Sequence[int], src: int, pair: tuple[int, int], skip: int) -> set[int]:
    a, b = pair
    seen = {src}
    stack = [src]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w == skip or w in seen:
                continue
            cw = colors[w]
            if cw == a or cw == b:
                seen.add(w)
                stack.append(w)
    return seen
