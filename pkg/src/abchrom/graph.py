"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import BudgetExceeded, DuplicateEdgeError, SelfLoopError, VertexRangeError


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[frozenset[int], ...] = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __str__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate ``edges`` and return the canonical graph.

    Raises VertexRangeError, SelfLoopError or DuplicateEdgeError.
    """
    if n < 0:
        raise VertexRangeError(f"negative vertex count {n}")
    seen = set()
    adj = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(sorted(seen)), tuple(frozenset(a) for a in adj))


def degree_stats(g: Graph) -> tuple[int, int, tuple[int, ...]]:
    """(max degree, min degree, degree sequence in non-increasing order)."""
    seq = tuple(sorted((len(a) for a in g.adj), reverse=True))
    if not seq:
        return 0, 0, seq
    return seq[0], seq[-1], seq


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of g and h plus every edge between them; h is shifted by g.n."""
    off = g.n
    edges = list(g.edges)
    edges += [(u + off, v + off) for u, v in h.edges]
    edges += [(u, w + off) for u in range(g.n) for w in range(h.n)]
    return build_graph(g.n + h.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return build_graph(g.n + h.n, list(g.edges) + [(u + off, v + off) for u, v in h.edges])


def complement(g: Graph) -> Graph:
    return build_graph(
        g.n, [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adj[u]]
    )


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex v renamed perm[v]."""
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [], [s]
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def biconnected_components(g: Graph) -> list[set[tuple[int, int]]]:
    """Edge sets of the blocks of g (iterative Hopcroft-Tarjan)."""
    disc = [-1] * g.n
    low = [0] * g.n
    timer = 0
    blocks = []
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(sorted(g.adj[root])))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, u, iter(sorted(g.adj[w]))))
                    advanced = True
                    break
                if disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if low[u] >= disc[parent]:
                    block = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.add((a, b) if a < b else (b, a))
                        if (a, b) == (parent, u):
                            break
                    blocks.append(block)
    return blocks


def _is_bipartite_edges(edges: set[tuple[int, int]]) -> bool:
    adj: dict[int, list[int]] = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    side: dict[int, int] = {}
    for s in adj:
        if s in side:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def is_odd_cycle_graph(g: Graph) -> bool:
    """True iff g has no cycle of even length.

    Every block must be a bridge or an odd cycle (cactus with odd cycles only).
    """
    for block in biconnected_components(g):
        if len(block) == 1:
            continue
        verts = {x for e in block for x in e}
        if len(block) != len(verts):
            return False
        if _is_bipartite_edges(block):
            return False
    return True


def simple_cycles(g: Graph, max_len: int | None = None, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle once, starting at its smallest vertex.

    Orientation is fixed by requiring the second vertex to be smaller than the
    last. ``budget`` bounds the number of DFS extensions.
    """
    limit = g.n if max_len is None else max_len
    nodes = 0
    for s in range(g.n):
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True
        stack = [iter(sorted(w for w in g.adj[s] if w > s))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path[path.pop()] = False
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded("cycle enumeration", budget)
            path.append(nxt)
            on_path[nxt] = True
            if len(path) >= 3 and s in g.adj[nxt] and path[1] < nxt:
                yield tuple(path)
            if len(path) < limit:
                stack.append(iter(sorted(w for w in g.adj[nxt] if w > s and not on_path[w])))
            else:
                path.pop()
                on_path[nxt] = False
