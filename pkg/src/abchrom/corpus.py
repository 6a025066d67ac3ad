"""Test corpora: every connected graph up to a given order, and seeded random graphs."""

from __future__ import annotations

import random
from functools import lru_cache

from .graph import Graph, build_graph, is_connected


def _refine(n, adj, cells):
    """Equitable refinement of an ordered partition (list of lists)."""
    changed = True
    while changed:
        changed = False
        index = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                index[v] = ci
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[index[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            if len(sig) > 1:
                changed = True
                for key in sorted(sig):
                    out.append(sig[key])
            else:
                out.append(cell)
        cells = out
    return cells


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant certificate: the minimal adjacency code over all
    labelings reachable by individualization-refinement."""
    n = g.n
    adj = [sorted(g.adj[v]) for v in range(n)]
    best = None

    def code(order):
        pos = {v: i for i, v in enumerate(order)}
        rows = []
        for i, v in enumerate(order):
            mask = 0
            for w in adj[v]:
                mask |= 1 << pos[w]
            rows.append(mask)
        return tuple(rows)

    def search(cells):
        nonlocal best
        cells = _refine(n, adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cand = code([c[0] for c in cells])
            if best is None or cand < best:
                best = cand
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if n == 0:
        return ()
    search([list(range(n))])
    return (n,) + best


def _from_code(code: tuple[int, ...]) -> Graph:
    n, rows = code[0], code[1:]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1]
    return build_graph(n, edges)


@lru_cache(maxsize=None)
def _all_codes(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical codes of all graphs on n vertices, grown by adding one vertex."""
    if n == 0:
        return ((0,),)
    if n == 1:
        return (canonical_form(build_graph(1, [])),)
    seen = set()
    for code in _all_codes(n - 1):
        base = _from_code(code)
        for mask in range(1 << (n - 1)):
            edges = list(base.edges) + [(u, n - 1) for u in range(n - 1) if mask >> u & 1]
            seen.add(canonical_form(build_graph(n, edges)))
    return tuple(sorted(seen))


def all_graphs(n: int) -> list[Graph]:
    return [_from_code(c) for c in _all_codes(n)]


def connected_graphs(n: int) -> list[Graph]:
    return [g for g in all_graphs(n) if is_connected(g)]


def connected_graphs_upto(n_max: int, n_min: int = 1) -> list[Graph]:
    out = []
    for n in range(n_min, n_max + 1):
        out.extend(connected_graphs(n))
    return out


def random_graph(rng: random.Random, n_min: int = 3, n_max: int = 9) -> Graph:
    n = rng.randint(n_min, n_max)
    p = rng.uniform(0.2, 0.7)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_graphs(count: int, seed: int = 0, n_min: int = 3, n_max: int = 9) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, n_min, n_max) for _ in range(count)]
