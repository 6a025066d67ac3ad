"""Exhaustive oracles: chi, A, phi, A_b, omega, and the degree bounds m, d^a, m_a.

Everything here is exponential and meant for desk-scale graphs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .coloring import Coloring, closes_cycle
from .errors import BudgetExceeded
from .graph import Graph
from .recolor import is_minimal_by_definition
from .witness import DEFAULT_SEARCH_BUDGET, is_b_vertex

DEFAULT_PARTITION_BUDGET = 5_000_000
DEFAULT_PATH_BUDGET = 2_000_000

FILTERS = ("proper", "acyclic")


def enumerate_colorings(g: Graph, filter: str = "proper", max_k: int | None = None,
                        budget: int = DEFAULT_PARTITION_BUDGET) -> Iterator[Coloring]:
    """One canonical coloring per color-class partition passing ``filter``.

    Restricted growth strings over vertices 0..n-1, so output is in
    lexicographic order of the color tuple. Properness is pruned per vertex;
    for acyclic colorings each new vertex is checked for closing a bicolored
    cycle, which is exact because every new cycle runs through it.
    """
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}")
    acyclic = filter == "acyclic"
    n = g.n
    # unassigned vertices carry distinct negative colors so they never pair up
    colors = [-(v + 1) for v in range(n)]
    nodes = 0

    def rec(v, used):
        nonlocal nodes
        if v == n:
            yield Coloring(tuple(colors), used)
            return
        top = used + 1 if max_k is None else min(used + 1, max_k)
        for x in range(1, top + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("partition enumeration", budget)
            if any(colors[u] == x for u in g.adj[v]):
                continue
            if acyclic and closes_cycle(g, colors, v, x):
                continue
            colors[v] = x
            yield from rec(v + 1, max(used, x))
            colors[v] = -(v + 1)

    if n == 0:
        yield Coloring((), 0)
        return
    yield from rec(0, 0)


def clique_number(g: Graph) -> int:
    """omega by branch and bound on bitmasks."""
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best = 0

    def rec(size, cand):
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            rec(size + 1, cand & nbr[v])

    rec(0, (1 << g.n) - 1)
    return best


def degree_sequence_bound(values: list[int]) -> int:
    """max{i : d_i >= i-1} for the non-increasing order of ``values``."""
    seq = sorted(values, reverse=True)
    best = 0
    for i, d in enumerate(seq, start=1):
        if d >= i - 1:
            best = i
    return best


def m_degree(g: Graph) -> int:
    return degree_sequence_bound([g.degree(v) for v in g.vertices()])


def is_b_coloring(g: Graph, c: Coloring) -> bool:
    classes = c.classes()
    return all(any(is_b_vertex(g, c, v) for v in members) for members in classes.values())


@dataclass
class InvariantReport:
    n: int
    m: int
    omega: int
    chi: int
    A: int
    phi: int
    A_b: int
    max_degree: int
    m_degree: int
    m_a: int | None
    witnesses: dict[str, Coloring] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)

    def chain_holds(self) -> bool:
        ok = self.omega <= self.chi <= self.A <= self.A_b <= self.n and self.phi <= self.m_degree
        return ok and (self.m_a is None or self.A_b <= self.m_a)

    def to_json(self) -> dict:
        return {
            "n": self.n, "m": self.m, "omega": self.omega, "chi": self.chi, "A": self.A,
            "phi": self.phi, "A_b": self.A_b, "max_degree": self.max_degree,
            "m_degree": self.m_degree, "m_a": self.m_a,
            "witnesses": {k: list(c.colors) for k, c in self.witnesses.items()},
            "meta": self.meta,
        }


def exact_invariants(g: Graph, *, budget: int = DEFAULT_PARTITION_BUDGET,
                     search_budget: int = DEFAULT_SEARCH_BUDGET, with_m_a: bool = True) -> InvariantReport:
    """All exact invariants with witness colorings (lexicographically smallest among optima)."""
    start = time.perf_counter()
    chi = phi = None
    wit: dict[str, Coloring] = {}
    proper_count = 0
    for c in enumerate_colorings(g, "proper", budget=budget):
        proper_count += 1
        if chi is None or c.k < chi:
            chi, wit["chi"] = c.k, c
        if (phi is None or c.k > phi) and is_b_coloring(g, c):
            phi, wit["phi"] = c.k, c
    A = A_b = None
    acyclic_count = 0
    for c in enumerate_colorings(g, "acyclic", budget=budget):
        acyclic_count += 1
        if A is None or c.k < A:
            A, wit["A"] = c.k, c
        if (A_b is None or c.k > A_b) and is_minimal_by_definition(g, c, "acyclic", budget=search_budget):
            A_b, wit["A_b"] = c.k, c
    m_a = m_a_degree(g) if with_m_a else None
    return InvariantReport(
        n=g.n, m=g.m, omega=clique_number(g), chi=chi, A=A, phi=phi, A_b=A_b,
        max_degree=g.max_degree, m_degree=m_degree(g), m_a=m_a, witnesses=wit,
        meta={"proper_partitions": proper_count, "acyclic_partitions": acyclic_count,
              "partition_budget": budget, "seconds": round(time.perf_counter() - start, 4)},
    )


def acyclic_b_chromatic_number(g: Graph, *, budget: int = DEFAULT_PARTITION_BUDGET) -> tuple[int, Coloring]:
    best = None
    for c in enumerate_colorings(g, "acyclic", budget=budget):
        if (best is None or c.k > best.k) and is_minimal_by_definition(g, c, "acyclic"):
            best = c
    return best.k, best


# ---- acyclic degree -------------------------------------------------------


@dataclass(frozen=True)
class WeakPartition:
    vertex: int
    A0: frozenset[int]
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        if any(len(b) < 2 for b in self.blocks):
            raise ValueError("blocks of a weak partition need at least two vertices")

    def check(self, g: Graph):
        parts = [self.A0, *self.blocks]
        union = frozenset().union(*parts)
        if union != g.adj[self.vertex] or sum(len(p) for p in parts) != len(union):
            raise ValueError("not a partition of the neighborhood")

    @property
    def value_without_paths(self) -> int:
        return len(self.A0) + len(self.blocks)


@dataclass(frozen=True)
class EviPath:
    vertices: tuple[int, ...]
    block_id: int = -1

    @property
    def ends(self) -> tuple[int, int]:
        a, b = self.vertices[0], self.vertices[-1]
        return (a, b) if a < b else (b, a)

    def even_vertices(self) -> frozenset[int]:
        # positions counted from 1, so even positions are the odd indices
        return frozenset(self.vertices[1::2])

    def odd_vertices(self) -> frozenset[int]:
        return frozenset(self.vertices[0::2])


def evi_compatible(p: EviPath, q: EviPath) -> bool:
    """Shared vertices must be odd-positioned in both paths."""
    pe, qe = p.even_vertices(), q.even_vertices()
    shared = (pe | p.odd_vertices()) & (qe | q.odd_vertices())
    return not (shared & (pe | qe))


@lru_cache(maxsize=256)
def _paths_between(g: Graph, avoid: int, s: int, t: int, budget: int, reduced: bool) -> tuple[tuple[int, ...], ...]:
    """Even-length simple s-t paths in G - avoid, by DFS with reachability pruning.

    With ``reduced`` a path is skipped when it has a chord p_i p_j with j - i
    odd and at least 3: cutting p_{i+1}..p_{j-1} keeps the endpoints and the
    parity of every later position, so the shorter path uses a subset of the
    vertices and of the even-position vertices and is compatible with
    everything the long one is.  Maximum packings are unchanged.
    """
    out = []
    on_path = [False] * g.n
    on_path[avoid] = True
    nodes = 0

    def reaches(u):
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            if x == t:
                return True
            for w in g.adj[x]:
                if not on_path[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def has_odd_chord(w, j):
        adj = g.adj[w]
        return any(path[i] in adj for i in range(j - 3, -1, -2))

    path = [s]
    on_path[s] = True

    def rec(u):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded("path enumeration", budget)
        j = len(path)
        for w in sorted(g.adj[u]):
            if on_path[w]:
                continue
            if reduced and has_odd_chord(w, j):
                continue
            if w == t:
                if j % 2 == 0:
                    out.append(tuple(path) + (t,))
                continue
            on_path[w] = True
            path.append(w)
            if reaches(w):
                rec(w)
            path.pop()
            on_path[w] = False

    rec(s)
    return tuple(out)


def even_paths(g: Graph, v: int, s: int, t: int, budget: int = DEFAULT_PATH_BUDGET, *,
               reduced: bool = True) -> list[EviPath]:
    if s > t:
        s, t = t, s
    return [EviPath(p) for p in _paths_between(g, v, s, t, budget, reduced)]


def _max_independent(conflict: list[int], cand: int | None = None, evens: list[int] | None = None,
                     floor: int = 0) -> int:
    """Maximum independent set size within ``cand`` (bitmask), or ``floor`` if none beats it.

    ``conflict[i]`` is the neighbor bitmask of i. With ``evens`` (bitmask of
    even-position vertices per path) the bound also uses that each packed
    path needs an even vertex of its own.
    """
    if cand is None:
        cand = (1 << len(conflict)) - 1
    best = floor

    def bound(c):
        b = bin(c).count("1")
        if evens is not None and b > 1:
            used = 0
            rest = c
            while rest:
                low = rest & -rest
                used |= evens[low.bit_length() - 1]
                rest ^= low
            b = min(b, bin(used).count("1"))
        return b

    def rec(c, count):
        nonlocal best
        if c == 0:
            best = max(best, count)
            return
        if count + bound(c) <= best:
            return
        # branch on the candidate with most conflicts inside c
        pick, deg = -1, -1
        rest = c
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            d = bin(conflict[i] & c).count("1")
            if d > deg:
                pick, deg = i, d
        if deg == 0:
            best = max(best, count + bin(c).count("1"))
            return
        rec(c & ~(1 << pick) & ~conflict[pick], count + 1)
        rec(c & ~(1 << pick), count)

    rec(cand, 0)
    return best


def _conflicts(paths: list[EviPath]) -> list[int]:
    conf = [0] * len(paths)
    for a in range(len(paths)):
        for b in range(a + 1, len(paths)):
            if not evi_compatible(paths[a], paths[b]):
                conf[a] |= 1 << b
                conf[b] |= 1 << a
    return conf


def elp(g: Graph, v: int, P: WeakPartition, *, budget: int = DEFAULT_PATH_BUDGET) -> int:
    """Maximum number of pairwise EVI disjoint even-length paths with both ends in one block."""
    P.check(g)
    paths = []
    for bid, block in enumerate(P.blocks):
        members = sorted(block)
        for i, s in enumerate(members):
            for t in members[i + 1:]:
                paths.extend(EviPath(p.vertices, bid) for p in even_paths(g, v, s, t, budget))
    return _max_independent(_conflicts(paths))


def weak_partitions(g: Graph, v: int) -> Iterator[WeakPartition]:
    """Every weak partition of N(v): set partitions whose singletons form A0."""
    nbrs = sorted(g.adj[v])
    labels = [0] * len(nbrs)

    def rec(i, used):
        if i == len(nbrs):
            groups: dict[int, list[int]] = {}
            for u, lab in zip(nbrs, labels):
                groups.setdefault(lab, []).append(u)
            a0 = frozenset(u for grp in groups.values() if len(grp) == 1 for u in grp)
            blocks = tuple(frozenset(grp) for grp in groups.values() if len(grp) > 1)
            yield WeakPartition(v, a0, blocks)
            return
        for lab in range(used + 1):
            labels[i] = lab
            yield from rec(i + 1, max(used, lab + 1))

    yield from rec(0, 0)


def _masks(paths: list[EviPath]) -> tuple[list[int], list[int]]:
    vm, em = [], []
    for p in paths:
        x = 0
        for u in p.vertices:
            x |= 1 << u
        e = 0
        for u in p.vertices[1::2]:
            e |= 1 << u
        vm.append(x)
        em.append(e)
    return vm, em


def acyclic_degree(g: Graph, v: int, *, budget: int = DEFAULT_PATH_BUDGET, detail: bool = False,
                   cap: int | None = None):
    """d^a(v) = max over weak partitions of |A0| + #blocks + elp.

    Paths for every neighbor pair and their pairwise conflicts are computed
    once; per partition the maximum independent set runs on the paths whose
    ends share a block, seeded with the best value so far.
    With ``detail`` returns (value, best partition, elp of it). With ``cap``
    the search may stop once the value reaches it (the result is then only
    guaranteed to be >= cap).
    """
    nbrs = sorted(g.adj[v])
    paths: list[EviPath] = []
    pair_bits: dict[tuple[int, int], int] = {}
    for i, s in enumerate(nbrs):
        for t in nbrs[i + 1:]:
            bits = 0
            for p in even_paths(g, v, s, t, budget):
                bits |= 1 << len(paths)
                paths.append(p)
            pair_bits[(s, t)] = bits
    vm, em = _masks(paths)
    conflict = [0] * len(paths)
    for a in range(len(paths)):
        for b in range(a + 1, len(paths)):
            if em[a] & vm[b] or em[b] & vm[a]:
                conflict[a] |= 1 << b
                conflict[b] |= 1 << a
    scored = []
    for P in weak_partitions(g, v):
        cand = 0
        for block in P.blocks:
            members = sorted(block)
            for i, s in enumerate(members):
                for t in members[i + 1:]:
                    cand |= pair_bits[(s, t)]
        used, rest = 0, cand
        while rest:
            low = rest & -rest
            used |= em[low.bit_length() - 1]
            rest ^= low
        opt = P.value_without_paths + min(bin(cand).count("1"), bin(used).count("1"))
        scored.append((opt, P, cand))
    # most promising partitions first, so the bound cuts the rest early
    scored.sort(key=lambda item: -item[0])
    best, best_p, best_elp = -1, None, 0
    for opt, P, cand in scored:
        if opt <= best or (cap is not None and best >= cap):
            break
        base = P.value_without_paths
        k = _max_independent(conflict, cand, em, floor=best - base) if cand else 0
        if base + k > best:
            best, best_p, best_elp = base + k, P, k
    if best < 0:
        best = 0
    return (best, best_p, best_elp) if detail else best


def acyclic_degree_by_paths(g: Graph, v: int, *, budget: int = DEFAULT_PATH_BUDGET) -> int:
    """Independent route to d^a(v) without enumerating partitions.

    For a compatible path set S the best partition groups the neighbors by
    the components that S's endpoint pairs induce, so
    d^a(v) = d(v) + max_S (|S| - sum over components (size - 1)).
    """
    nbrs = sorted(g.adj[v])
    paths = []
    for i, s in enumerate(nbrs):
        for t in nbrs[i + 1:]:
            paths.extend(even_paths(g, v, s, t, budget, reduced=False))
    conf = _conflicts(paths)
    best = 0
    chosen: list[int] = []

    def gain():
        parent = {}

        def find(x):
            while parent.get(x, x) != x:
                x = parent[x]
            return x

        merges = 0
        for idx in chosen:
            a, b = paths[idx].ends
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                merges += 1
        return len(chosen) - merges

    def rec(i, blocked):
        nonlocal best
        best = max(best, gain())
        if len(chosen) + (len(paths) - i) <= best:
            return
        for j in range(i, len(paths)):
            if blocked >> j & 1:
                continue
            chosen.append(j)
            rec(j + 1, blocked | conf[j])
            chosen.pop()

    rec(0, 0)
    return len(nbrs) + best


def acyclic_degrees(g: Graph, *, budget: int = DEFAULT_PATH_BUDGET, cap: int | None = None) -> list[int]:
    return [acyclic_degree(g, v, budget=budget, cap=cap) for v in g.vertices()]


def m_a_degree(g: Graph, *, budget: int = DEFAULT_PATH_BUDGET) -> int:
    """m_a(G); degrees are capped at n-1 since larger values cannot change it."""
    return degree_sequence_bound([min(d, g.n - 1) for d in acyclic_degrees(g, budget=budget, cap=g.n - 1)])
