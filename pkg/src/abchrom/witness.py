"""The b-vertex hierarchy for acyclic colorings.

b-vertex  =>  weak acyclic b-vertex  =>  acyclic b-vertex.

A weak acyclic b-vertex v has every missing color blocked: for each color
l absent from N[v] some color j on N(v) has two j-neighbors of v joined by a
(j, l)-alternating path.  An acyclic b-vertex is either weak, or lies on a
critical cycle system of its own color that cannot be recolored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .coloring import Coloring, check_size, closes_cycle, is_acyclic
from .errors import BudgetExceeded, NotAcyclicError
from .graph import Graph, simple_cycles

DEFAULT_CYCLE_BUDGET = 5_000_000
DEFAULT_SEARCH_BUDGET = 10_000_000


@dataclass(frozen=True)
class CriticalCycle:
    cycle: tuple[int, ...]
    colors_used: frozenset[int]
    alternating: int
    principal: frozenset[int]

    def __len__(self):
        return len(self.cycle)


@dataclass(frozen=True)
class CCS:
    principal_color: int
    cycles: tuple[CriticalCycle, ...]
    vertex_set: frozenset[int]

    def principal_vertices(self, c: Coloring) -> list[int]:
        return sorted(v for v in self.vertex_set if c[v] == self.principal_color)


@dataclass(frozen=True)
class AvailableColors:
    vertex: int
    colors: frozenset[int]


def _require_acyclic(g: Graph, c: Coloring):
    if not is_acyclic(g, c):
        raise NotAcyclicError("coloring is not acyclic")


def missing_colors(g: Graph, c: Coloring, v: int) -> list[int]:
    closed = {c[u] for u in g.adj[v]} | {c[v]}
    return [x for x in range(1, c.k + 1) if x not in closed]


def is_b_vertex(g: Graph, c: Coloring, v: int) -> bool:
    check_size(g, c)
    return not missing_colors(g, c, v)


def blocked_missing_colors(g: Graph, c: Coloring, v: int) -> dict[int, bool]:
    """For each missing color, whether recoloring v with it closes a bichromatic cycle."""
    return {x: closes_cycle(g, c.colors, v, x) for x in missing_colors(g, c, v)}


def is_weak_acyclic_b_vertex(g: Graph, c: Coloring, v: int, *, checked: bool = False) -> bool:
    if not checked:
        check_size(g, c)
        _require_acyclic(g, c)
    return all(closes_cycle(g, c.colors, v, x) for x in missing_colors(g, c, v))


def available_colors(g: Graph, c: Coloring, v: int) -> AvailableColors:
    """Missing colors of v that no bicolored even path between two neighbors blocks."""
    free = frozenset(x for x in missing_colors(g, c, v) if not closes_cycle(g, c.colors, v, x))
    return AvailableColors(v, free)


@lru_cache(maxsize=512)
def even_cycles(g: Graph, budget: int = DEFAULT_CYCLE_BUDGET) -> tuple[tuple[int, ...], ...]:
    """All simple cycles of length >= 6 with even length (critical-cycle candidates)."""
    return tuple(cyc for cyc in simple_cycles(g, budget=budget) if len(cyc) % 2 == 0 and len(cyc) >= 6)


def classify_cycle(cycle: tuple[int, ...], c: Coloring) -> CriticalCycle | None:
    """Return the critical-cycle annotation of ``cycle`` under c, or None.

    Critical: even, exactly three colors, one color on every second vertex,
    and at least one of the other two colors used twice or more (principal).
    """
    if len(cycle) % 2:
        return None
    cols = [c[v] for v in cycle]
    used = frozenset(cols)
    if len(used) != 3:
        return None
    for parity in (0, 1):
        alt = set(cols[parity::2])
        if len(alt) == 1:
            a = alt.pop()
            others = cols[1 - parity::2]
            principal = frozenset(x for x in used - {a} if others.count(x) >= 2)
            if principal:
                return CriticalCycle(cycle, used, a, principal)
            return None
    return None


def find_critical_cycles(g: Graph, c: Coloring, *, budget: int = DEFAULT_CYCLE_BUDGET) -> list[CriticalCycle]:
    check_size(g, c)
    out = []
    for cyc in even_cycles(g, budget):
        cc = classify_cycle(cyc, c)
        if cc is not None:
            out.append(cc)
    return out


def build_ccs(g: Graph, c: Coloring, i: int, *, cycles: list[CriticalCycle] | None = None) -> list[CCS]:
    """Critical cycle systems of color i.

    Two i-critical cycles are linked when they share a vertex of color i and no
    vertex of any other color; systems are the connected components of that
    relation. A component in which two members still overlap outside color i
    is split greedily (first-fit in canonical cycle order).
    """
    if cycles is None:
        cycles = find_critical_cycles(g, c)
    members = [cc for cc in cycles if i in cc.principal]
    if not members:
        return []
    sets = [frozenset(cc.cycle) for cc in members]

    def overlap(a, b):
        common = sets[a] & sets[b]
        on_i = any(c[v] == i for v in common)
        clash = any(c[v] != i for v in common)
        return on_i, clash

    m = len(members)
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    clash_pairs = set()
    for a, b in itertools.combinations(range(m), 2):
        on_i, clash = overlap(a, b)
        if clash:
            clash_pairs.add((a, b))
        elif on_i:
            parent[find(a)] = find(b)
    groups: dict[int, list[int]] = {}
    for a in range(m):
        groups.setdefault(find(a), []).append(a)

    systems = []
    for idx in sorted(groups.values()):
        if not any((a, b) in clash_pairs for a, b in itertools.combinations(idx, 2)):
            systems.append(idx)
            continue
        parts: list[list[int]] = []
        for a in idx:
            for part in parts:
                linked = any(overlap(a, b)[0] for b in part)
                if linked and not any((min(a, b), max(a, b)) in clash_pairs for b in part):
                    part.append(a)
                    break
            else:
                parts.append([a])
        systems.extend(parts)
    out = []
    for idx in systems:
        cyc = tuple(members[a] for a in idx)
        out.append(CCS(i, cyc, frozenset(v for cc in cyc for v in cc.cycle)))
    return out


def _assign(g: Graph, colors: list[int], order: list[int], options: list[list[int]], budget: int):
    """Backtracking search for colors[order[t]] in options[t] with no bichromatic cycle.

    Assignments are checked incrementally: the final coloring has a
    bichromatic cycle iff some vertex closes one when it is assigned last
    among the recolored vertices on that cycle.  Returns the assignment or None.
    """
    nodes = 0
    chosen: list[int] = []
    saved = [colors[v] for v in order]

    def rec(t):
        nonlocal nodes
        if t == len(order):
            return True
        v = order[t]
        for x in options[t]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded("recoloring search", budget)
            if closes_cycle(g, colors, v, x):
                continue
            colors[v] = x
            chosen.append(x)
            if rec(t + 1):
                return True
            chosen.pop()
            colors[v] = saved[t]
        return False

    try:
        ok = rec(0)
    finally:
        for v, x in zip(order, saved):
            colors[v] = x
    return list(chosen) if ok else None


def is_ccs_recolorable(g: Graph, c: Coloring, d: CCS, *, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Can the principal-color vertices of d be moved to available colors, jointly, acyclically?"""
    verts = d.principal_vertices(c)
    options = [sorted(available_colors(g, c, v).colors) for v in verts]
    if any(not o for o in options):
        return False
    return _assign(g, list(c.colors), verts, options, budget) is not None


def ccs_containing(g: Graph, c: Coloring, v: int, *, cycles: list[CriticalCycle] | None = None) -> list[CCS]:
    return [d for d in build_ccs(g, c, c[v], cycles=cycles) if v in d.vertex_set]


def is_acyclic_b_vertex(g: Graph, c: Coloring, v: int, *, checked: bool = False,
                        cycles: list[CriticalCycle] | None = None) -> bool:
    if not checked:
        check_size(g, c)
        _require_acyclic(g, c)
    if is_weak_acyclic_b_vertex(g, c, v, checked=True):
        return True
    return any(not is_ccs_recolorable(g, c, d) for d in ccs_containing(g, c, v, cycles=cycles))


def certify_vertex(g: Graph, c: Coloring, v: int, cycles=None) -> str | None:
    """Strongest witness level of v: 'b', 'weak', 'ccs', or None."""
    if is_b_vertex(g, c, v):
        return "b"
    if is_weak_acyclic_b_vertex(g, c, v, checked=True):
        return "weak"
    if cycles is None:
        cycles = find_critical_cycles(g, c)
    if any(not is_ccs_recolorable(g, c, d) for d in ccs_containing(g, c, v, cycles=cycles)):
        return "ccs"
    return None


def class_certificates(g: Graph, c: Coloring, *, first_only: bool = False) -> dict[int, dict[int, str]]:
    """Per color class, the certified vertices and the level that certified them.

    Critical cycles are only enumerated for classes without a b-vertex or
    weak acyclic b-vertex, so classes certified that way list no 'ccs'
    members. With ``first_only`` each class stops at its first certified
    vertex.
    """
    check_size(g, c)
    _require_acyclic(g, c)
    out: dict[int, dict[int, str]] = {}
    pending = []
    for i, members in c.classes().items():
        found: dict[int, str] = {}
        for v in members:
            if is_b_vertex(g, c, v):
                found[v] = "b"
            elif is_weak_acyclic_b_vertex(g, c, v, checked=True):
                found[v] = "weak"
            else:
                continue
            if first_only:
                break
        out[i] = found
        if not found:
            pending.append(i)
    if not pending:
        return out
    cycles = find_critical_cycles(g, c)
    for i in pending:
        found = out[i]
        systems = build_ccs(g, c, i, cycles=cycles)
        stuck = [d for d in systems if not is_ccs_recolorable(g, c, d)]
        for v in c.color_class(i):
            if v in found:
                continue
            if any(v in d.vertex_set for d in stuck):
                found[v] = "ccs"
                if first_only:
                    break
    return out


def witness_report(g: Graph, c: Coloring) -> dict:
    """JSON-ready per-class witness inventory plus serialized critical cycle systems."""
    certs = class_certificates(g, c)
    try:
        cycles = find_critical_cycles(g, c)
    except BudgetExceeded as exc:
        cycles, status = None, f"skipped: {exc}"
    else:
        status = "complete"
    systems = []
    for i in range(1, c.k + 1 if cycles is not None else 1):
        for d in build_ccs(g, c, i, cycles=cycles):
            systems.append({
                "principal_color": i,
                "cycles": [list(cc.cycle) for cc in d.cycles],
                "vertices": sorted(d.vertex_set),
                "available": {str(v): sorted(available_colors(g, c, v).colors) for v in d.principal_vertices(c)},
                "recolorable": is_ccs_recolorable(g, c, d),
            })
    classes = {}
    for i, found in certs.items():
        classes[str(i)] = {
            "acyclic_b_vertices": [{"vertex": v, "via": lvl} for v, lvl in sorted(found.items())],
            "certified": bool(found),
        }
    return {
        "classes": classes,
        "critical_cycles": [
            {"cycle": list(cc.cycle), "alternating": cc.alternating, "principal": sorted(cc.principal)}
            for cc in cycles or ()
        ],
        "ccs": systems,
        "ccs_status": status,
    }
