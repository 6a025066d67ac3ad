"""Verification suites.  Each suite returns a list of Check rows; a suite
passes when every non-observational row passes."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from .coloring import bichromatic_cycle_pairs, is_acyclic, is_proper
from .corpus import canonical_form, connected_graphs_upto, random_graphs
from .exact import (acyclic_degree, enumerate_colorings, exact_invariants, is_b_coloring,
                    m_a_degree, m_degree)
from .families import family, formula_ab, generate, join_of, reference_coloring
from .fixtures import load
from .graph import Graph
from .recolor import STRATEGIES, is_minimal_by_definition, is_minimal_by_witnesses, run_recoloring_algorithm
from .witness import blocked_missing_colors, class_certificates, is_weak_acyclic_b_vertex

# pinned wall-clock limits, seconds
LIMIT_CLOSED_FORM_EACH = 10.0
LIMIT_JOIN_LARGEST = 600.0
LIMIT_EQUIVALENCE_TOTAL = 3600.0
LIMIT_EXTREMAL_WITNESS = 600.0

CORPUS_N_MAX = 6
RANDOM_COUNT = 1000
RANDOM_SEED = 0
RANDOM_N_MAX = 9
HEURISTIC_N_MAX = 7
HEURISTIC_RUNS = 100


@dataclass
class Check:
    criterion: str
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    seconds: float = 0.0
    observational: bool = False

    def line(self) -> str:
        tag = "INFO" if self.observational else ("PASS" if self.passed else "FAIL")
        return f"[{tag}] {self.criterion:>3} {self.name} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.criterion, "name": self.name, "passed": self.passed,
                "observational": self.observational, "seconds": round(self.seconds, 4), "detail": self.detail}


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


@lru_cache(maxsize=None)
def invariants(g: Graph, with_m_a: bool = True):
    return exact_invariants(g, with_m_a=with_m_a)


def _ab_check(crit, label, spec, expected, limit=None):
    g, _ = generate(spec)
    rep, dt = _timed(lambda: invariants(g, False))
    ok = rep.A_b == expected and (limit is None or dt < limit)
    return Check(crit, f"{label}: A_b={rep.A_b} (expected {expected})", ok,
                 {"spec": str(spec), "A_b": rep.A_b, "expected": expected, "witness": list(rep.witnesses["A_b"].colors)},
                 dt)


def suite_closed_forms() -> list[Check]:
    out = []
    for n in range(1, 7):
        out.append(_ab_check("1", f"empty:{n}", family("empty", n), 1, LIMIT_CLOSED_FORM_EACH))
    for length in range(5, 9):
        out.append(_ab_check("1", f"path:{length}", family("path", length), 3, LIMIT_CLOSED_FORM_EACH))
    for k in range(3, 9):
        out.append(_ab_check("1", f"cycle:{k}", family("cycle", k), 3, LIMIT_CLOSED_FORM_EACH))
    for n in range(1, 7):
        out.append(_ab_check("1", f"complete:{n}", family("complete", n), n, LIMIT_CLOSED_FORM_EACH))
    return out


def suite_joins() -> list[Check]:
    cases = [
        ("K_{2,3}", family("complete_bipartite", 2, 3), 4),
        ("W_6", family("wheel", 6), 4),
        ("F_6", family("fan", 6), 4),
        ("K_3 v K3bar", family("complete_split", 3, 3), 4),
        ("C_5 v C_5", join_of(family("cycle", 5), family("cycle", 5)), 8),
    ]
    out = []
    for label, spec, expected in cases:
        chk = _ab_check("2", label, spec, expected, LIMIT_JOIN_LARGEST)
        f = formula_ab(spec)
        chk.detail["formula"] = f
        chk.passed = chk.passed and f == expected
        out.append(chk)
    return out


def suite_figures() -> list[Check]:
    out = []

    def both(g, c):
        return is_minimal_by_definition(g, c), is_minimal_by_witnesses(g, c)

    f = load("fig1-c8")
    (d, w), dt = _timed(lambda: both(f.graph, f.colorings["c"]))
    out.append(Check("3", "Figure 1 C8 coloring is minimal", d and w, {"definition": d, "witnesses": w}, dt))

    f = load("fig1-g")
    (d, w), dt = _timed(lambda: both(f.graph, f.colorings["z4"]))
    out.append(Check("3", "Figure 1 G with c(z)=4 is minimal", d and w, {"definition": d, "witnesses": w}, dt))
    (d, w), dt = _timed(lambda: both(f.graph, f.colorings["z2"]))
    out.append(Check("3", "Figure 1 G with c(z)=2 is not minimal", not d and not w,
                     {"definition": d, "witnesses": w}, dt))

    f = load("fig2")
    (d, w), dt = _timed(lambda: both(f.graph, f.colorings["c"]))
    out.append(Check("3", "Figure 2 coloring is minimal", d and w, {"definition": d, "witnesses": w}, dt))

    f = load("fig7")
    g, c6, c3 = f.graph, f.colorings["x6"], f.colorings["x3"]
    t0 = time.perf_counter()
    bcol6, acyc6 = is_b_coloring(g, c6), is_acyclic(g, c6)
    out.append(Check("3", "Figure 7 c(x)=6 is a b-coloring but not acyclic", bcol6 and not acyc6,
                     {"b_coloring": bcol6, "acyclic": acyc6, "bicolored_cycle_pairs": bichromatic_cycle_pairs(g, c6.colors)},
                     time.perf_counter() - t0))
    t0 = time.perf_counter()
    acyc3 = is_acyclic(g, c3)
    v, z, y, x = (f.vertex(n) for n in ("b", "c1", "c2", "b2"))
    weak_v = acyc3 and is_weak_acyclic_b_vertex(g, c3, v)
    # color 5 must be blocked for v, through z (color 3) - y (color 5) - x (color 3)
    blocked = blocked_missing_colors(g, c3, v) if acyc3 else {}
    via_cycle = blocked.get(5, False) and c3[z] == c3[x] == 3 and c3[y] == 5 and g.has_edge(z, y) and g.has_edge(y, x)
    no_b2 = not any(all(col in {c3[u] for u in g.adj[w]} | {c3[w]} for col in range(1, c3.k + 1))
                    for w in c3.color_class(2))
    minimal3 = acyc3 and is_minimal_by_definition(g, c3) and is_minimal_by_witnesses(g, c3)
    ok = acyc3 and weak_v and via_cycle and no_b2 and minimal3
    out.append(Check("3", "Figure 7 c'(x)=3 acyclic, v certified by vzyxv, no b-vertex in class 2", ok,
                     {"acyclic": acyc3, "v_weak": weak_v, "color5_blocked_via_4cycle": bool(via_cycle),
                      "class2_without_b_vertex": no_b2, "minimal": minimal3}, time.perf_counter() - t0))
    return out


def equivalence_scan(graphs):
    total = 0
    bad = []
    for g in graphs:
        for c in enumerate_colorings(g, "acyclic"):
            total += 1
            d, w = is_minimal_by_definition(g, c), is_minimal_by_witnesses(g, c)
            if d != w:
                bad.append({"n": g.n, "edges": [list(e) for e in g.edges], "coloring": list(c.colors),
                            "definition": d, "witnesses": w})
    return total, bad


def suite_equivalence(n_max: int = CORPUS_N_MAX, random_count: int = RANDOM_COUNT) -> list[Check]:
    t0 = time.perf_counter()
    (tot_a, bad_a), dt_a = _timed(lambda: equivalence_scan(connected_graphs_upto(n_max)))
    (tot_b, bad_b), dt_b = _timed(lambda: equivalence_scan(random_graphs(random_count, RANDOM_SEED, 3, RANDOM_N_MAX)))
    dt = time.perf_counter() - t0
    bad = bad_a + bad_b
    directions = {}
    for row in bad:
        key = f"definition={row['definition']},witnesses={row['witnesses']}"
        directions[key] = directions.get(key, 0) + 1
    return [Check("4", f"definition == witnesses on every acyclic partition ({len(bad)} disagreements)",
                  not bad and dt < LIMIT_EQUIVALENCE_TOTAL,
                  {"colorings_connected": tot_a, "colorings_random": tot_b, "disagreements": len(bad),
                   "directions": directions, "examples": bad[:5], "seconds_connected": round(dt_a, 2),
                   "seconds_random": round(dt_b, 2)}, dt)]


def suite_bounds(n_max: int = CORPUS_N_MAX, random_count: int = RANDOM_COUNT) -> list[Check]:
    t0 = time.perf_counter()
    graphs = connected_graphs_upto(n_max) + random_graphs(random_count, RANDOM_SEED, 3, RANDOM_N_MAX)
    names = ["omega<=chi<=A<=A_b<=n", "A_b<=m_a", "phi<=m", "m_a<=Delta^2/2+1"]
    viol = {k: [] for k in names}
    for g in graphs:
        r = invariants(g)
        if not (r.omega <= r.chi <= r.A <= r.A_b <= g.n):
            viol[names[0]].append(r.to_json())
        if not r.A_b <= r.m_a:
            viol[names[1]].append(r.to_json())
        if not r.phi <= r.m_degree:
            viol[names[2]].append(r.to_json())
        if g.max_degree >= 2 and not 2 * r.m_a <= g.max_degree ** 2 + 2:
            viol[names[3]].append(r.to_json())
    dt = time.perf_counter() - t0
    return [Check("5", f"{k}: {len(v)} violations over {len(graphs)} graphs", not v,
                  {"violations": v[:5]}, dt) for k, v in viol.items()]


def suite_gap_families() -> list[Check]:
    out = []
    for n in (1, 2):
        spec = family("star_of_stars", n)
        g, _ = generate(spec)
        rep, dt = _timed(lambda: invariants(g, False))
        out.append(Check("6", f"star_of_stars:{n} A_b={rep.A_b} A={rep.A}", rep.A_b == n + 2 and rep.A == 2,
                         {"A_b": rep.A_b, "A": rep.A, "expected": [n + 2, 2]}, dt))
    for n in (1, 2):
        spec = family("roof", n)
        g, legend = generate(spec)
        t0 = time.perf_counter()
        m = m_degree(g)
        ma = m_a_degree(g)
        das = [acyclic_degree(g, legend[f"y1^{i}"]) for i in range(1, 2 * n + 5)]
        c = reference_coloring(spec)
        proper, acyc = is_proper(g, c), is_acyclic(g, c)
        minimal = acyc and is_minimal_by_definition(g, c)
        # minimal coloring gives A_b >= k, m_a gives A_b <= m_a
        ab = c.k if minimal and c.k == ma else None
        gap = None if ab is None else ab - g.max_degree
        ok = (m == n + 4 and ma == 2 * n + 4 and all(d == 2 * n + 3 for d in das) and minimal
              and c.k == 2 * n + 4 and gap == n + 1)
        out.append(Check("6", f"roof:{n} m={m} m_a={ma} d^a(y1)={set(das)} A_b-Delta={gap}", ok,
                         {"m": m, "m_a": ma, "acyclic_degrees_y1": das, "colors": c.k, "proper": proper,
                          "acyclic": acyc, "minimal": minimal, "Delta": g.max_degree, "gap": gap, "n_vertices": g.n},
                         time.perf_counter() - t0))
    f = load("fig4")
    (da, P, e), dt = _timed(lambda: acyclic_degree(f.graph, f.vertex("y1^1"), detail=True))
    out.append(Check("6", f"Figure 4 d^a(y1^1)={da} elp={e}", da == 7 and e == 3,
                     {"d_a": da, "elp": e, "A0": sorted(P.A0), "blocks": [sorted(b) for b in P.blocks]}, dt))
    return out


def suite_extremal() -> list[Check]:
    out = []
    g1, _ = generate(family("quad_extremal", 1))
    c4, _ = generate(family("cycle", 4))
    t0 = time.perf_counter()
    rep = invariants(g1)
    half = g1.max_degree ** 2 // 2 + 1
    ok = canonical_form(g1) == canonical_form(c4) and rep.A_b == rep.m_a == 3 == half
    out.append(Check("7", f"quad:1 is C4 with A_b={rep.A_b} m_a={rep.m_a} Delta^2/2+1={half}", ok,
                     {"A_b": rep.A_b, "m_a": rep.m_a}, time.perf_counter() - t0))
    spec = family("quad_extremal", 2)
    g, legend = generate(spec)
    c = reference_coloring(spec)
    t0 = time.perf_counter()
    acyc = is_acyclic(g, c)
    certs = class_certificates(g, c) if acyc else {}
    every_class = bool(certs) and all(certs.values())
    # each class must hold some v^i whose missing colors are all blocked
    hubs = {legend[f"v^{i}"] for i in range(c.k)}
    v_cert = all(any(u in hubs and lvl in ("b", "weak") for u, lvl in found.items()) for found in certs.values())
    dt_w = time.perf_counter() - t0
    ma = m_a_degree(g)
    ok = acyc and c.k == 9 and every_class and v_cert and ma == 9 and dt_w < LIMIT_EXTREMAL_WITNESS
    out.append(Check("7", f"quad:2 reference coloring: acyclic={acyc} k={c.k} certified={every_class} m_a={ma}", ok,
                     {"n_vertices": g.n, "colors": c.k, "all_classes_certified": every_class,
                      "certified_by_v_i": v_cert, "m_a": ma, "witness_seconds": round(dt_w, 3)},
                     time.perf_counter() - t0))
    return out


def heuristic_runs(g: Graph, runs: int, variant: str):
    """Seeded runs: strategies rotate, per-vertex choices are random from the fourth run on."""
    outs = []
    for s in range(runs):
        outs.append(run_recoloring_algorithm(g, variant=variant, strategy=STRATEGIES[s % 3], seed=s,
                                             random_choice=s >= 3))
    return outs


def suite_heuristic(n_max: int = HEURISTIC_N_MAX, runs: int = HEURISTIC_RUNS) -> list[Check]:
    t0 = time.perf_counter()
    graphs = connected_graphs_upto(n_max)
    viol_a, viol_p = [], []
    total = 0
    for g in graphs:
        rep = invariants(g, False)
        seen: dict[tuple, bool] = {}
        for c in heuristic_runs(g, runs, "acyclic"):
            total += 1
            if c.colors not in seen:
                seen[c.colors] = is_acyclic(g, c) and is_minimal_by_definition(g, c, "acyclic")
            if not (seen[c.colors] and rep.A <= c.k <= rep.A_b):
                viol_a.append({"edges": [list(e) for e in g.edges], "coloring": list(c.colors),
                               "A": rep.A, "A_b": rep.A_b})
        seen = {}
        for c in heuristic_runs(g, runs, "proper"):
            if c.colors not in seen:
                seen[c.colors] = is_proper(g, c) and is_minimal_by_definition(g, c, "proper")
            if not (seen[c.colors] and rep.chi <= c.k <= rep.phi):
                viol_p.append({"edges": [list(e) for e in g.edges], "coloring": list(c.colors),
                               "chi": rep.chi, "phi": rep.phi})
    dt = time.perf_counter() - t0
    return [
        Check("8", f"acyclic runs minimal with k in [A, A_b]: {len(viol_a)} violations / {total} runs",
              not viol_a, {"graphs": len(graphs), "violations": viol_a[:5]}, dt),
        Check("8", f"proper runs with k in [chi, phi]: {len(viol_p)} violations / {total} runs",
              not viol_p, {"graphs": len(graphs), "violations": viol_p[:5]}, 0.0),
    ]


def weak_only(certs: dict[int, dict[int, str]]) -> bool:
    return all(any(lvl in ("b", "weak") for lvl in found.values()) for found in certs.values())


def suite_probe(n_max: int = HEURISTIC_N_MAX) -> list[Check]:
    """Observational: A_b < phi, and colorings that need the CCS disjunct."""
    t0 = time.perf_counter()
    below_phi = []
    ccs_only = []
    weak_gap = []
    for g in connected_graphs_upto(n_max):
        rep = invariants(g, False)
        if rep.A_b < rep.phi:
            below_phi.append({"edges": [list(e) for e in g.edges], "A_b": rep.A_b, "phi": rep.phi})
        weak_sizes, ccs_rows = set(), []
        for c in enumerate_colorings(g, "acyclic"):
            certs = class_certificates(g, c)
            if not all(certs.values()):
                continue
            if weak_only(certs):
                weak_sizes.add(c.k)
            else:
                ccs_rows.append(c)
        for c in ccs_rows:
            if c.k not in weak_sizes:
                ccs_only.append({"edges": [list(e) for e in g.edges], "coloring": list(c.colors), "k": c.k})
        a_weak = max(weak_sizes, default=None)
        if a_weak != rep.A_b:
            weak_gap.append({"edges": [list(e) for e in g.edges], "A_b": rep.A_b, "A_weak": a_weak})
    dt = time.perf_counter() - t0
    return [
        Check("9", f"graphs with A_b < phi: {len(below_phi)}", True, {"findings": below_phi[:20]}, dt, True),
        Check("9", f"CCS-certified minimal colorings with no weak-only coloring of that size: {len(ccs_only)}",
              True, {"findings": ccs_only[:20]}, 0.0, True),
        Check("9", f"graphs where max weak-only k differs from A_b: {len(weak_gap)}", True,
              {"findings": weak_gap[:20]}, 0.0, True),
    ]


SUITES = {
    "closed-forms": suite_closed_forms,
    "corollary-basic2": suite_closed_forms,
    "joins": suite_joins,
    "figures": suite_figures,
    "equivalence": suite_equivalence,
    "bounds": suite_bounds,
    "gap-families": suite_gap_families,
    "extremal": suite_extremal,
    "heuristic": suite_heuristic,
    "probe": suite_probe,
}

ORDER = ["closed-forms", "joins", "figures", "equivalence", "bounds", "gap-families", "extremal", "heuristic", "probe"]


def run_suite(name: str) -> list[Check]:
    if name == "all":
        rows = []
        for key in ORDER:
            rows.extend(SUITES[key]())
        return rows
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: all, {', '.join(SUITES)}")
    return SUITES[name]()


def all_passed(rows: list[Check]) -> bool:
    return all(r.passed for r in rows if not r.observational)
