"""Named graph families, their closed-form acyclic b-chromatic numbers, and
explicit extremal colorings.

Family spec mini-language::

    path:7   cycle:5   complete:4   empty:3   kbip:2,3   star:4
    wheel:6  fan:6     split:3,2    starstars:2   roof:2   quad:2
    join(cycle:5,cycle:5)
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .coloring import Coloring
from .errors import FamilyError
from .graph import Graph, build_graph, is_connected, join

ALIASES = {
    "empty": "empty", "kbar": "empty", "null": "empty",
    "path": "path", "p": "path",
    "cycle": "cycle", "c": "cycle",
    "complete": "complete", "k": "complete",
    "complete_bipartite": "complete_bipartite", "kbip": "complete_bipartite", "bipartite": "complete_bipartite",
    "star": "star",
    "wheel": "wheel", "w": "wheel",
    "fan": "fan", "f": "fan",
    "complete_split": "complete_split", "split": "complete_split",
    "star_of_stars": "star_of_stars", "starstars": "star_of_stars", "sos": "star_of_stars",
    "roof": "roof",
    "quad_extremal": "quad_extremal", "quad": "quad_extremal",
}

ARITY = {
    "empty": 1, "path": 1, "cycle": 1, "complete": 1, "complete_bipartite": 2, "star": 1,
    "wheel": 1, "fan": 1, "complete_split": 2, "star_of_stars": 1, "roof": 1, "quad_extremal": 1,
}

MIN_PARAM = {"cycle": 3, "wheel": 4, "fan": 2}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    parts: tuple["FamilySpec", ...] = ()

    def __str__(self):
        if self.family == "join":
            return f"join({','.join(str(p) for p in self.parts)})"
        return f"{self.family}:{','.join(map(str, self.params))}"


def family(name: str, *params: int) -> FamilySpec:
    spec = FamilySpec(ALIASES.get(name, name), tuple(params))
    _validate(spec)
    return spec


def join_of(*parts: FamilySpec) -> FamilySpec:
    if len(parts) < 2:
        raise FamilyError("join needs at least two factors")
    if len(parts) > 2:
        return join_of(join_of(*parts[:-1]), parts[-1])
    return FamilySpec("join", (), tuple(parts))


def _validate(spec: FamilySpec):
    if spec.family == "join":
        return
    if spec.family not in ARITY:
        raise FamilyError(f"unknown family {spec.family!r}")
    if len(spec.params) != ARITY[spec.family]:
        raise FamilyError(f"{spec.family} takes {ARITY[spec.family]} parameter(s)")
    lo = MIN_PARAM.get(spec.family, 1)
    if spec.params[0] < lo or any(p < 1 for p in spec.params):
        raise FamilyError(f"{spec.family} parameters out of range: {spec.params}")


_ATOM = re.compile(r"([A-Za-z_]+):([0-9]+(?:,[0-9]+)*)")


def parse_family_spec(text: str) -> FamilySpec:
    text = "".join(text.split())
    pos = 0

    def parse():
        nonlocal pos
        if text.startswith("join(", pos):
            pos += len("join(")
            parts = [parse()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                parts.append(parse())
            if pos >= len(text) or text[pos] != ")":
                raise FamilyError(f"missing ')' in {text!r}")
            pos += 1
            return join_of(*parts)
        m = _ATOM.match(text, pos)
        if not m:
            raise FamilyError(f"cannot parse family spec at {text[pos:]!r}")
        name = m.group(1).lower()
        if name not in ALIASES:
            raise FamilyError(f"unknown family {name!r}")
        fam = ALIASES[name]
        nums = [int(x) for x in m.group(2).split(",")]
        # inside join(...) a trailing ",<digits>" may belong to the next factor
        nums = nums[:ARITY[fam]] if len(nums) > ARITY[fam] else nums
        consumed = m.group(1) + ":" + ",".join(map(str, nums))
        pos += len(consumed)
        spec = FamilySpec(fam, tuple(nums))
        _validate(spec)
        return spec

    spec = parse()
    if pos != len(text):
        raise FamilyError(f"trailing input {text[pos:]!r}")
    return spec


class _Builder:
    def __init__(self):
        self.legend: dict[str, int] = {}
        self.edges: list[tuple[int, int]] = []
        self.n = 0

    def vertex(self, name: str) -> int:
        if name not in self.legend:
            self.legend[name] = self.n
            self.n += 1
        return self.legend[name]

    def alias(self, name: str, existing: str):
        self.legend[name] = self.legend[existing]

    def edge(self, a: str, b: str):
        self.edges.append((self.vertex(a), self.vertex(b)))

    def graph(self) -> Graph:
        return build_graph(self.n, self.edges)


def _path_names(b: _Builder, count: int, prefix="v"):
    names = [f"{prefix}{i}" for i in range(1, count + 1)]
    for name in names:
        b.vertex(name)
    return names


def roof_graph(n: int) -> tuple[Graph, dict[str, int]]:
    """2n+4 copies of H_n (two hubs x1, x2 over n+2 y's, n-1 leaves on y1) on a spine."""
    b = _Builder()
    copies = 2 * n + 4
    b.vertex("u")
    for i in range(1, copies + 1):
        for l in range(1, n + 3):
            b.vertex(f"y{l}^{i}")
        for j in (1, 2):
            b.vertex(f"x{j}^{i}")
        for j in range(1, n):
            b.vertex(f"z{j}^{i}")
    b.vertex("v")
    for i in range(1, copies + 1):
        for j in (1, 2):
            for l in range(1, n + 3):
                b.edge(f"x{j}^{i}", f"y{l}^{i}")
        for j in range(1, n):
            b.edge(f"y1^{i}", f"z{j}^{i}")
    b.edge("u", "y1^1")
    b.edge("v", f"y1^{copies}")
    for i in range(1, copies):
        b.edge(f"y1^{i}", f"y1^{i + 1}")
    return b.graph(), b.legend


def quad_graph(n: int) -> tuple[Graph, dict[str, int]]:
    """Chain of 2n^2+1 copies of H_n glued end-to-end (n = 1 gives C4)."""
    b = _Builder()
    ylen = n * (2 * n - 1)
    copies = 1 if n == 1 else 2 * n * n + 1
    for i in range(copies):
        b.vertex(f"v^{i}")
        for j in range(1, 2 * n + 1):
            b.vertex(f"x{j}^{i}")
        for k in range(1, ylen + 1):
            if k == 1 and i > 0:
                b.alias(f"y1^{i}", f"y{ylen}^{i - 1}")
            else:
                b.vertex(f"y{k}^{i}")
        for j in range(1, 2 * n + 1):
            b.edge(f"v^{i}", f"x{j}^{i}")
        for l in range(1, n + 1):
            for k in range((2 * n - 1) * (l - 1) + 1, (2 * n - 1) * l + 1):
                b.edge(f"x{2 * l - 1}^{i}", f"y{k}^{i}")
                b.edge(f"x{2 * l}^{i}", f"y{k}^{i}")
    return b.graph(), b.legend


def generate(spec: FamilySpec) -> tuple[Graph, dict[str, int]]:
    """Graph and a name -> vertex legend for a family spec."""
    fam, p = spec.family, spec.params
    if fam == "join":
        g, lg = generate(spec.parts[0])
        h, lh = generate(spec.parts[1])
        legend = {f"G.{k}": v for k, v in lg.items()}
        legend.update({f"H.{k}": v + g.n for k, v in lh.items()})
        return join(g, h), legend
    b = _Builder()
    if fam == "empty":
        _path_names(b, p[0])
    elif fam == "complete":
        names = _path_names(b, p[0])
        for a in range(len(names)):
            for c in range(a + 1, len(names)):
                b.edge(names[a], names[c])
    elif fam in ("path", "cycle"):
        names = _path_names(b, p[0])
        for a in range(len(names) - 1):
            b.edge(names[a], names[a + 1])
        if fam == "cycle":
            b.edge(names[-1], names[0])
    elif fam == "complete_bipartite":
        left = _path_names(b, p[0], "a")
        right = _path_names(b, p[1], "b")
        for x in left:
            for y in right:
                b.edge(x, y)
    elif fam == "star":
        b.vertex("c")
        for leaf in _path_names(b, p[0], "l"):
            b.edge("c", leaf)
    elif fam in ("wheel", "fan"):
        inner = family("cycle" if fam == "wheel" else "path", p[0] - 1)
        g, legend = generate(join_of(family("complete", 1), inner))
        return g, {("hub" if k == "G.v1" else k[2:]): v for k, v in legend.items()}
    elif fam == "complete_split":
        g, legend = generate(join_of(family("complete", p[0]), family("empty", p[1])))
        return g, {(("k" if k.startswith("G.") else "s") + k[3:]): v for k, v in legend.items()}
    elif fam == "star_of_stars":
        n = p[0]
        b.vertex("c")
        for j in range(1, n + 2):
            b.edge("c", f"l{j}")
            for t in range(1, n + 1):
                b.edge(f"l{j}", f"p{j}_{t}")
    elif fam == "roof":
        return roof_graph(p[0])
    elif fam == "quad_extremal":
        return quad_graph(p[0])
    else:
        raise FamilyError(f"unknown family {fam!r}")
    return b.graph(), b.legend


def is_complete_spec(spec: FamilySpec) -> bool:
    g, _ = generate(spec)
    return g.is_complete()


def _order(spec: FamilySpec) -> int:
    return generate(spec)[0].n


def formula_ab(spec: FamilySpec):
    """Closed-form A_b. Returns an int, or a (lo, hi) interval for trees.

    Raises FamilyError when the parameters fall outside the range where the
    closed form is known; callers fall back to the exact oracle.
    """
    fam, p = spec.family, spec.params
    if fam == "join":
        g, h = spec.parts
        vg, vh = formula_ab(g), formula_ab(h)
        ng, nh = _order(g), _order(h)
        cg, ch = is_complete_spec(g), is_complete_spec(h)
        if cg and ch:
            return ng + nh
        if ch:
            return _shift(vg, nh)
        if cg:
            return _shift(vh, ng)
        return _imax(_shift(vg, nh), _shift(vh, ng))
    if fam == "empty":
        return 1
    if fam == "complete":
        return p[0]
    if fam == "path":
        if p[0] <= 2:
            return p[0]
        if p[0] >= 5:
            return 3
        raise FamilyError("closed form for paths needs length >= 5 (or a complete path)")
    if fam == "cycle":
        return 3
    if fam == "complete_bipartite":
        # a side of size 1 is K_1, a complete factor: the join rule gives A_b(empty) + 1
        if min(p) == 1:
            return 2
        return 1 + max(p)
    if fam == "star":
        return 2
    if fam == "wheel":
        if p[0] >= 5:
            return 4
        raise FamilyError("wheel closed form needs k >= 5")
    if fam == "fan":
        # F_k = K_1 + P_{k-1} and the path value needs k-1 >= 5
        if p[0] >= 6:
            return 4
        raise FamilyError("fan closed form needs k >= 6")
    if fam == "complete_split":
        return p[0] + 1
    if fam == "star_of_stars":
        return p[0] + 2
    if fam == "roof":
        return 2 * p[0] + 4
    if fam == "quad_extremal":
        return 2 * p[0] ** 2 + 1
    raise FamilyError(f"no closed form for {fam!r}")


def _shift(val, d):
    if isinstance(val, tuple):
        return (val[0] + d, val[1] + d)
    return val + d


def _imax(a, b):
    if isinstance(a, tuple) or isinstance(b, tuple):
        a = a if isinstance(a, tuple) else (a, a)
        b = b if isinstance(b, tuple) else (b, b)
        return (max(a[0], b[0]), max(a[1], b[1]))
    return max(a, b)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def tree_ab_bounds(g: Graph) -> tuple[int, int]:
    """[m(T) - 1, m(T)] for a tree; which end holds depends on pivotedness (not decided here)."""
    from .exact import m_degree

    if not is_tree(g):
        raise FamilyError("graph is not a tree")
    m = m_degree(g)
    return (max(m - 1, 1), m)


def _mod_label(value: int, modulus: int) -> int:
    return (value - 1) % modulus + 1


def roof_coloring(n: int) -> Coloring:
    """Constructive (2n+4)-coloring of roof(n).

    y1^i gets i, the hubs share one color, and the remaining 2n+1 vertices of
    the i-th copy take the cyclic window i+2 .. i+2n+2 (z's, then hubs, then
    y2..y_{n+2}); u and v take 2n+4 and 1.
    """
    g, legend = roof_graph(n)
    mod = 2 * n + 4
    col = [0] * g.n
    col[legend["u"]] = mod
    col[legend["v"]] = 1
    for i in range(1, mod + 1):
        col[legend[f"y1^{i}"]] = i
        for j in range(1, n):
            col[legend[f"z{j}^{i}"]] = _mod_label(i + 1 + j, mod)
        for j in (1, 2):
            col[legend[f"x{j}^{i}"]] = _mod_label(i + n + 1, mod)
        for t in range(2, n + 3):
            col[legend[f"y{t}^{i}"]] = _mod_label(i + n + t, mod)
    return Coloring(tuple(col), mod)


def quad_coloring(n: int) -> Coloring:
    """Modular coloring over Z_{2n^2+1}: residue r becomes color r+1."""
    g, legend = quad_graph(n)
    mod = 2 * n * n + 1
    ylen = n * (2 * n - 1)
    copies = 1 if n == 1 else mod
    col = [None] * g.n
    for i in range(copies):
        col[legend[f"y1^{i}"]] = i % mod
        if ylen > 1:
            col[legend[f"y{ylen}^{i}"]] = (i + 1) % mod
        for k in range(2, ylen):
            col[legend[f"y{k}^{i}"]] = (i + k) % mod
        for l in range(1, n + 1):
            x = (i + ylen - 1 + l) % mod
            col[legend[f"x{2 * l - 1}^{i}"]] = x
            col[legend[f"x{2 * l}^{i}"]] = x
        col[legend[f"v^{i}"]] = (i + 2 * n * n) % mod
    return Coloring(tuple(x + 1 for x in col), mod)


def path_coloring(length: int) -> Coloring:
    if length < 3:
        return Coloring(tuple(range(1, length + 1)), length)
    return Coloring(tuple(i % 3 + 1 for i in range(1, length + 1)), 3)


def cycle_coloring(k: int) -> Coloring:
    if k == 4:
        return Coloring((1, 2, 1, 3), 3)
    seq = [i % 3 + 1 for i in range(k)]
    if k % 3 == 1:
        seq[-1] = 2
    return Coloring(tuple(seq), 3)


def reference_coloring(spec: FamilySpec) -> Coloring:
    """Explicit A_b-witness coloring for the families that have one."""
    fam, p = spec.family, spec.params
    if fam == "roof":
        return roof_coloring(p[0])
    if fam == "quad_extremal":
        return quad_coloring(p[0])
    if fam == "path":
        return path_coloring(p[0])
    if fam == "cycle":
        return cycle_coloring(p[0])
    if fam == "complete":
        return Coloring(tuple(range(1, p[0] + 1)), p[0])
    if fam == "empty":
        return Coloring((1,) * p[0], 1)
    raise FamilyError(f"no reference coloring for {spec}")
