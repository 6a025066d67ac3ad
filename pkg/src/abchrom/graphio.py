"""Edge-list and DIMACS readers/writers, plus the coloring text format.

Edge list: first line ``n``, then one ``u v`` pair per line, 0-based.
DIMACS: ``c`` comments, ``p edge n m`` header, ``e u v`` lines, 1-based.
"""

from __future__ import annotations

import json

from .coloring import Coloring
from .errors import ColoringError, EdgeCountMismatch, GraphFormatError
from .graph import Graph, build_graph

FORMATS = ("edgelist", "dimacs")


def _text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        return data.decode("utf-8")
    return data


def _build(n, edges, line_of):
    seen = set()
    for (u, v), lineno in zip(edges, line_of):
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex out of range in edge ({u}, {v})", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise GraphFormatError(f"duplicate edge {e}", lineno)
        seen.add(e)
    return build_graph(n, edges)


def parse_edgelist(text) -> Graph:
    n = None
    edges, line_of = [], []
    for lineno, raw in enumerate(_text(text).splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"non-integer token in {raw!r}", lineno) from None
        if n is None:
            if len(nums) != 1:
                raise GraphFormatError("first line must hold the vertex count", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphFormatError(f"expected 'u v', got {raw!r}", lineno)
        edges.append((nums[0], nums[1]))
        line_of.append(lineno)
    if n is None:
        raise GraphFormatError("empty input")
    return _build(n, edges, line_of)


def parse_dimacs(text) -> Graph:
    n = m = None
    edges, line_of = [], []
    for lineno, raw in enumerate(_text(text).splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphFormatError("second 'p' header", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphFormatError(f"bad header {raw!r}", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError(f"bad header {raw!r}", lineno) from None
        elif tag == "e":
            if n is None:
                raise GraphFormatError("edge before 'p' header", lineno)
            if len(parts) != 3:
                raise GraphFormatError(f"expected 'e u v', got {raw!r}", lineno)
            try:
                u, v = int(parts[1]) - 1, int(parts[2]) - 1
            except ValueError:
                raise GraphFormatError(f"non-integer vertex in {raw!r}", lineno) from None
            edges.append((u, v))
            line_of.append(lineno)
        else:
            raise GraphFormatError(f"unknown line type {tag!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge n m' header")
    if len(edges) != m:
        raise EdgeCountMismatch(f"header declares {m} edges, found {len(edges)}")
    return _build(n, edges, line_of)


def parse_graph(text, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "dimacs":
        return parse_dimacs(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return "".join([f"{g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])
    if fmt == "dimacs":
        return "".join([f"p edge {g.n} {g.m}\n"] + [f"e {u + 1} {v + 1}\n" for u, v in g.edges])
    raise ValueError(f"unknown graph format {fmt!r}")


def to_dot(g: Graph, coloring: Coloring | None = None, labels: dict[int, str] | None = None) -> str:
    lines = ["graph G {"]
    for v in g.vertices():
        attrs = []
        if labels and v in labels:
            attrs.append(f'label="{labels[v]}"')
        if coloring is not None:
            attrs.append(f'xlabel="{coloring[v]}"')
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_coloring(text) -> Coloring:
    """Accept either ``k`` followed by n colors, or a JSON array of colors."""
    text = _text(text).strip()
    if text.startswith("["):
        try:
            seq = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"bad JSON coloring: {exc}") from None
        return Coloring.from_sequence(seq)
    tokens = text.split()
    if not tokens:
        raise GraphFormatError("empty coloring")
    try:
        nums = [int(t) for t in tokens]
    except ValueError:
        raise GraphFormatError("non-integer token in coloring") from None
    try:
        return Coloring(tuple(nums[1:]), nums[0])
    except ColoringError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_coloring(c: Coloring) -> str:
    return f"{c.k}\n{' '.join(map(str, c.colors))}\n"
