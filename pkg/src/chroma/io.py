"""Line-oriented text formats for graphs, colorings and orientations.

Edge lists::

    p edge <n> <m>
    e <u> <v>          (m lines, 0-based ids, edge ids follow line order)

Colorings, one line per edge of the companion graph::

    c palette <k>
    <u> <v> <color>    (color in [1, k])

Orientations::

    p orient <n> <m>
    a <u> <v>          (the edge is directed u -> v)

Lines starting with ``#`` and blank lines are ignored everywhere.  Parsers
accept ``str`` or ``bytes``; writers return ``str``.
"""

from __future__ import annotations

from collections.abc import Iterator

from .graph import Graph, GraphError, Orientation, build_graph
from .vizing import Coloring


class FormatError(ValueError):
    """Malformed input file; ``line`` is the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _lines(text: str | bytes) -> Iterator[tuple[int, list[str]]]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield no, s.split()


def _ints(fields: list[str], no: int) -> list[int]:
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(fields)!r}", no) from None


def _header(it: Iterator[tuple[int, list[str]]], kind: str) -> tuple[int, int]:
    try:
        no, f = next(it)
    except StopIteration:
        raise FormatError(f"missing 'p {kind}' header") from None
    if len(f) != 4 or f[0] != "p" or f[1] != kind:
        raise FormatError(f"expected 'p {kind} <n> <m>' header", no)
    n, m = _ints(f[2:], no)
    if n < 0 or m < 0:
        raise FormatError("negative count in header", no)
    return n, m


def _body(it: Iterator[tuple[int, list[str]]], tag: str, m: int) -> list[tuple[int, int, int]]:
    rows = []
    for no, f in it:
        if len(f) != 3 or f[0] != tag:
            raise FormatError(f"expected '{tag} <u> <v>'", no)
        u, v = _ints(f[1:], no)
        rows.append((no, u, v))
    if len(rows) != m:
        raise FormatError(f"header declares {m} edges, body has {len(rows)}")
    return rows


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse an edge-list file; malformed lines and invalid edges name their line."""
    it = _lines(text)
    n, m = _header(it, "edge")
    rows = _body(it, "e", m)
    try:
        return build_graph(n, [(u, v) for _, u, v in rows])
    except GraphError as err:
        line = rows[err.index][0] if err.index is not None else None
        raise type(err)(err.reason, index=err.index, line=line) from None


def write_edge_list(g: Graph) -> str:
    out = [f"p edge {g.n} {g.m}"]
    out.extend(f"e {u} {v}" for u, v in zip(g.eu, g.ev))
    return "\n".join(out) + "\n"


def write_coloring(g: Graph, c: Coloring) -> str:
    """Serialize ``c`` in edge-id order; every edge of ``g`` must be colored."""
    if c.graph is not g and (c.graph.n, c.graph.m) != (g.n, g.m):
        raise ValueError("coloring belongs to a different graph")
    out = [f"c palette {c.palette}"]
    color = c.color
    for e, (u, v) in enumerate(zip(g.eu, g.ev)):
        if not color[e]:
            raise ValueError(f"edge {e} ({u}, {v}) is uncolored")
        out.append(f"{u} {v} {color[e]}")
    return "\n".join(out) + "\n"


def parse_coloring(text: str | bytes, g: Graph) -> Coloring:
    """Parse a coloring file over the edges of ``g``.

    Rejects unknown edges, colors outside ``[1, k]``, repeated edges and
    edges of ``g`` that are missing from the file.
    """
    it = _lines(text)
    try:
        no, f = next(it)
    except StopIteration:
        raise FormatError("missing 'c palette' header") from None
    if len(f) != 3 or f[:2] != ["c", "palette"]:
        raise FormatError("expected 'c palette <k>' header", no)
    (k,) = _ints(f[2:], no)
    if k < 0:
        raise FormatError("negative palette", no)
    color = [0] * g.m
    for no, f in it:
        if len(f) != 3:
            raise FormatError("expected '<u> <v> <color>'", no)
        u, v, col = _ints(f, no)
        e = g.edge_id(u, v)
        if e is None:
            raise FormatError(f"unknown edge ({u}, {v})", no)
        if not 1 <= col <= k:
            raise FormatError(f"color {col} outside palette [1, {k}]", no)
        if color[e]:
            raise FormatError(f"edge ({u}, {v}) listed twice", no)
        color[e] = col
    for e, col in enumerate(color):
        if not col:
            raise FormatError(f"edge ({g.eu[e]}, {g.ev[e]}) has no color")
    return Coloring(g, color, k)


def write_orientation(mu: Orientation) -> str:
    g = mu.graph
    out = [f"p orient {g.n} {g.m}"]
    for u, v, f in zip(g.eu, g.ev, mu.forward):
        out.append(f"a {u} {v}" if f else f"a {v} {u}")
    return "\n".join(out) + "\n"


def parse_orientation(text: str | bytes, g: Graph) -> Orientation:
    """Parse an orientation of ``g``; every edge must be directed exactly once."""
    it = _lines(text)
    n, m = _header(it, "orient")
    if (n, m) != (g.n, g.m):
        raise FormatError(f"header ({n}, {m}) does not match graph ({g.n}, {g.m})")
    forward: list[bool | None] = [None] * g.m
    for no, u, v in _body(it, "a", m):
        e = g.edge_id(u, v)
        if e is None:
            raise FormatError(f"unknown edge ({u}, {v})", no)
        if forward[e] is not None:
            raise FormatError(f"edge ({u}, {v}) directed twice", no)
        forward[e] = u < v
    return Orientation(g, forward)  # type: ignore[arg-type]
