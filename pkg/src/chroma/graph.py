"""Simple undirected graphs with stable edge ids, plus subgraph and orientation views.

Every algorithm in the package works on edge ids of a single root
:class:`Graph`.  A :class:`Subgraph` is just a sorted selection of those ids,
so colorings and partitions computed on a piece of the graph lift back to the
root without any remapping.
"""

from __future__ import annotations

from array import array
from collections.abc import Iterable, Sequence
from typing import Union

import numpy as np


class GraphError(ValueError):
    """Invalid graph input.  ``index`` is the offending edge index, ``line`` a file line."""

    def __init__(self, message: str, index: int | None = None, line: int | None = None):
        self.reason = message
        where = []
        if line is not None:
            where.append(f"line {line}")
        if index is not None:
            where.append(f"edge {index}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)
        self.index = index
        self.line = line


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class Graph:
    """Immutable simple undirected graph.

    Edges are stored canonically as ``(u, v)`` with ``u < v`` and are
    identified by their position in the input list.
    """

    __slots__ = ("n", "eu", "ev", "adjacency", "degree", "_index", "_ends")

    def __init__(self, n: int, eu: list[int], ev: list[int]):
        # Use build_graph(); this constructor trusts its input.
        self.n = n
        self.eu = eu
        self.ev = ev
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(zip(eu, ev)):
            adjacency[u].append((e, v))
            adjacency[v].append((e, u))
        self.adjacency = adjacency
        self.degree = [len(a) for a in adjacency]
        self._index: dict[tuple[int, int], int] | None = None
        self._ends: np.ndarray | None = None

    @property
    def m(self) -> int:
        return len(self.eu)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return list(zip(self.eu, self.ev))

    def edge_ids(self) -> range:
        return range(len(self.eu))

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.eu[e], self.ev[e]

    def other(self, e: int, x: int) -> int:
        u = self.eu[e]
        return self.ev[e] if u == x else u

    def edge_id(self, u: int, v: int) -> int | None:
        """Edge id of the pair ``{u, v}``, or None when absent."""
        if self._index is None:
            self._index = {(a, b): e for e, (a, b) in enumerate(zip(self.eu, self.ev))}
        if u > v:
            u, v = v, u
        return self._index.get((u, v))

    def edge_array(self) -> np.ndarray:
        """The edge list as an ``(m, 2)`` integer array."""
        return np.array([self.eu, self.ev], dtype=np.int64).T.reshape(-1, 2)

    def end_array(self) -> np.ndarray:
        """Cached ``(2, m)`` array holding ``eu`` and ``ev``."""
        if self._ends is None:
            self._ends = np.array([self.eu, self.ev], dtype=np.int64).reshape(2, -1)
        return self._ends

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.eu == other.eu and self.ev == other.ev

    __hash__ = None  # type: ignore[assignment]


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a :class:`Graph` on vertices ``0..n-1``.

    Edge ids follow the input order.  Each pair is normalized to ``u < v``.
    Raises :class:`SelfLoopError`, :class:`DuplicateEdgeError` or
    :class:`VertexRangeError` naming the offending edge index.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    eu: list[int] = []
    ev: list[int] = []
    seen: set[tuple[int, int]] = set()
    for i, pair in enumerate(edge_list):
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex id out of range [0, {n}) in edge ({u}, {v})", index=i)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", index=i)
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u}, {v})", index=i)
        seen.add((u, v))
        eu.append(u)
        ev.append(v)
    g = Graph(n, eu, ev)
    g._index = {p: e for e, p in enumerate(zip(eu, ev))}
    return g


class Subgraph:
    """A view of ``parent`` restricted to a sorted set of edge ids.

    Isolated vertices are never materialized: iteration only visits vertices
    touched by a selected edge.
    """

    __slots__ = ("parent", "edge_ids", "level", "_degree")

    def __init__(self, parent: Graph, edge_ids: list[int], level: int = 0):
        self.parent = parent
        self.edge_ids = edge_ids
        self.level = level
        self._degree: dict[int, int] | None = None

    @property
    def m(self) -> int:
        return len(self.edge_ids)

    @property
    def n(self) -> int:
        return self.parent.n

    def degrees(self) -> dict[int, int]:
        """Degree of every non-isolated vertex of the view."""
        if self._degree is None:
            deg: dict[int, int] = {}
            eu, ev = self.parent.eu, self.parent.ev
            get = deg.get
            for e in self.edge_ids:
                u, v = eu[e], ev[e]
                deg[u] = get(u, 0) + 1
                deg[v] = get(v, 0) + 1
            self._degree = deg
        return self._degree

    def degree(self, v: int) -> int:
        return self.degrees().get(v, 0)

    def vertices(self) -> list[int]:
        return sorted(self.degrees())

    def edges(self) -> list[tuple[int, int]]:
        eu, ev = self.parent.eu, self.parent.ev
        return [(eu[e], ev[e]) for e in self.edge_ids]

    def __repr__(self) -> str:
        return f"Subgraph(m={self.m}, level={self.level})"


GraphLike = Union[Graph, Subgraph]


def induce_subgraph(g: GraphLike, edge_ids: Iterable[int], level: int = 0) -> Subgraph:
    """Restrict ``g`` to ``edge_ids`` (ids of the root graph).

    Raises :class:`GraphError` for an id outside ``g``.
    """
    root, allowed = as_view(g)
    ids = sorted(set(edge_ids))
    if isinstance(g, Graph):
        for e in ids:
            if not 0 <= e < root.m:
                raise GraphError(f"invalid edge id {e}", index=e)
    else:
        pool = set(allowed)
        for e in ids:
            if e not in pool:
                raise GraphError(f"edge id {e} is not in the subgraph", index=e)
    return Subgraph(root, ids, level)


def as_view(g: GraphLike) -> tuple[Graph, Sequence[int]]:
    """Return the root graph and the edge ids ``g`` covers."""
    if isinstance(g, Subgraph):
        return g.parent, g.edge_ids
    return g, range(g.m)


IntArray = array


def int_array(a: np.ndarray) -> IntArray:
    """Copy an integer array into a flat ``array('q')``; cheap to index from Python."""
    out = array("q")
    out.frombytes(np.ascontiguousarray(a, dtype=np.int64).tobytes())
    return out


def local_ends(root: Graph, ids: Sequence[int]) -> tuple[list[int], list[int], list[int], np.ndarray]:
    """Compact numbering of the vertices touched by ``ids``.

    Returns ``(verts, lu, lv, deg)``: the touched root vertices in ascending
    order, the local endpoints of each selected edge (position-aligned with
    ``ids``) and the local degrees.  Array work keeps this fast on large views.
    """
    if not len(ids):
        return [], [], [], np.zeros(0, dtype=np.int64)
    ends = root.end_array()
    sel = ends if isinstance(ids, range) and ids == range(root.m) else ends[:, np.asarray(ids, dtype=np.int64)]
    verts, inv = np.unique(sel, return_inverse=True)
    inv = inv.reshape(2, -1)
    deg = np.bincount(inv.ravel(), minlength=len(verts))
    # One shared int object per local vertex keeps the working set small.
    local = list(range(len(verts))).__getitem__
    lu = list(map(local, inv[0].tolist()))
    lv = list(map(local, inv[1].tolist()))
    return verts.tolist(), lu, lv, deg


def max_degree(g: GraphLike) -> int:
    if isinstance(g, Subgraph):
        if g._degree is not None:
            return max(g._degree.values(), default=0)
        if not g.edge_ids:
            return 0
        ends = g.parent.end_array()[:, np.asarray(g.edge_ids, dtype=np.int64)]
        return int(np.bincount(ends.ravel()).max())
    return max(g.degree, default=0)


class Orientation:
    """A direction for every edge of ``graph``.

    ``forward[e]`` is true when edge ``e = (u, v)`` (stored with ``u < v``)
    points ``u -> v``.
    """

    __slots__ = ("graph", "forward", "in_list", "out_list")

    def __init__(self, graph: Graph, forward: Sequence[bool]):
        if len(forward) != graph.m:
            raise GraphError(f"orientation covers {len(forward)} edges, graph has {graph.m}")
        self.graph = graph
        self.forward = [bool(f) for f in forward]
        in_list: list[list[int]] = [[] for _ in range(graph.n)]
        out_list: list[list[int]] = [[] for _ in range(graph.n)]
        for e, (u, v, f) in enumerate(zip(graph.eu, graph.ev, self.forward)):
            if f:
                out_list[u].append(e)
                in_list[v].append(e)
            else:
                out_list[v].append(e)
                in_list[u].append(e)
        self.in_list = in_list
        self.out_list = out_list

    @classmethod
    def from_arcs(cls, graph: Graph, arcs: Iterable[tuple[int, int]]) -> Orientation:
        """Orientation from directed pairs ``(tail, head)``, one per edge."""
        forward: list[bool | None] = [None] * graph.m
        for a, b in arcs:
            e = graph.edge_id(a, b)
            if e is None:
                raise GraphError(f"arc ({a}, {b}) is not an edge")
            if forward[e] is not None:
                raise GraphError(f"edge ({a}, {b}) oriented twice", index=e)
            forward[e] = a < b
        missing = [e for e, f in enumerate(forward) if f is None]
        if missing:
            raise GraphError("orientation does not cover every edge", index=missing[0])
        return cls(graph, forward)  # type: ignore[arg-type]

    def source(self, e: int) -> int:
        return self.graph.eu[e] if self.forward[e] else self.graph.ev[e]

    def target(self, e: int) -> int:
        return self.graph.ev[e] if self.forward[e] else self.graph.eu[e]

    def arcs(self) -> list[tuple[int, int]]:
        return [(self.source(e), self.target(e)) for e in range(self.graph.m)]

    def indeg(self, v: int) -> int:
        return len(self.in_list[v])

    def outdeg(self, v: int) -> int:
        return len(self.out_list[v])

    def max_outdeg(self) -> int:
        return max(map(len, self.out_list), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.graph == other.graph and self.forward == other.forward

    __hash__ = None  # type: ignore[assignment]
