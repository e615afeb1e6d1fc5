"""Alternating-directions path decomposition and oriented degree splitting.

An AD path is a walk whose consecutive edges both point into, or both point
out of, their shared vertex.  Paths are grown greedily until neither end can
be extended, and their edges are removed from the active pool.  This makes every
vertex the incoming end of at most one path and the outgoing end of at most
one path.  Labeling each path ``1, -1, 1, ...`` then gives in- and
out-discrepancy at most 1 everywhere.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .euler import EdgePartition
from .graph import Graph, GraphLike, Orientation, as_view

INCOMING = "incoming"
OUTGOING = "outgoing"


@dataclass
class ADPath:
    vertices: list[int]
    edges: list[int]
    start_role: str
    end_role: str

    @property
    def is_cycle(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass
class ADDecomposition:
    graph: Graph
    orientation: Orientation
    paths: list[ADPath]
    edge_to_path: dict[int, tuple[int, int]] = field(default_factory=dict)

    def endpoint_counts(self) -> dict[int, list[int]]:
        """``v -> [#paths with v as incoming end, #paths with v as outgoing end]``."""
        counts: dict[int, list[int]] = {}
        for p in self.paths:
            roles = {(p.vertices[0], p.start_role), (p.vertices[-1], p.end_role)}
            for v, role in roles:
                c = counts.setdefault(v, [0, 0])
                c[0 if role == INCOMING else 1] += 1
        return counts


def _role(src_of_edge: int, end_vertex: int) -> str:
    # An end whose edge leaves it is an outgoing end.
    return OUTGOING if src_of_edge == end_vertex else INCOMING


def ad_paths_decomposition(g: GraphLike, mu: Orientation) -> ADDecomposition:
    """Partition the edges of ``g`` into maximal AD paths.

    Each path starts from the lowest-id active edge ``s -> t`` and is extended
    at the ``t`` end until stuck, then at the ``s`` end.  Extensions take the
    first still-active edge of the required direction.
    """
    root, ids = as_view(g)
    if mu.graph is not root and (mu.graph.n, mu.graph.m) != (root.n, root.m):
        raise ValueError("orientation belongs to a different graph")
    eu, ev = root.eu, root.ev
    fwd = mu.forward
    ins: dict[int, list[int]] = {}
    outs: dict[int, list[int]] = {}
    for e in ids:
        if fwd[e]:
            s, t = eu[e], ev[e]
        else:
            s, t = ev[e], eu[e]
        lst = outs.get(s)
        if lst is None:
            outs[s] = [e]
        else:
            lst.append(e)
        lst = ins.get(t)
        if lst is None:
            ins[t] = [e]
        else:
            lst.append(e)
    dead = bytearray(root.m)
    cur_in: dict[int, int] = {}
    cur_out: dict[int, int] = {}

    def take(lists: dict[int, list[int]], cur: dict[int, int], x: int) -> int:
        lst = lists.get(x)
        if lst is None:
            return -1
        i = cur.get(x, 0)
        k = len(lst)
        while i < k and dead[lst[i]]:
            i += 1
        if i == k:
            cur[x] = i
            return -1
        cur[x] = i + 1
        e = lst[i]
        dead[e] = 1
        return e

    def grow(x: int, entering: bool, verts: list[int], edges: list[int]) -> None:
        # `entering`: the path's edge at x points into x, so x needs another in-edge.
        while True:
            e = take(ins, cur_in, x) if entering else take(outs, cur_out, x)
            if e < 0:
                return
            u = eu[e]
            x = ev[e] if u == x else u
            edges.append(e)
            verts.append(x)
            entering = not entering

    paths: list[ADPath] = []
    edge_to_path: dict[int, tuple[int, int]] = {}
    for seed in ids:
        if dead[seed]:
            continue
        dead[seed] = 1
        if fwd[seed]:
            s, t = eu[seed], ev[seed]
        else:
            s, t = ev[seed], eu[seed]
        head_v, head_e = [t], [seed]
        grow(t, True, head_v, head_e)
        tail_v: list[int] = []
        tail_e: list[int] = []
        grow(s, False, tail_v, tail_e)
        tail_v.reverse()
        tail_e.reverse()
        verts = tail_v + [s] + head_v
        edges = tail_e + head_e
        first, last = edges[0], edges[-1]
        src_first = eu[first] if fwd[first] else ev[first]
        src_last = eu[last] if fwd[last] else ev[last]
        path = ADPath(verts, edges, _role(src_first, verts[0]), _role(src_last, verts[-1]))
        k = len(paths)
        for i, e in enumerate(edges):
            edge_to_path[e] = (k, i)
        paths.append(path)
    return ADDecomposition(root, mu, paths, edge_to_path)


class OrientedPartition(EdgePartition):
    """An edge 2-labeling read against an orientation."""

    __slots__ = ("orientation", "decomposition", "_ocounts")

    def __init__(
        self,
        graph: Graph,
        edge_ids: Sequence[int],
        labels: list[int],
        orientation: Orientation,
        decomposition: ADDecomposition | None = None,
    ):
        super().__init__(graph, edge_ids, labels)
        self.orientation = orientation
        self.decomposition = decomposition
        self._ocounts: dict[int, list[int]] | None = None

    def oriented_counts(self) -> dict[int, list[int]]:
        """``v -> [indeg_1, indeg_-1, outdeg_1, outdeg_-1]`` for non-isolated vertices."""
        if self._ocounts is None:
            eu, ev = self.graph.eu, self.graph.ev
            fwd = self.orientation.forward
            counts: dict[int, list[int]] = {}
            for e, q in zip(self.edge_ids, self.labels):
                s, t = (eu[e], ev[e]) if fwd[e] else (ev[e], eu[e])
                k = 0 if q == 1 else 1
                c = counts.get(t)
                if c is None:
                    c = counts[t] = [0, 0, 0, 0]
                c[k] += 1
                c = counts.get(s)
                if c is None:
                    c = counts[s] = [0, 0, 0, 0]
                c[2 + k] += 1
            self._ocounts = counts
        return self._ocounts

    def in_discrepancy(self, v: int) -> int:
        c = self.oriented_counts().get(v, (0, 0, 0, 0))
        return abs(c[0] - c[1])

    def out_discrepancy(self, v: int) -> int:
        c = self.oriented_counts().get(v, (0, 0, 0, 0))
        return abs(c[2] - c[3])


def oriented_degree_split(g: GraphLike, mu: Orientation) -> OrientedPartition:
    """Oriented split with in- and out-discrepancy at most 1 at every vertex.

    Each AD path is labeled alternately starting with 1 at its first edge.
    """
    root, ids = as_view(g)
    d = ad_paths_decomposition(g, mu)
    label: dict[int, int] = {}
    for p in d.paths:
        q = 1
        for e in p.edges:
            label[e] = q
            q = -q
    return OrientedPartition(root, ids, [label[e] for e in ids], mu, d)
