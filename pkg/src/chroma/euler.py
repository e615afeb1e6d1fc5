"""Undirected degree splitting through Euler cycles.

Each connected component gets a private dummy vertex joined to its
odd-degree vertices.  The Euler cycle of the augmented component is labeled
``1, -1, 1, ...`` in walk order, and the dummy edges are then dropped.  Every
vertex ends with ``|#1 - #(-1)| <= 2``.  Components whose label sums are odd
are flipped greedily so that the two global sides differ by at most one edge.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph, GraphLike, IntArray, Subgraph, as_view, int_array, local_ends


class EdgePartition:
    """A ``{1, -1}`` label for every edge of a view, aligned with ``edge_ids``."""

    __slots__ = ("graph", "edge_ids", "labels", "_counts")

    def __init__(self, graph: Graph, edge_ids: Sequence[int], labels: list[int]):
        if len(edge_ids) != len(labels):
            raise ValueError("one label per edge id is required")
        self.graph = graph
        self.edge_ids = edge_ids
        self.labels = labels
        self._counts: dict[int, list[int]] | None = None

    def label_map(self) -> dict[int, int]:
        return dict(zip(self.edge_ids, self.labels))

    def side(self, label: int) -> list[int]:
        return [e for e, q in zip(self.edge_ids, self.labels) if q == label]

    @property
    def side1(self) -> list[int]:
        return self.side(1)

    @property
    def side2(self) -> list[int]:
        return self.side(-1)

    def subgraphs(self, level: int = 1) -> tuple[Subgraph, Subgraph]:
        return Subgraph(self.graph, self.side1, level), Subgraph(self.graph, self.side2, level)

    def counts(self) -> dict[int, list[int]]:
        """``v -> [deg_1(v), deg_-1(v)]`` for every non-isolated vertex."""
        if self._counts is None:
            eu, ev = self.graph.eu, self.graph.ev
            counts: dict[int, list[int]] = {}
            for e, q in zip(self.edge_ids, self.labels):
                k = 0 if q == 1 else 1
                for x in (eu[e], ev[e]):
                    c = counts.get(x)
                    if c is None:
                        c = counts[x] = [0, 0]
                    c[k] += 1
            self._counts = counts
        return self._counts

    def discrepancy(self, v: int) -> int:
        d1, d2 = self.counts().get(v, (0, 0))
        return abs(d1 - d2)

    def max_discrepancy(self) -> int:
        return max((abs(a - b) for a, b in self.counts().values()), default=0)


def _components(k: int, lu: np.ndarray, lv: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Component rank of every local vertex, ranks ordered by each component's
    # lowest vertex (local ids ascend with root ids), plus those lowest vertices.
    a = csr_matrix((np.ones(len(lu), dtype=np.int8), (lu, lv)), shape=(k, k))
    count, label = connected_components(a, directed=False)
    low = np.full(count, k, dtype=np.int64)
    np.minimum.at(low, label, np.arange(k))
    order = np.argsort(low)
    rank = np.empty(count, dtype=np.int64)
    rank[order] = np.arange(count)
    return rank[label], low[order]


def _csr(nv: int, eu: np.ndarray, ev: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # Incidence lists in ascending edge order: vertex x owns adj[ptr[x]:ptr[x + 1]].
    ends = np.stack([eu, ev], axis=1).ravel()
    adj = np.argsort(ends, kind="stable") // 2
    ptr = np.zeros(nv + 1, dtype=np.int64)
    np.cumsum(np.bincount(ends, minlength=nv), out=ptr[1:])
    return adj, ptr


def _hierholzer(adj: IntArray, ptr: IntArray, cursor: IntArray, other: IntArray, start: int, used: bytearray) -> list[int]:
    """Closed walk from ``start`` through every unused edge of its component.

    ``other[j]`` is the xor of the two ends of edge ``j``.
    """
    stack_v = [start]
    stack_e = [-1]
    out = []
    while stack_v:
        x = stack_v[-1]
        i = cursor[x]
        k = ptr[x + 1]
        while i < k and used[adj[i]]:
            i += 1
        if i < k:
            j = adj[i]
            cursor[x] = i + 1
            used[j] = 1
            stack_v.append(other[j] ^ x)
            stack_e.append(j)
        else:
            cursor[x] = i
            stack_v.pop()
            j = stack_e.pop()
            if j >= 0:
                out.append(j)
    out.reverse()
    return out


def _walk_setup(eu: np.ndarray, ev: np.ndarray, nv: int):
    # Flat machine-int arrays keep the walk's working set small.
    adj, ptr = _csr(nv, eu, ev)
    return int_array(adj), int_array(ptr), int_array(ptr[:-1]), int_array(eu ^ ev), bytearray(len(eu))


def degree_split(g: GraphLike) -> EdgePartition:
    """Split the edges of ``g`` into two sides with per-vertex discrepancy at most 2.

    Side 1 gets ``ceil(m/2)`` edges and side 2 ``floor(m/2)``.  Runs in O(m)
    apart from the array sorts used to build incidence lists.
    """
    root, ids = as_view(g)
    m = len(ids)
    if m == 0:
        return EdgePartition(root, ids, [])
    verts, lu_l, lv_l, deg = local_ends(root, ids)
    k = len(verts)
    lu = np.asarray(lu_l, dtype=np.int64)
    lv = np.asarray(lv_l, dtype=np.int64)
    comp, low = _components(k, lu, lv)

    # One dummy per component with odd vertices, joined to them in ascending order.
    odd = np.flatnonzero(deg & 1)
    odd = odd[np.argsort(comp[odd], kind="stable")]
    with_dummy, first = np.unique(comp[odd], return_inverse=True)
    dummy = k + first
    starts = low.copy()
    starts[with_dummy] = k + np.arange(len(with_dummy))

    eu = np.concatenate([lu, dummy])
    ev = np.concatenate([lv, odd])
    adj, ptr, cursor, other, used = _walk_setup(eu, ev, k + len(with_dummy))
    labels = np.zeros(len(eu), dtype=np.int64)
    for s in starts.tolist():
        walk = _hierholzer(adj, ptr, cursor, other, s, used)
        labels[walk] = np.resize(np.array([1, -1], dtype=np.int64), len(walk))
    labels = labels[:m]

    # Component sums are 0 or +-1.  Greedy flips keep the running total in
    # {-1, 0, 1}; a final flip makes side 1 the larger side when m is odd.
    edge_comp = comp[lu]
    sums = np.bincount(edge_comp, weights=labels, minlength=len(low)).astype(np.int64).tolist()
    flip = np.zeros(len(low), dtype=bool)
    running = 0
    for c, total in enumerate(sums):
        if total and abs(running + total) > 1:
            flip[c] = True
            sums[c] = total = -total
        running += total
    if running < 0:
        flip[sums.index(-1)] ^= True
    labels[flip[edge_comp]] *= -1
    return EdgePartition(root, ids, labels.tolist())


def euler_cycle(g: GraphLike) -> list[int]:
    """Euler cycle of ``g`` as a list of edge ids in walk order.

    Starts at the lowest-id non-isolated vertex.  Raises ValueError when a
    vertex has odd degree or the edges do not form one connected piece.
    """
    root, ids = as_view(g)
    if not len(ids):
        return []
    verts, lu_l, lv_l, deg = local_ends(root, ids)
    odd = np.flatnonzero(deg & 1)
    if len(odd):
        x = int(odd[0])
        raise ValueError(f"vertex {verts[x]} has odd degree {deg[x]}")
    lu = np.asarray(lu_l, dtype=np.int64)
    lv = np.asarray(lv_l, dtype=np.int64)
    _, low = _components(len(verts), lu, lv)
    if len(low) > 1:
        raise ValueError(f"edge set is disconnected ({len(low)} components)")
    walk = _hierholzer(*_walk_setup(lu, lv, len(verts))[:4], 0, bytearray(len(lu)))
    return [ids[j] for j in walk]
