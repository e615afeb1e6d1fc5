"""Acyclic low-outdegree orientations by minimum-degree peeling.

Vertices are peeled in order of smallest degree in the remaining graph, and
every edge still present at a peel is oriented away from the peeled vertex.
The outdegree of a vertex is its degree at peel time, which never exceeds
``2 * arboricity``; the largest such degree is the degeneracy.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .graph import Graph, Orientation


@dataclass
class PeelResult:
    orientation: Orientation
    # Vertices in the order they were peeled (isolated vertices included).
    order: list[int]
    # Degree of each vertex in the remaining graph when it was peeled.
    peel_degree: list[int]

    @property
    def degeneracy(self) -> int:
        return max(self.peel_degree, default=0)

    @property
    def alpha_hat(self) -> int:
        return _alpha_from_degeneracy(self.degeneracy)


def forests_decomposition_orientation(g: Graph) -> PeelResult:
    """Peel minimum-degree vertices (lowest id first on ties) and orient edges away.

    Buckets indexed by current degree hold min-heaps of vertex ids; ``s`` is the
    smallest possibly non-empty bucket and only ever steps back by one after a
    peel.  Runs in O((n + m) log n); the log factor pays for the id tie-break.
    """
    n = g.n
    deg = list(g.degree)
    buckets: list[list[int]] = [[] for _ in range(max(deg, default=0) + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # ascending ids: already heaps
    alive = bytearray(b"\x01") * n
    forward = [False] * g.m
    order: list[int] = []
    peel_degree = [0] * n
    adjacency = g.adjacency
    pop, push = heapq.heappop, heapq.heappush
    s = 0
    for _ in range(n):
        while True:
            b = buckets[s]
            # Entries go stale when their vertex is peeled or loses degree.
            while b and (not alive[b[0]] or deg[b[0]] != s):
                pop(b)
            if b:
                break
            s += 1
        v = pop(b)
        alive[v] = 0
        order.append(v)
        peel_degree[v] = deg[v]
        for e, u in adjacency[v]:
            if alive[u]:
                forward[e] = v < u
                d = deg[u] - 1
                deg[u] = d
                push(buckets[d], u)
        if s:
            s -= 1
    return PeelResult(Orientation(g, forward), order, peel_degree)


def degeneracy(g: Graph) -> int:
    return forests_decomposition_orientation(g).degeneracy


def _alpha_from_degeneracy(d: int) -> int:
    return max(1, (d + 2) // 2)


def arboricity_estimate(g: Graph) -> int:
    """Lower bound ``max(1, ceil((d+1)/2))`` on the arboricity from the degeneracy ``d``."""
    if g.m == 0:
        raise ValueError("arboricity estimate needs at least one edge")
    return forests_decomposition_orientation(g).alpha_hat
