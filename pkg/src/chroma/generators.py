"""Seeded graph families with known maximum degree and arboricity bounds.

All randomness comes from :class:`SplitMix64`, a fully specified 64-bit
generator, so a ``(family, n, param, seed)`` tuple pins down the exact edge
list on every platform:

    state <- state + 0x9E3779B97F4A7C15            (mod 2**64)
    z <- (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9      (mod 2**64)
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB      (mod 2**64)
    output z ^ (z >> 31)

Bounded integers in ``[0, k)`` are drawn as ``(x * k) >> 64``.  Because the
state is a plain counter, :meth:`SplitMix64.block` can produce a run of outputs
at once with numpy; it yields exactly what repeated :meth:`SplitMix64.next`
calls would.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, build_graph

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
FAMILIES = ("gnm", "forest-union", "cycle", "complete", "star")


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Integer in ``[0, k)``."""
        return (self.next() * k) >> 64

    def coin(self) -> bool:
        return bool(self.next() >> 63)

    def block(self, count: int) -> np.ndarray:
        """The next ``count`` outputs as a uint64 array."""
        steps = np.arange(1, count + 1, dtype=np.uint64)
        z = np.uint64(self.state) + steps * np.uint64(GAMMA)
        self.state = (self.state + count * GAMMA) & MASK64
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))

    def block_below(self, count: int, k: int) -> np.ndarray:
        """``count`` bounded draws in ``[0, k)`` as int64, matching :meth:`below`."""
        if not 0 < k < 1 << 32:
            raise ValueError(f"bound {k} outside (0, 2**32)")
        x = self.block(count)
        kk = np.uint64(k)
        lo32 = np.uint64(0xFFFFFFFF)
        s32 = np.uint64(32)
        # 128-bit product high word from 32-bit halves; exact for k < 2**32.
        hi = (x >> s32) * kk + (((x & lo32) * kk) >> s32)
        return (hi >> s32).astype(np.int64)


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: int
    param: int | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if self.family == "gnm":
            if self.param is None or self.param < 0:
                raise ValueError("gnm needs a non-negative edge count as param")
            if self.param > self.n * (self.n - 1) // 2:
                raise ValueError(f"gnm: m={self.param} exceeds n(n-1)/2 for n={self.n}")
        elif self.family == "forest-union":
            if self.param is None or self.param < 1:
                raise ValueError("forest-union needs a positive forest count as param")
        elif self.family == "cycle":
            if self.n < 3:
                raise ValueError("a cycle needs at least 3 vertices")
            if self.param is not None and self.param != self.n:
                raise ValueError(f"cycle length {self.param} disagrees with n={self.n}")


@dataclass
class Generated:
    graph: Graph
    spec: GenSpec
    # Certified upper bound on the arboricity, None when the family has none.
    arboricity_bound: int | None = None
    # forest-union only: the edge ids contributed by each layer.
    layers: list[list[int]] = field(default_factory=list)


def generate(spec: GenSpec) -> Generated:
    """Generate the graph described by ``spec``; equal specs give equal graphs."""
    spec.validate()
    n = spec.n
    if spec.family == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        bound = (n + 1) // 2 if n > 1 else None
        return Generated(build_graph(n, edges), spec, bound)
    if spec.family == "star":
        edges = [(0, i) for i in range(1, n)]
        return Generated(build_graph(n, edges), spec, 1 if n > 1 else None)
    if spec.family == "cycle":
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
        return Generated(build_graph(n, edges), spec, 2)
    rng = SplitMix64(spec.seed)
    if spec.family == "gnm":
        return Generated(build_graph(n, _gnm_pairs(n, spec.param, rng)), spec)
    return _forest_union(n, spec.param, rng, spec)


def _gnm_pairs(n: int, m: int, rng: SplitMix64) -> list[tuple[int, int]]:
    total = n * (n - 1) // 2
    if 2 * m > total:
        # Dense: partial Fisher-Yates over all pairs.
        pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for i in range(m):
            j = i + rng.below(total - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:m]
    # Sparse: each attempt draws u then v and is rejected on u == v or a repeat.
    # Attempts are drawn in blocks; the generator is rewound to just after the
    # last attempt actually needed, as if they had been drawn one at a time.
    accepted = np.empty(0, dtype=np.int64)
    while len(accepted) < m:
        need = m - len(accepted)
        batch = max(64, need + need // 2 + 16)
        start = rng.state
        draws = rng.block_below(2 * batch, n)
        u, v = draws[0::2], draws[1::2]
        ok = u != v
        keys = np.minimum(u, v) * n + np.maximum(u, v)
        ok &= ~np.isin(keys, accepted)
        idx = np.flatnonzero(ok)
        _, first = np.unique(keys[idx], return_index=True)
        idx = np.sort(idx[first])[:need]
        if len(idx) == need:
            rng.state = (start + 2 * (int(idx[-1]) + 1) * GAMMA) & MASK64
        accepted = np.concatenate([accepted, keys[idx]])
    return [(int(k // n), int(k % n)) for k in accepted]


def random_tree(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    """Uniform random labeled spanning tree of ``K_n`` (Pruefer decoding)."""
    if n < 2:
        return []
    if n == 2:
        return [(0, 1)]
    seq = rng.block_below(n - 2, n).tolist()
    remaining = [1] * n
    for x in seq:
        remaining[x] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 1:
            heapq.heappush(leaves, x)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def _forest_union(n: int, k: int, rng: SplitMix64, spec: GenSpec) -> Generated:
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    layers: list[list[int]] = []
    for _ in range(k):
        layer = []
        for u, v in random_tree(n, rng):
            if u > v:
                u, v = v, u
            # Collisions are dropped, never resampled.
            if (u, v) in seen:
                continue
            seen.add((u, v))
            layer.append(len(edges))
            edges.append((u, v))
        layers.append(layer)
    return Generated(build_graph(n, edges), spec, k, layers)
