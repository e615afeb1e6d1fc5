"""Independent checkers for colorings, splits, orientations and recursion traces.

Every checker recomputes what it needs from raw edges, labels, colors and
directions.  None of them reads cached counts or indexes kept by the
algorithms, so a bug in an algorithm's bookkeeping cannot hide itself.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .adsplit import INCOMING, OUTGOING, ADDecomposition
from .euler import EdgePartition
from .graph import Graph, GraphLike, Orientation, as_view
from .recursive import RecursionTrace
from .vizing import Coloring


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check.  Truthy when it passed.

    ``witness`` holds the offending objects (an edge pair, a vertex and its
    value, or violated claim tags) and ``detail`` a one-line explanation.
    """

    check: str
    ok: bool
    detail: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def line(self) -> str:
        return f"OK {self.check}" if self.ok else f"FAIL {self.check} {self.detail}"


def _ok(check: str) -> CheckResult:
    return CheckResult(check, True)


def _ids(g: GraphLike) -> tuple[Graph, np.ndarray]:
    root, ids = as_view(g)
    return root, np.asarray(ids, dtype=np.int64)


def _ends(root: Graph, ids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    eu = np.asarray(root.eu, dtype=np.int64)
    ev = np.asarray(root.ev, dtype=np.int64)
    return eu[ids], ev[ids]


def _directed(root: Graph, mu: Orientation, ids: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    u, v = _ends(root, ids)
    fwd = np.asarray(mu.forward, dtype=bool)[ids]
    return np.where(fwd, u, v), np.where(fwd, v, u)


# Colorings ---------------------------------------------------------------


def check_proper(g: GraphLike, c: Coloring) -> CheckResult:
    """No two edges sharing a vertex have the same color.

    On failure the witness is the violating pair ``(e1, e2)``, ``e1 < e2``,
    that comes first in edge-id order.  Raises ValueError when an edge of
    ``g`` is uncolored.
    """
    root, ids = _ids(g)
    if not len(ids):
        return _ok("proper")
    col = np.asarray(c.color, dtype=np.int64)[ids]
    if (col <= 0).any():
        e = int(ids[np.flatnonzero(col <= 0)[0]])
        raise ValueError(f"edge {e} is not colored")
    u, v = _ends(root, ids)
    vert = np.concatenate([u, v])
    colr = np.concatenate([col, col])
    edge = np.concatenate([ids, ids])
    order = np.lexsort((edge, colr, vert))
    vert, colr, edge = vert[order], colr[order], edge[order]
    clash = np.flatnonzero((vert[1:] == vert[:-1]) & (colr[1:] == colr[:-1]))
    if not len(clash):
        return _ok("proper")
    # The smallest clashing pair always shows up between neighbors in this order.
    a, b = edge[clash], edge[clash + 1]
    i = np.lexsort((b, a))[0]
    e1, e2 = int(a[i]), int(b[i])
    k = int(colr[clash[i]])
    return CheckResult("proper", False, f"edges {e1} {e2} share color {k}", (e1, e2))


def check_palette(c: Coloring, bound: int) -> CheckResult:
    """The largest color used is at most ``bound``."""
    col = [c.color[e] for e in c.edge_ids]
    top = max(col, default=0)
    if top <= bound:
        return _ok("palette")
    return CheckResult("palette", False, f"max color {top} exceeds bound {bound}", (top, bound))


# Splits ------------------------------------------------------------------


def _labels(g: GraphLike, p: EdgePartition) -> tuple[Graph, np.ndarray, np.ndarray]:
    root, ids = _ids(g)
    got = np.asarray(p.edge_ids, dtype=np.int64)
    lab = np.asarray(p.labels, dtype=np.int64)
    if len(got) != len(ids) or not np.array_equal(np.sort(got), np.sort(ids)):
        raise ValueError("partition does not cover exactly the edges of the graph")
    if not np.isin(lab, (1, -1)).all():
        raise ValueError("labels must be 1 or -1")
    return root, got, lab


def _worst(sums: np.ndarray, kappa: int) -> int | None:
    bad = np.flatnonzero(np.abs(sums) > kappa)
    return int(bad[0]) if len(bad) else None


def check_discrepancy(g: GraphLike, p: EdgePartition, kappa: int, oriented: bool = False) -> CheckResult:
    """Every per-vertex label sum has absolute value at most ``kappa``.

    With ``oriented`` the in-sums and out-sums are bounded separately under
    ``p.orientation``.  The witness is ``(vertex, sum)`` for the lowest
    offending vertex.
    """
    root, ids, lab = _labels(g, p)
    n = root.n
    if not oriented:
        u, v = _ends(root, ids)
        sums = np.bincount(u, lab, n) + np.bincount(v, lab, n)
        x = _worst(sums, kappa)
        if x is None:
            return _ok("discrepancy")
        val = int(sums[x])
        return CheckResult("discrepancy", False, f"vertex {x} label sum {val} exceeds {kappa}", (x, val))
    mu = getattr(p, "orientation", None)
    if mu is None:
        raise ValueError("oriented check needs a partition carrying an orientation")
    s, t = _directed(root, mu, ids)
    for side, ends in (("in", t), ("out", s)):
        sums = np.bincount(ends, lab, n)
        x = _worst(sums, kappa)
        if x is not None:
            val = int(sums[x])
            return CheckResult(
                "discrepancy", False, f"vertex {x} {side}-label sum {val} exceeds {kappa}", (x, val, side)
            )
    return _ok("discrepancy")


# Orientations ------------------------------------------------------------


def _acyclic(n: int, s: np.ndarray, t: np.ndarray) -> bool:
    # Kahn-style elimination of vertices with no remaining in-edges.
    indeg = np.bincount(t, minlength=n).tolist()
    outs: list[list[int]] = [[] for _ in range(n)]
    for a, b in zip(s.tolist(), t.tolist()):
        outs[a].append(b)
    queue = [x for x in range(n) if indeg[x] == 0]
    seen = 0
    while queue:
        x = queue.pop()
        seen += 1
        for y in outs[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                queue.append(y)
    return seen == n


def check_orientation(g: GraphLike, mu: Orientation, outdeg_bound: int) -> CheckResult:
    """Every outdegree is at most ``outdeg_bound`` and the orientation has no directed cycle."""
    root, ids = _ids(g)
    s, t = _directed(root, mu, ids)
    out = np.bincount(s, minlength=root.n)
    x = _worst(out, outdeg_bound)
    if x is not None:
        val = int(out[x])
        return CheckResult("orientation", False, f"vertex {x} outdegree {val} exceeds {outdeg_bound}", (x, val))
    if not _acyclic(root.n, s, t):
        return CheckResult("orientation", False, "directed cycle", ())
    return _ok("orientation")


# AD decompositions -------------------------------------------------------

REPLAY_LIMIT = 100


def _fail(detail: str, *witness: object) -> CheckResult:
    return CheckResult("ad-decomposition", False, detail, tuple(witness))


def check_ad_decomposition(g: GraphLike, mu: Orientation, d: ADDecomposition) -> CheckResult:
    """Partition, alternating directions, endpoint bounds and (up to 100 edges) maximality.

    Maximality is replayed in extraction order: when a path is removed, no
    still-active edge may continue it at either end in the required
    direction.
    """
    root, ids = _ids(g)
    eu, ev, fwd = root.eu, root.ev, mu.forward

    def src(e: int) -> int:
        return eu[e] if fwd[e] else ev[e]

    owner: dict[int, int] = {}
    for k, p in enumerate(d.paths):
        if not p.edges or len(p.vertices) != len(p.edges) + 1:
            return _fail(f"path {k} is malformed", k)
        for e in p.edges:
            if e in owner:
                return _fail(f"edge {e} lies on paths {owner[e]} and {k}", e)
            owner[e] = k
    wanted = set(ids.tolist())
    if set(owner) != wanted:
        extra = sorted(set(owner) - wanted)
        missing = sorted(wanted - set(owner))
        e = extra[0] if extra else missing[0]
        return _fail(f"edge {e} {'is not in the graph' if extra else 'is on no path'}", e)
    for e, (k, i) in d.edge_to_path.items():
        if owner.get(e) != k or d.paths[k].edges[i] != e:
            return _fail(f"edge index disagrees for edge {e}", e)

    roles = []
    for k, p in enumerate(d.paths):
        vs, es = p.vertices, p.edges
        for i, e in enumerate(es):
            if {vs[i], vs[i + 1]} != {eu[e], ev[e]}:
                return _fail(f"path {k} step {i} does not follow edge {e}", k, i)
        for i in range(1, len(es)):
            # Both edges leave vs[i] or both enter it.
            if (src(es[i - 1]) == vs[i]) != (src(es[i]) == vs[i]):
                return _fail(f"path {k} changes direction rule at vertex {vs[i]}", k, vs[i])
        start = OUTGOING if src(es[0]) == vs[0] else INCOMING
        end = OUTGOING if src(es[-1]) == vs[-1] else INCOMING
        if (start, end) != (p.start_role, p.end_role):
            return _fail(f"path {k} declares wrong endpoint roles", k)
        roles.append({(vs[0], start), (vs[-1], end)})

    if len(ids) <= REPLAY_LIMIT:
        active = set(wanted)
        for k, p in enumerate(d.paths):
            active.difference_update(p.edges)
            ends = ((p.vertices[0], p.edges[0]), (p.vertices[-1], p.edges[-1]))
            for v, last in ends:
                leaving = src(last) == v
                for e in sorted(active):
                    if v in (eu[e], ev[e]) and (src(e) == v) == leaving:
                        return _fail(f"path {k} could still be extended at {v} by edge {e}", k, v, e)

    in_end: dict[int, int] = {}
    out_end: dict[int, int] = {}
    for k, pairs in enumerate(roles):
        for v, role in sorted(pairs):
            book = out_end if role == OUTGOING else in_end
            if v in book:
                return _fail(f"vertex {v} is the {role} end of paths {book[v]} and {k}", v, role)
            book[v] = k
    return _ok("ad-decomposition")


# Recursion traces --------------------------------------------------------


def _union_find_acyclic(pairs: Sequence[tuple[int, int]]) -> bool:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def check_trace(t: RecursionTrace, root: Graph, mode: str | None = None) -> CheckResult:
    """Evaluate the per-level degree, edge-count and arboricity bounds on a trace.

    The bounds are checked against the recorded numbers, and every recorded
    number is also recomputed from the node's edge ids.  Violations are
    reported as tags in ``witness``:

    ``claim-deg-bound``        Delta/2**i - 2 <= Delta_i <= Delta/2**i + 2 (delta mode)
    ``claim-edge-bound``       m_i >= m/2**i - 2 (delta mode)
    ``lemma-oriented-degree``  indeg(v)/2**i - 1 <= indeg_i(v) <= indeg(v)/2**i + 1, same for out
    ``corollary-deg-bound``    Delta_i <= Delta/2**i + 2 (oriented modes)
    ``lemma-arboricity``       out-edge labels give at most floor(2*alpha_hat/2**i) + 1 forests
    ``trace-mismatch``         a recorded field disagrees with the node's edges
    ``trace-structure``        levels, parents or edge sets do not form a split tree
    """
    mode = mode or t.mode
    if mode not in ("delta", "oriented", "arboricity"):
        raise ValueError(f"unknown trace mode {mode!r}")
    tags: list[str] = []
    notes: list[str] = []

    def flag(tag: str, note: str) -> None:
        if tag not in tags:
            tags.append(tag)
            notes.append(note)

    nodes = t.nodes
    if not nodes:
        return CheckResult("trace", False, "empty trace", ("trace-structure",))
    n = root.n
    eu = np.asarray(root.eu, dtype=np.int64)
    ev = np.asarray(root.ev, dtype=np.int64)
    oriented = mode != "delta"
    mu = t.orientation
    if oriented and mu is None:
        raise ValueError("oriented trace without an orientation")
    fwd = np.asarray(mu.forward, dtype=bool) if oriented else None

    def degrees(ids: np.ndarray):
        u, v = eu[ids], ev[ids]
        deg = np.bincount(u, minlength=n) + np.bincount(v, minlength=n)
        if not oriented:
            return deg, None, None, u, v
        s, tt = np.where(fwd[ids], u, v), np.where(fwd[ids], v, u)
        return deg, np.bincount(tt, minlength=n), np.bincount(s, minlength=n), s, tt

    base = np.asarray(nodes[0].edge_ids, dtype=np.int64)
    deg0, in0, out0, _, _ = degrees(base)
    delta = int(deg0.max(initial=0))
    m = len(base)
    if nodes[0].level != 0 or nodes[0].parent != -1:
        flag("trace-structure", "node 0 is not a level-0 root")

    kids: dict[int, list[int]] = {}
    for j, node in enumerate(nodes):
        if node.parent >= 0:
            kids.setdefault(node.parent, []).append(j)
    for i, js in kids.items():
        if i >= len(nodes) or len(js) != 2 or any(nodes[j].level != nodes[i].level + 1 for j in js):
            flag("trace-structure", f"node {i} does not have two children one level down")
            continue
        union = sorted(list(nodes[js[0]].edge_ids) + list(nodes[js[1]].edge_ids))
        if union != sorted(nodes[i].edge_ids):
            flag("trace-structure", f"children of node {i} do not split its edges")

    for j, node in enumerate(nodes):
        i = node.level
        p2 = 2**i
        ids = np.asarray(node.edge_ids, dtype=np.int64)
        deg, ind, outd, s, tt = degrees(ids)
        real_delta = int(deg.max(initial=0))
        if node.m != len(ids) or node.delta != real_delta:
            flag("trace-mismatch", f"node {j} records m={node.m} delta={node.delta}")
        if oriented:
            real_in, real_out = int(ind.max(initial=0)), int(outd.max(initial=0))
            if (node.max_in, node.max_out) != (real_in, real_out):
                flag("trace-mismatch", f"node {j} records max in/out {node.max_in}/{node.max_out}")

        # Bounds scaled by 2**i to stay in integers.
        d_i = node.delta
        if mode == "delta":
            if not delta - 2 * p2 <= p2 * d_i <= delta + 2 * p2:
                flag("claim-deg-bound", f"node {j} level {i}: delta {d_i} vs {delta}/2^{i}")
            if p2 * node.m < m - 2 * p2:
                flag("claim-edge-bound", f"node {j} level {i}: m {node.m} vs {m}/2^{i}")
            continue
        if p2 * d_i > delta + 2 * p2:
            flag("corollary-deg-bound", f"node {j} level {i}: delta {d_i} vs {delta}/2^{i}")
        for name, now, top in (("in", ind, in0), ("out", outd, out0)):
            bad = np.flatnonzero((p2 * now < top - p2) | (p2 * now > top + p2))
            if len(bad):
                v = int(bad[0])
                flag("lemma-oriented-degree", f"node {j} level {i}: {name}degree of {v} is {int(now[v])}")
        if mode == "arboricity":
            if t.alpha_hat is None:
                raise ValueError("arboricity trace without alpha_hat")
            limit = int(Fraction(2 * t.alpha_hat, p2)) + 1
            classes: dict[int, list[tuple[int, int]]] = {}
            seen: dict[int, int] = {}
            for a, b in zip(s.tolist(), tt.tolist()):
                k = seen.get(a, 0) + 1
                seen[a] = k
                classes.setdefault(k, []).append((a, b))
            if len(classes) > limit:
                flag("lemma-arboricity", f"node {j} level {i}: {len(classes)} label classes > {limit}")
            elif not all(_union_find_acyclic(pairs) for pairs in classes.values()):
                flag("lemma-arboricity", f"node {j} level {i}: a label class has a cycle")

    if tags:
        return CheckResult("trace", False, "; ".join(notes), tuple(tags))
    return _ok("trace")
