"""Proper (Delta+1)-edge-coloring by Vizing fans.

This is the base case of the recursive colorers.  The work happens on a
compact local copy: vertices and edges of the colored view are renumbered
``0..k-1`` and a color index records which local edge holds color ``c`` at
vertex ``x``.  Each edge first looks for a color free at both of its ends and
only falls back to a Vizing fan when there is none.  Vertex ``x`` owns one slot per color ``1..deg(x)+1`` in a flat
array, with a byte per slot marking occupancy, so the smallest free color is a
byte search inside that range.  Larger colors go to a shared overflow dict.
The index takes O(m) memory whatever the palette.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import accumulate

from .graph import Graph, GraphLike, as_view, local_ends


class _Index:
    """Color index over local edges ``0..k-1`` with local endpoints ``lu``/``lv``."""

    __slots__ = ("lu", "lv", "lc", "base", "occ", "held", "high", "nv")

    def __init__(self, lu: list[int], lv: list[int], deg: list[int]):
        self.lu = lu
        self.lv = lv
        self.lc = [0] * len(lu)
        # Slot of color c at x is base[x] + c, valid while below base[x + 1].
        self.base = [0, *accumulate(d + 2 for d in deg)]
        size = self.base[-1]
        self.occ = bytearray(size)
        self.held = [0] * size
        self.high: dict[int, int] = {}
        self.nv = len(deg)

    def get(self, x: int, c: int) -> int:
        p = self.base[x] + c
        if p < self.base[x + 1]:
            return self.held[p] if self.occ[p] else -1
        return self.high.get(c * self.nv + x, -1)

    def put(self, x: int, c: int, i: int) -> None:
        p = self.base[x] + c
        if p < self.base[x + 1]:
            self.occ[p] = 1
            self.held[p] = i
        else:
            self.high[c * self.nv + x] = i

    def drop(self, x: int, c: int) -> None:
        p = self.base[x] + c
        if p < self.base[x + 1]:
            self.occ[p] = 0
        else:
            del self.high[c * self.nv + x]

    def free(self, x: int) -> int:
        b = self.base[x]
        return self.occ.find(0, b + 1, self.base[x + 1]) - b

    def assign(self, i: int, c: int) -> None:
        self.lc[i] = c
        self.put(self.lu[i], c, i)
        self.put(self.lv[i], c, i)

    def colors_at(self, x: int) -> set[int]:
        b, nv = self.base[x], self.nv
        used = {c for c in range(1, self.base[x + 1] - b) if self.occ[b + c]}
        used.update(key // nv for key in self.high if key % nv == x)
        return used

    def check(self) -> None:
        expected: dict[tuple[int, int], int] = {}
        for i, c in enumerate(self.lc):
            if c:
                for x in (self.lu[i], self.lv[i]):
                    assert (x, c) not in expected, f"color {c} repeated at local vertex {x}"
                    expected[(x, c)] = i
        actual: dict[tuple[int, int], int] = {}
        base = self.base
        for x in range(self.nv):
            for p in range(base[x] + 1, base[x + 1]):
                if self.occ[p]:
                    actual[(x, p - base[x])] = self.held[p]
        for key, i in self.high.items():
            actual[(key % self.nv, key // self.nv)] = i
        assert actual == expected, "vertex/color index out of sync with color array"


class Coloring:
    """Per-edge colors over a root graph.

    ``color[e]`` is the color of root edge ``e`` (0 while unset).  Only the
    edges in ``edge_ids`` belong to the coloring; ``palette`` is the declared
    palette size ``k`` and every set color lies in ``[1, k]``.
    """

    __slots__ = ("graph", "color", "palette", "edge_ids", "_vx", "_pos", "_ix")

    def __init__(
        self,
        graph: Graph,
        color: list[int],
        palette: int,
        edge_ids: Sequence[int] | None = None,
    ):
        if len(color) != graph.m:
            raise ValueError(f"color array has {len(color)} entries, graph has {graph.m} edges")
        self.graph = graph
        self.color = color
        self.palette = palette
        self.edge_ids = range(graph.m) if edge_ids is None else edge_ids
        self._vx: dict[int, int] | None = None

    @classmethod
    def empty(cls, g: GraphLike, palette: int) -> Coloring:
        root, ids = as_view(g)
        return cls(root, [0] * root.m, palette, ids)

    def __len__(self) -> int:
        return len(self.edge_ids)

    def colors(self) -> list[int]:
        """Colors of ``edge_ids``, in order."""
        color = self.color
        return [color[e] for e in self.edge_ids]

    def max_color(self) -> int:
        return max(self.colors(), default=0)

    def used_colors(self) -> set[int]:
        return {c for c in self.colors() if c}

    # Vertex/color index -------------------------------------------------
    # Local edge i is edge_ids[i]; the index refers to edges by local id.

    def _index(self) -> dict[int, int]:
        if self._vx is None:
            self._build_index()
        return self._vx  # type: ignore[return-value]

    def _build_index(self) -> None:
        ids = self.edge_ids
        verts, lu, lv, deg = local_ends(self.graph, ids)
        ix = _Index(lu, lv, deg.tolist())
        color = self.color
        for i, e in enumerate(ids):
            c = color[e]
            if c:
                if ix.get(lu[i], c) != -1 or ix.get(lv[i], c) != -1:
                    raise ValueError(f"color {c} appears twice at a vertex of edge {e}")
                ix.assign(i, c)
        self._pos = None if isinstance(ids, range) else {e: i for i, e in enumerate(ids)}
        self._ix = ix
        self._vx = dict(zip(verts, range(len(verts))))

    def _local(self, e: int) -> int:
        if self._pos is None:
            ids = self.edge_ids
            i = e - ids.start  # type: ignore[attr-defined]
            if not 0 <= i < len(ids):
                raise KeyError(e)
            return i
        return self._pos[e]

    def edge_at(self, v: int, c: int) -> int | None:
        """Edge of color ``c`` at vertex ``v``, or None."""
        x = self._index().get(v)
        if x is None:
            return None
        i = self._ix.get(x, c)
        return None if i == -1 else self.edge_ids[i]

    def colors_at(self, v: int) -> set[int]:
        x = self._index().get(v)
        return set() if x is None else self._ix.colors_at(x)

    def set_color(self, e: int, c: int) -> None:
        """Give edge ``e`` color ``c``; raises if ``c`` is taken at an endpoint."""
        self._index()
        if not 1 <= c <= self.palette:
            raise ValueError(f"color {c} outside palette [1, {self.palette}]")
        ix = self._ix
        i = self._local(e)
        for x in (ix.lu[i], ix.lv[i]):
            other = ix.get(x, c)
            if other != -1 and other != i:
                raise ValueError(f"color {c} already used by edge {self.edge_ids[other]}")
        self.clear(e)
        ix.assign(i, c)
        self.color[e] = c

    def clear(self, e: int) -> None:
        c = self.color[e]
        if not c:
            return
        self._index()
        ix = self._ix
        i = self._local(e)
        ix.drop(ix.lu[i], c)
        ix.drop(ix.lv[i], c)
        ix.lc[i] = 0
        self.color[e] = 0

    def check_index(self) -> None:
        """Recount the vertex/color index from the color array; raise AssertionError on drift."""
        if self._vx is None:
            return
        color = self.color
        assert self._ix.lc == [color[e] for e in self.edge_ids], "local colors out of sync with color array"
        self._ix.check()

    def __repr__(self) -> str:
        return f"Coloring(m={len(self.edge_ids)}, palette={self.palette})"


def free_color(c: Coloring, v: int) -> int:
    """Smallest color in ``[1, palette]`` unused at ``v`` (1 for an isolated vertex)."""
    x = c._index().get(v)
    if x is None:
        return 1
    col = c._ix.free(x)
    if col > c.palette:
        raise ValueError(f"no free color at vertex {v} within palette {c.palette}")
    return col


def invert_cd_path(c: Coloring, v: int, a: int, b: int) -> list[int]:
    """Swap colors ``a`` and ``b`` along the maximal a/b path starting at ``v``.

    ``v`` must miss at least one of the two colors so that it is an end of the
    path.  Returns the path's edge ids in walk order.
    """
    if a == b:
        raise ValueError("path colors must differ")
    x = c._index().get(v)
    if x is None:
        return []
    ix = c._ix
    has_a, has_b = ix.get(x, a) != -1, ix.get(x, b) != -1
    if has_a and has_b:
        raise ValueError(f"vertex {v} carries both colors {a} and {b}; it is not a path end")
    path = _invert(ix, x, a if has_a else b, b if has_a else a)
    ids, lc, color = c.edge_ids, ix.lc, c.color
    out = []
    for i in path:
        e = ids[i]
        color[e] = lc[i]
        out.append(e)
    return out


def _invert(ix: _Index, x: int, first: int, second: int) -> list[int]:
    # Walk from local vertex x taking `first`, then `second`, alternately.
    lu, lv, lc = ix.lu, ix.lv, ix.lc
    get, put, drop = ix.get, ix.put, ix.drop
    path = []
    cur, want, other = x, first, second
    while True:
        i = get(cur, want)
        if i == -1:
            break
        path.append(i)
        a = lu[i]
        cur = lv[i] if a == cur else a
        want, other = other, want
    for i in path:
        k = lc[i]
        drop(lu[i], k)
        drop(lv[i], k)
    for i in path:
        k = second if lc[i] == first else first
        lc[i] = k
        put(lu[i], k, i)
        put(lv[i], k, i)
    return path


def vizing_color(g: GraphLike, debug: bool = False) -> Coloring:
    """Proper edge-coloring of ``g`` with declared palette ``max_degree(g) + 1``.

    Edges are colored in ascending id order.  An edge ``(u, v)`` takes the
    smallest color free at both ends when there is one, and otherwise goes
    through a fan centered at ``u``.  An empty edge set gets palette 0.  With
    ``debug`` the color index is recounted after every edge.
    """
    root, ids = as_view(g)
    color = [0] * root.m
    lc, palette = fan_coloring(root, ids, debug)
    for e, k in zip(ids, lc):
        color[e] = k
    return Coloring(root, color, palette, ids)


def fan_coloring(root: Graph, ids: Sequence[int], debug: bool = False) -> tuple[list[int], int]:
    """Colors for the edges ``ids`` of ``root`` (aligned with ``ids``) and the palette ``Delta + 1``."""
    if not len(ids):
        return [], 0
    _, lu, lv, deg = local_ends(root, ids)
    ix = _Index(lu, lv, deg.tolist())
    base, occ, held, lc = ix.base, ix.occ, ix.held, ix.lc
    find = occ.find
    for i, u, v in zip(range(len(lu)), lu, lv):
        # Scan the colors free at v for one also free at u.  Colors past u's
        # slot range are skipped, so the fan handles those cases.
        bu, tu, bv, tv = base[u], base[u + 1], base[v], base[v + 1]
        q = find(0, bv + 1, tv)
        while q != -1:
            p = bu + q - bv
            if p >= tu or occ[p]:
                q = find(0, q + 1, tv)
                continue
            lc[i] = q - bv
            occ[p] = occ[q] = 1
            held[p] = held[q] = i
            break
        else:
            _color_edge(ix, i)
        if debug:
            ix.check()
    return lc, int(deg.max()) + 1


def _color_edge(ix: _Index, i: int) -> None:
    lu, lv, base, occ, held = ix.lu, ix.lv, ix.base, ix.occ, ix.held
    find = occ.find
    u = lu[i]
    f = lv[i]
    bu, top = base[u], base[u + 1]

    # Fan around u: fan[j+1] is reached through the color missing at fan[j].
    fan = [f]
    fan_edges = [i]
    pos = {f: 0}
    while True:
        bf = base[f]
        d = find(0, bf + 1, base[f + 1]) - bf
        p = bu + d
        if p < top:
            w_edge = held[p] if occ[p] else -1
        else:
            w_edge = ix.high.get(d * ix.nv + u, -1)
        if w_edge == -1:
            _rotate(ix, u, fan, fan_edges, len(fan) - 1, d)
            return
        a = lu[w_edge]
        w = lv[w_edge] if a == u else a
        if w in pos:
            break
        pos[w] = len(fan)
        fan.append(w)
        fan_edges.append(w_edge)
        f = w

    # d is missing at the fan tip and at fan[j], and held by (u, fan[j+1]).
    j = pos[w] - 1
    _invert(ix, u, d, ix.free(u))
    t = j if ix.get(fan[j], d) == -1 else len(fan) - 1
    _rotate(ix, u, fan, fan_edges, t, d)


def _rotate(ix: _Index, u: int, fan: list[int], fan_edges: list[int], t: int, d: int) -> None:
    # Shift colors down the fan prefix fan[0..t], then give (u, fan[t]) color d.
    # Colors on the fan move between edges at u, so u's slots just get rewritten.
    lc, base, occ, held = ix.lc, ix.base, ix.occ, ix.held
    bu, top = base[u], base[u + 1]
    for j in range(t):
        e_cur, e_next = fan_edges[j], fan_edges[j + 1]
        k = lc[e_next]
        x, y = fan[j], fan[j + 1]
        p = base[y] + k
        if p < base[y + 1]:
            occ[p] = 0
        else:
            ix.drop(y, k)
        lc[e_cur] = k
        if bu + k < top:
            held[bu + k] = e_cur
        else:
            ix.put(u, k, e_cur)
        p = base[x] + k
        if p < base[x + 1]:
            occ[p] = 1
            held[p] = e_cur
        else:
            ix.put(x, k, e_cur)
    e_last = fan_edges[t]
    lc[e_last] = d
    ix.put(u, d, e_last)
    ix.put(fan[t], d, e_last)
