"""Recursive split-and-color edge colorings.

``edge_coloring`` splits with Euler degree splitting, ``oriented_edge_coloring``
with AD-path oriented splitting.  After ``h`` levels each leaf is colored by
Vizing fans and the leaf palettes are stacked disjointly, side 1 before side 2.
With leaves of maximum degree at most ``Delta / 2**h + 2`` this uses at most
``Delta + 3 * 2**h`` colors.

``color_with_epsilon`` picks ``h = max(floor(log2(eps * scale / 3)), 0)``, with
``scale`` equal to Delta or to the arboricity estimate, so that the surplus
``3 * 2**h`` stays within ``eps * scale``.
"""

from __future__ import annotations

import math
import warnings
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Union

from .adsplit import oriented_degree_split
from .euler import EdgePartition, degree_split
from .graph import Graph, GraphLike, Orientation, Subgraph, as_view, max_degree
from .orient import forests_decomposition_orientation
from .vizing import Coloring, fan_coloring

EpsilonLike = Union[str, int, float, Fraction]
MODES = ("delta", "arboricity")


@dataclass
class TraceNode:
    level: int
    m: int
    delta: int
    edge_ids: Sequence[int]
    parent: int = -1
    max_in: int | None = None
    max_out: int | None = None


@dataclass
class RecursionTrace:
    """Every subgraph the recursion visited, parents before children.

    ``mode`` is ``"delta"`` for undirected splitting, ``"oriented"`` for an
    arbitrary orientation and ``"arboricity"`` when the orientation came from
    minimum-degree peeling (``alpha_hat`` is then set).
    """

    mode: str
    h: int
    nodes: list[TraceNode] = field(default_factory=list)
    orientation: Orientation | None = None
    alpha_hat: int | None = None

    def children(self, i: int) -> list[int]:
        return [j for j, node in enumerate(self.nodes) if node.parent == i]

    def to_lines(self) -> list[str]:
        out = []
        for node in self.nodes:
            line = f"node {node.level} {node.m} {node.delta}"
            if node.max_in is not None:
                line += f" {node.max_in} {node.max_out}"
            out.append(line)
        return out


@dataclass(frozen=True)
class TradeoffParams:
    epsilon: Fraction
    h: int
    mode: str
    delta: int
    alpha_hat: int | None = None

    @property
    def bound(self) -> int:
        """Palette guarantee: ``ceil((1+eps)*Delta)`` or ``Delta + ceil(eps*alpha_hat)``."""
        if self.mode == "delta":
            return math.ceil((1 + self.epsilon) * self.delta)
        return self.delta + math.ceil(self.epsilon * self.alpha_hat)


class ColoringRun(NamedTuple):
    coloring: Coloring
    trace: RecursionTrace
    params: TradeoffParams | None = None


def parse_epsilon(eps: EpsilonLike) -> Fraction:
    """Exact rational from ``"p/q"``, a decimal string, an int or a float (via its repr)."""
    if isinstance(eps, Fraction):
        return eps
    if isinstance(eps, float):
        return Fraction(repr(eps))
    try:
        return Fraction(str(eps).strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse epsilon {eps!r}") from None


def _floor_log2(x: Fraction | int) -> int:
    # Largest h with 2**h <= x, for x >= 1.
    return (x.numerator // x.denominator).bit_length() - 1 if isinstance(x, Fraction) else int(x).bit_length() - 1


def compute_h(epsilon: EpsilonLike, scale: int, mode: str = "delta") -> int:
    """``max(floor(log2(epsilon * scale / 3)), 0)``, computed exactly.

    Requires ``1/scale <= epsilon < 1``; ``scale`` is Delta in delta mode and
    the arboricity (estimate) in arboricity mode.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    eps = parse_epsilon(epsilon)
    if scale < 1:
        raise ValueError(f"scale must be positive, got {scale}")
    if not (Fraction(1, scale) <= eps < 1):
        raise ValueError(f"epsilon {eps} outside [1/{scale}, 1)")
    x = eps * scale / 3
    return _floor_log2(x) if x >= 1 else 0


def _clamp_h(h: int, scale: int, what: str) -> int:
    if not isinstance(h, int) or h < 0:
        raise ValueError(f"recursion depth must be a non-negative integer, got {h!r}")
    top = _floor_log2(scale) if scale >= 1 else 0
    if h > top:
        warnings.warn(f"h={h} exceeds floor(log2 {what})={top}; clamping", stacklevel=3)
        return top
    return h


def _run(
    root: Graph,
    ids: Sequence[int],
    h: int,
    split: Callable[[Subgraph], EdgePartition],
    trace: RecursionTrace,
) -> Coloring:
    fwd = trace.orientation.forward if trace.orientation is not None else None
    eu, ev = root.eu, root.ev
    leaves: list[tuple[Subgraph, int]] = []
    stack: list[tuple[Sequence[int], int, int]] = [(ids, 0, -1)]
    while stack:
        eids, level, parent = stack.pop()
        sub = Subgraph(root, eids, level)
        delta = max_degree(sub)
        node = TraceNode(level, len(eids), delta, eids, parent)
        if fwd is not None:
            indeg: dict[int, int] = {}
            outdeg: dict[int, int] = {}
            for e in eids:
                s, t = (eu[e], ev[e]) if fwd[e] else (ev[e], eu[e])
                outdeg[s] = outdeg.get(s, 0) + 1
                indeg[t] = indeg.get(t, 0) + 1
            node.max_in = max(indeg.values(), default=0)
            node.max_out = max(outdeg.values(), default=0)
        idx = len(trace.nodes)
        trace.nodes.append(node)
        if level == h or not eids:
            leaves.append((sub, delta))
            continue
        part = split(sub)
        stack.append((part.side2, level + 1, idx))
        stack.append((part.side1, level + 1, idx))

    out = [0] * root.m
    offset = 0
    for sub, delta in leaves:
        if not sub.edge_ids:
            continue
        col, palette = fan_coloring(root, sub.edge_ids)
        for e, k in zip(sub.edge_ids, col):
            out[e] = k + offset
        offset += palette
    return Coloring(root, out, offset, ids)


def edge_coloring(g: GraphLike, h: int) -> ColoringRun:
    """Color ``g`` with at most ``Delta + 3 * 2**h`` colors by ``h`` levels of Euler splitting.

    ``h`` above ``floor(log2 Delta)`` is clamped with a warning.
    """
    root, ids = as_view(g)
    h = _clamp_h(h, max_degree(g), "Delta")
    trace = RecursionTrace("delta", h)
    return ColoringRun(_run(root, ids, h, degree_split, trace), trace)


def oriented_edge_coloring(g: GraphLike, mu: Orientation, h: int) -> ColoringRun:
    """Like :func:`edge_coloring` but splitting with AD paths under the fixed orientation ``mu``."""
    root, ids = as_view(g)
    h = _clamp_h(h, max_degree(g), "Delta")
    trace = RecursionTrace("oriented", h, orientation=mu)
    return ColoringRun(_run(root, ids, h, lambda sub: oriented_degree_split(sub, mu), trace), trace)


def arboricity_edge_coloring(g: Graph, h: int) -> ColoringRun:
    """Peel a low-outdegree orientation, then run the oriented recursion to depth ``h``.

    ``h`` above ``floor(log2 alpha_hat)`` is clamped with a warning.  With
    ``h = 0`` this is a single Vizing pass using ``Delta + 1`` colors.
    """
    peel = forests_decomposition_orientation(g)
    alpha_hat = peel.alpha_hat
    h = _clamp_h(h, alpha_hat, "alpha_hat")
    return _arboricity_run(g, peel.orientation, alpha_hat, h)


def _arboricity_run(g: Graph, mu: Orientation, alpha_hat: int, h: int) -> ColoringRun:
    trace = RecursionTrace("arboricity", h, orientation=mu, alpha_hat=alpha_hat)
    coloring = _run(g, range(g.m), h, lambda sub: oriented_degree_split(sub, mu), trace)
    return ColoringRun(coloring, trace)


def color_with_epsilon(g: Graph, epsilon: EpsilonLike, mode: str = "delta") -> ColoringRun:
    """Color with at most ``(1+eps)*Delta`` (delta mode) or ``Delta + eps*alpha`` colors.

    When ``eps`` is below ``1/scale`` the depth drops to 0 and the result is a
    plain ``Delta + 1`` coloring.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    eps = parse_epsilon(epsilon)
    if not 0 < eps < 1:
        raise ValueError(f"epsilon {eps} outside (0, 1)")
    if g.m == 0:
        raise ValueError("graph has no edges")
    delta = max_degree(g)
    if mode == "delta":
        h = compute_h(eps, delta, mode) if eps * delta >= 1 else 0
        run = edge_coloring(g, h)
        return ColoringRun(run.coloring, run.trace, TradeoffParams(eps, h, mode, delta))
    peel = forests_decomposition_orientation(g)
    alpha_hat = peel.alpha_hat
    h = compute_h(eps, alpha_hat, mode) if eps * alpha_hat >= 1 else 0
    run = _arboricity_run(g, peel.orientation, alpha_hat, h)
    return ColoringRun(run.coloring, run.trace, TradeoffParams(eps, h, mode, delta, alpha_hat))
