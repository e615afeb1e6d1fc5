"""Shared strategies and independent oracles for the test suite."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from chroma import Graph, Orientation, build_graph


@st.composite
def graphs(draw, max_n: int = 12, max_m: int | None = None) -> Graph:
    """Random simple graph: a subset of the pairs on ``n`` vertices, in random order."""
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m) if pairs else st.just([]))
    flips = draw(st.lists(st.booleans(), min_size=len(chosen), max_size=len(chosen)))
    return build_graph(n, [(v, u) if f else (u, v) for (u, v), f in zip(chosen, flips)])


@st.composite
def oriented_graphs(draw, max_n: int = 12) -> tuple[Graph, Orientation]:
    g = draw(graphs(max_n=max_n))
    forward = draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
    return g, Orientation(g, forward)


def vertex_degrees(g: Graph, ids) -> dict[int, int]:
    deg: dict[int, int] = {}
    for e in ids:
        for x in (g.eu[e], g.ev[e]):
            deg[x] = deg.get(x, 0) + 1
    return deg


def is_proper(g: Graph, color, ids) -> bool:
    seen = set()
    for e in ids:
        for x in (g.eu[e], g.ev[e]):
            if (x, color[e]) in seen:
                return False
            seen.add((x, color[e]))
    return True


def connected_graphs(n: int):
    """Every connected labeled simple graph on vertices ``0..n-1`` (n >= 2)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1, 1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in edges:
            parent[find(u)] = find(v)
        if len({find(x) for x in range(n)}) == 1:
            yield build_graph(n, edges)


@pytest.fixture
def k3() -> Graph:
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def c4() -> Graph:
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def k4() -> Graph:
    return build_graph(4, list(itertools.combinations(range(4), 2)))


# Acceptance summary -------------------------------------------------------

ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: int(k.split()[0])):
        ok, note = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}: {note}")
