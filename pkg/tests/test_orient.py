import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chroma import (
    GenSpec,
    arboricity_estimate,
    build_graph,
    degeneracy,
    forests_decomposition_orientation,
    generate,
)

from conftest import graphs


def naive_peel(g):
    """Repeatedly remove the lowest-id vertex of minimum remaining degree."""
    alive = set(range(g.n))
    deg = list(g.degree)
    order, at_peel = [], [0] * g.n
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        order.append(v)
        at_peel[v] = deg[v]
        alive.remove(v)
        for _, u in g.adjacency[v]:
            if u in alive:
                deg[u] -= 1
    return order, at_peel


def kahn_acyclic(g, mu):
    indeg = [mu.indeg(v) for v in range(g.n)]
    ready = [v for v in range(g.n) if indeg[v] == 0]
    count = 0
    while ready:
        v = ready.pop()
        count += 1
        for e in mu.out_list[v]:
            w = mu.target(e)
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return count == g.n


def forest_labels_acyclic(g, mu):
    classes = {}
    for v in range(g.n):
        for k, e in enumerate(mu.out_list[v], 1):
            classes.setdefault(k, []).append((g.eu[e], g.ev[e]))
    for pairs in classes.values():
        parent = list(range(g.n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        for u, v in pairs:
            a, b = find(u), find(v)
            if a == b:
                return False
            parent[a] = b
    return True


def test_path_p3():
    g = build_graph(3, [(0, 1), (1, 2)])
    res = forests_decomposition_orientation(g)
    assert res.order == [0, 1, 2]
    assert all(res.orientation.outdeg(v) <= 1 for v in range(3))


def test_k4(k4):
    res = forests_decomposition_orientation(k4)
    mu = res.orientation
    assert max(mu.outdeg(v) for v in range(4)) == 3 <= 4
    assert kahn_acyclic(k4, mu)
    assert res.degeneracy == 3


def test_empty_graph():
    g = build_graph(3, [])
    res = forests_decomposition_orientation(g)
    assert res.orientation.forward == [] and res.degeneracy == 0
    with pytest.raises(ValueError):
        arboricity_estimate(g)


def test_degeneracy_examples(k4):
    tree = build_graph(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)])
    c5 = generate(GenSpec("cycle", 5)).graph
    assert degeneracy(tree) == 1
    assert degeneracy(k4) == 3
    assert degeneracy(c5) == 2
    assert naive_peel(c5)[1] == forests_decomposition_orientation(c5).peel_degree


def test_arboricity_estimates(k4):
    tree = build_graph(4, [(0, 1), (1, 2), (1, 3)])
    c5 = generate(GenSpec("cycle", 5)).graph
    # Exact arboricities: K4 ceil(6/3) = 2, C5 ceil(5/4) = 2, trees 1.
    assert arboricity_estimate(k4) == 2
    assert arboricity_estimate(tree) == 1
    assert arboricity_estimate(c5) == 2


def _exact_arboricity(g):
    best = 1 if g.m else 0
    for r in range(2, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            s = set(sub)
            inside = sum(1 for u, v in g.edges if u in s and v in s)
            best = max(best, -(-inside // (r - 1)))
    return best


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_estimate_never_exceeds_true_arboricity(g):
    if g.m:
        alpha = _exact_arboricity(g)
        assert 1 <= arboricity_estimate(g) <= alpha
        assert degeneracy(g) <= 2 * alpha - 1


@settings(max_examples=300)
@given(graphs(max_n=25, max_m=200))
def test_bucket_peel_matches_naive_scan(g):
    res = forests_decomposition_orientation(g)
    order, at_peel = naive_peel(g)
    assert res.order == order
    assert res.peel_degree == at_peel


@given(graphs(max_n=20))
def test_orientation_properties(g):
    res = forests_decomposition_orientation(g)
    mu = res.orientation
    rank = {v: i for i, v in enumerate(res.order)}
    for e in range(g.m):
        # Edges point away from whichever endpoint was peeled first.
        assert rank[mu.source(e)] < rank[mu.target(e)]
    for v in range(g.n):
        assert mu.outdeg(v) == res.peel_degree[v] <= res.degeneracy
    assert kahn_acyclic(g, mu)
    assert forest_labels_acyclic(g, mu)


@settings(max_examples=20)
@given(st.integers(2, 80), st.integers(1, 6), st.integers(0, 2**64 - 1))
def test_forest_union_outdegree_within_twice_k(n, k, seed):
    out = generate(GenSpec("forest-union", n, k, seed))
    res = forests_decomposition_orientation(out.graph)
    assert max(res.peel_degree) <= 2 * k
    assert res.orientation.max_outdeg() <= 2 * k
