import copy
import dataclasses

import pytest
from hypothesis import given, settings

from chroma import (
    INCOMING,
    OUTGOING,
    ADDecomposition,
    ADPath,
    Coloring,
    EdgePartition,
    GenSpec,
    Orientation,
    ad_paths_decomposition,
    arboricity_edge_coloring,
    build_graph,
    check_ad_decomposition,
    check_discrepancy,
    check_orientation,
    check_palette,
    check_proper,
    check_trace,
    degree_split,
    edge_coloring,
    forests_decomposition_orientation,
    generate,
    oriented_degree_split,
    oriented_edge_coloring,
)

from conftest import graphs, is_proper


def test_proper_k3(k3):
    assert check_proper(k3, Coloring(k3, [1, 2, 3], 3))
    bad = check_proper(k3, Coloring(k3, [1, 1, 2], 3))
    assert not bad and bad.witness == (0, 1)
    assert bad.line().startswith("FAIL proper")


def test_proper_empty():
    g = build_graph(2, [])
    assert check_proper(g, Coloring(g, [], 0))


def test_proper_reports_first_pair_in_edge_order():
    # Edges 2,3 clash at vertex 4 and edges 0,4 at vertex 0; (0, 4) comes first.
    g = build_graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 5)])
    c = Coloring(g, [7, 1, 2, 2, 7], 7)
    assert check_proper(g, c).witness == (0, 4)


def test_proper_uncovered_edge_raises(k3):
    with pytest.raises(ValueError, match="not colored"):
        check_proper(k3, Coloring(k3, [1, 0, 2], 3))


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_proper_agrees_with_brute_force(g):
    import random

    rng = random.Random(g.m * 31 + g.n)
    col = [rng.randint(1, 3) for _ in range(g.m)]
    result = check_proper(g, Coloring(g, col, 3))
    assert bool(result) == is_proper(g, col, range(g.m))
    if not result:
        pairs = [
            (a, b)
            for a in range(g.m)
            for b in range(a + 1, g.m)
            if col[a] == col[b] and set(g.endpoints(a)) & set(g.endpoints(b))
        ]
        assert result.witness == min(pairs)


def test_palette_examples(k4):
    assert check_palette(Coloring(k4, [1, 2, 3, 3, 2, 4], 4), 4)
    res = check_palette(Coloring(k4, [1, 2, 3, 3, 2, 5], 5), 4)
    assert not res and res.witness == (5, 4)
    g = build_graph(1, [])
    assert check_palette(Coloring(g, [], 0), 0)


def test_discrepancy_on_splitter_outputs():
    g = generate(GenSpec("gnm", 200, 1500, 8)).graph
    assert check_discrepancy(g, degree_split(g), 2)
    mu = forests_decomposition_orientation(g).orientation
    assert check_discrepancy(g, oriented_degree_split(g, mu), 1, oriented=True)


def test_discrepancy_all_ones_at_degree_four():
    g = build_graph(5, [(0, i) for i in range(1, 5)])
    res = check_discrepancy(g, EdgePartition(g, range(4), [1, 1, 1, 1]), 2)
    assert not res and res.witness == (0, 4)


def test_discrepancy_ignores_cached_counts(c4):
    p = EdgePartition(c4, range(4), [1, 1, 1, 1])
    p._counts = {v: [1, 1] for v in range(4)}  # a lying cache
    assert p.max_discrepancy() == 0
    assert not check_discrepancy(c4, p, 1)


def test_oriented_discrepancy_violation():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    mu = Orientation(g, [True, True, True])
    p = oriented_degree_split(g, mu)
    p.labels = [1, 1, 1]
    res = check_discrepancy(g, p, 1, oriented=True)
    assert not res and res.witness == (0, 3, "out")


def test_discrepancy_input_errors(k3):
    with pytest.raises(ValueError):
        check_discrepancy(k3, EdgePartition(k3, [0, 1], [1, -1]), 2)
    with pytest.raises(ValueError):
        check_discrepancy(k3, EdgePartition(k3, [0, 1, 2], [1, 2, 1]), 2)
    with pytest.raises(ValueError):
        check_discrepancy(k3, degree_split(k3), 1, oriented=True)


def test_orientation_checks(k4, k3):
    mu = forests_decomposition_orientation(k4).orientation
    assert check_orientation(k4, mu, 4)
    res = check_orientation(k4, mu, 2)
    assert not res and res.witness == (0, 3)
    # In a simple graph the shortest directed cycle is a triangle.
    cyc = Orientation.from_arcs(k3, [(0, 1), (1, 2), (2, 0)])
    res = check_orientation(k3, cyc, 5)
    assert not res and "cycle" in res.detail
    assert check_orientation(build_graph(2, []), Orientation(build_graph(2, []), []), 0)


@given(graphs(max_n=14))
def test_peeled_orientations_pass(g):
    res = forests_decomposition_orientation(g)
    assert check_orientation(g, res.orientation, max(res.peel_degree, default=0))


def _figure3():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    return g, Orientation.from_arcs(g, [(0, 1), (2, 1), (2, 0)])


def test_ad_decomposition_output_passes():
    g, mu = _figure3()
    assert check_ad_decomposition(g, mu, ad_paths_decomposition(g, mu))


def test_ad_singletons_are_not_maximal():
    g, mu = _figure3()
    paths = [
        ADPath([0, 1], [0], OUTGOING, INCOMING),
        ADPath([2, 1], [1], OUTGOING, INCOMING),
        ADPath([2, 0], [2], OUTGOING, INCOMING),
    ]
    d = ADDecomposition(g, mu, paths, {0: (0, 0), 1: (1, 0), 2: (2, 0)})
    res = check_ad_decomposition(g, mu, d)
    assert not res and "extended" in res.detail


def test_ad_endpoint_bound_on_large_inputs():
    # Above the replay limit only the endpoint bound can catch non-maximal paths.
    g = build_graph(102, [(0, i) for i in range(1, 102)])
    mu = Orientation(g, [True] * 101)
    paths = [ADPath([0, i + 1], [i], OUTGOING, INCOMING) for i in range(101)]
    d = ADDecomposition(g, mu, paths, {i: (i, 0) for i in range(101)})
    res = check_ad_decomposition(g, mu, d)
    assert not res and "outgoing end of paths 0 and 1" in res.detail


def test_ad_empty():
    g = build_graph(3, [])
    mu = Orientation(g, [])
    assert check_ad_decomposition(g, mu, ADDecomposition(g, mu, [], {}))


def test_ad_detects_bad_shapes():
    g = build_graph(3, [(0, 1), (1, 2)])
    mu = Orientation(g, [True, True])
    # 0 -> 1 -> 2 is not alternating.
    d = ADDecomposition(g, mu, [ADPath([0, 1, 2], [0, 1], OUTGOING, INCOMING)], {0: (0, 0), 1: (0, 1)})
    assert "direction" in check_ad_decomposition(g, mu, d).detail
    d = ADDecomposition(g, mu, [ADPath([0, 1], [0], OUTGOING, INCOMING)], {0: (0, 0)})
    assert "no path" in check_ad_decomposition(g, mu, d).detail
    d = ADDecomposition(g, mu, [ADPath([0, 1], [0], INCOMING, INCOMING), ADPath([1, 2], [1], OUTGOING, INCOMING)], {})
    assert "roles" in check_ad_decomposition(g, mu, d).detail


def test_trace_valid_and_single_level(k4):
    g = generate(GenSpec("gnm", 300, 3000, 2)).graph
    assert check_trace(edge_coloring(g, 2).trace, g)
    assert check_trace(edge_coloring(k4, 0).trace, k4)


def test_tampered_trace_flags_degree_claim():
    g = generate(GenSpec("gnm", 300, 3000, 2)).graph
    trace = edge_coloring(g, 2).trace
    bad = copy.copy(trace)
    bad.nodes = list(trace.nodes)
    i = next(j for j, node in enumerate(trace.nodes) if node.level == 2)
    bad.nodes[i] = dataclasses.replace(trace.nodes[i], delta=trace.nodes[0].delta)
    res = check_trace(bad, g)
    assert not res
    assert "claim-deg-bound" in res.witness and "trace-mismatch" in res.witness


def test_tampered_trace_flags_edge_claim_and_structure():
    g = generate(GenSpec("gnm", 300, 3000, 2)).graph
    trace = edge_coloring(g, 1).trace
    node = trace.nodes[1]
    trace.nodes[1] = dataclasses.replace(node, edge_ids=node.edge_ids[:10], m=10)
    res = check_trace(trace, g)
    assert "claim-edge-bound" in res.witness and "trace-structure" in res.witness


def test_oriented_lemma_violation_is_flagged():
    g = build_graph(9, [(0, i) for i in range(1, 9)])
    mu = Orientation(g, [True] * 8)
    trace = oriented_edge_coloring(g, mu, 1).trace
    # Move all edges into one child: the center's outdegree no longer halves.
    a, b = trace.children(0)
    trace.nodes[a] = dataclasses.replace(trace.nodes[a], edge_ids=list(range(8)), m=8, delta=8, max_out=8)
    trace.nodes[b] = dataclasses.replace(trace.nodes[b], edge_ids=[], m=0, delta=0, max_in=0, max_out=0)
    res = check_trace(trace, g)
    assert "lemma-oriented-degree" in res.witness and "corollary-deg-bound" in res.witness


def test_arboricity_witness_checked():
    g = generate(GenSpec("forest-union", 200, 6, 5)).graph
    trace = arboricity_edge_coloring(g, 2).trace
    assert check_trace(trace, g)
    trace.alpha_hat = 1
    res = check_trace(trace, g)
    assert "lemma-arboricity" in res.witness
