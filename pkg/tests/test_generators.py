import pytest
from hypothesis import given
from hypothesis import strategies as st

from chroma import GenSpec, SplitMix64, generate, max_degree, random_tree


def _acyclic(n, pairs):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in pairs:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def test_splitmix_reference_outputs():
    # Published SplitMix64 outputs for seed 0.
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


@given(st.integers(0, 2**64 - 1), st.integers(0, 300), st.integers(1, 2**32 - 1))
def test_block_matches_scalar(seed, count, k):
    a, b = SplitMix64(seed), SplitMix64(seed)
    assert b.block(count).tolist() == [a.next() for _ in range(count)]
    assert a.state == b.state
    assert b.block_below(count, k).tolist() == [a.below(k) for _ in range(count)]
    assert a.state == b.state


def test_block_below_rejects_wide_bounds():
    with pytest.raises(ValueError):
        SplitMix64(1).block_below(3, 2**32)


def _reference_gnm(n, m, seed):
    # One draw pair per attempt, rejecting loops and repeats.
    rng = SplitMix64(seed)
    seen, out = set(), []
    while len(out) < m:
        u, v = rng.below(n), rng.below(n)
        if u == v:
            continue
        u, v = min(u, v), max(u, v)
        if (u, v) not in seen:
            seen.add((u, v))
            out.append((u, v))
    return out


@pytest.mark.parametrize("n, m, seed", [(1000, 10000, 3), (40, 300, 9), (10, 20, 1), (5, 0, 0)])
def test_gnm_matches_one_at_a_time_sampling(n, m, seed):
    assert generate(GenSpec("gnm", n, m, seed)).graph.edges == _reference_gnm(n, m, seed)


def test_dense_gnm_is_simple_and_exact():
    g = generate(GenSpec("gnm", 10, 40, 2)).graph
    assert g.m == 40 and len(set(g.edges)) == 40


def test_complete_k4():
    out = generate(GenSpec("complete", 4))
    assert out.graph.m == 6 and max_degree(out.graph) == 3
    assert out.arboricity_bound == 2


def test_cycle_c5():
    g = generate(GenSpec("cycle", 5)).graph
    assert g.m == 5 and max_degree(g) == 2 and set(g.degree) == {2}


def test_star():
    out = generate(GenSpec("star", 6))
    assert max_degree(out.graph) == 5 and out.arboricity_bound == 1


def test_forest_union_layers_certify_bound():
    out = generate(GenSpec("forest-union", 100, 4, 7))
    g = out.graph
    assert out.arboricity_bound == 4 and len(out.layers) == 4
    assert sorted(e for layer in out.layers for e in layer) == list(range(g.m))
    for layer in out.layers:
        assert _acyclic(g.n, [g.edges[e] for e in layer])


@given(st.integers(1, 60), st.integers(0, 2**64 - 1))
def test_random_tree_is_spanning_tree(n, seed):
    edges = random_tree(n, SplitMix64(seed))
    assert len(edges) == n - 1
    assert _acyclic(n, edges)


@given(
    st.sampled_from(["gnm", "forest-union", "cycle", "complete", "star"]),
    st.integers(3, 40),
    st.integers(0, 2**64 - 1),
)
def test_equal_specs_give_equal_graphs(family, n, seed):
    param = {"gnm": n, "forest-union": 3}.get(family)
    spec = GenSpec(family, n, param, seed)
    assert generate(spec).graph.edges == generate(spec).graph.edges


@pytest.mark.parametrize(
    "spec",
    [
        GenSpec("grid", 4),
        GenSpec("gnm", 0, 0),
        GenSpec("gnm", 4, 7),
        GenSpec("gnm", 4, None),
        GenSpec("forest-union", 5, 0),
        GenSpec("cycle", 2),
        GenSpec("cycle", 5, 6),
    ],
)
def test_inconsistent_specs_rejected(spec):
    with pytest.raises(ValueError):
        generate(spec)
