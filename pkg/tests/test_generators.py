import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from truncdim import generators as gen
from truncdim.graph import GraphInputError, diameter, is_connected
from truncdim.resolve import check_resolving_set, twin_classes

from oracles import brute_tree_stats, to_nx


def test_cycle_three_is_triangle():
    assert gen.cycle(3) == gen.complete(3)


def test_grid_counts():
    g = gen.grid(4, 3)
    assert (g.n, g.m) == (12, 17)  # s*t vertices, s(t-1)+t(s-1) edges
    for s in range(2, 6):
        for t in range(2, 6):
            gg = gen.grid(s, t)
            assert (gg.n, gg.m) == (s * t, s * (t - 1) + t * (s - 1))


def test_grid_vertex_labeling():
    g = gen.grid(3, 4)
    # (i,j) -> (i-1)*t + (j-1): vertex (2,3) is id 6, adjacent to ids 2,5,7,10
    assert g.adj[6] == (2, 5, 7, 10)


def test_petersen_shape():
    g = gen.petersen()
    assert (g.n, g.m) == (10, 15)
    assert all(g.degree(v) == 3 for v in range(10))
    assert nx.is_isomorphic(to_nx(g), nx.petersen_graph())


def test_wheel_and_fan_hubs():
    w = gen.wheel(6)
    assert w.n == 6 and w.degree(5) == 5
    f = gen.fan(4)
    assert f.n == 5 and f.degree(4) == 4
    assert diameter(w) <= 2 and diameter(f) <= 2


def test_multipartite_small_cases():
    assert gen.complete_multipartite([1, 1, 1]) == gen.complete(3)
    assert nx.is_isomorphic(to_nx(gen.complete_multipartite([2, 2])), nx.cycle_graph(4))
    assert nx.is_isomorphic(to_nx(gen.complete_multipartite([1, 2])), nx.path_graph(3))


def test_spider_families():
    star = gen.spider([1, 1, 1])
    assert nx.is_isomorphic(to_nx(star), nx.star_graph(3))
    s222 = gen.spider([2, 2, 2])
    assert s222.n == 7
    assert brute_tree_stats(s222) == (3, 1, 0)
    s123 = gen.spider([1, 2, 3])
    dm = nx.single_source_shortest_path_length(to_nx(s123), 0)
    leaf_dists = sorted(dm[v] for v in range(s123.n) if s123.degree(v) == 1)
    assert leaf_dists == [1, 2, 3]


def test_caterpillar_families():
    assert nx.is_isomorphic(to_nx(gen.leaf_cluster_caterpillar(1, 3)), nx.star_graph(3))
    c23 = gen.leaf_cluster_caterpillar(2, 3)
    assert c23.n == 8
    assert brute_tree_stats(c23) == (6, 2, 0)
    sigma, ex, _ = brute_tree_stats(gen.leaf_cluster_caterpillar(3, 4))
    assert sigma - ex == 9


def test_subdivided_star():
    assert nx.is_isomorphic(to_nx(gen.subdivided_star(3, 0)), nx.star_graph(3))
    assert gen.subdivided_star(4, 2).n == 7
    assert gen.subdivided_star(4, 4).n == 9  # constructs fine; a predicate rejects it later


def test_blowup():
    c4 = gen.blowup(gen.complete(2), [("independent", 2), ("independent", 2)])
    assert nx.is_isomorphic(to_nx(c4), nx.cycle_graph(4))
    k4 = gen.blowup(gen.complete(2), [("clique", 2), ("clique", 2)])
    assert all(k4.has_edge(a, b) for a in range(4) for b in range(a + 1, 4))
    mixed = gen.blowup(gen.path(3), [("clique", 2), ("independent", 3), ("clique", 2)])
    classes = twin_classes(mixed)
    assert all(len(c) >= 2 for c in classes)
    # twin classes refine the assignment blocks
    blocks = [set(range(0, 2)), set(range(2, 5)), set(range(5, 7))]
    for cls in classes:
        assert any(set(cls) <= b for b in blocks)


def test_gap_construction_m3():
    h, g, emb = gen.gap_construction(3)
    assert h.n == 6 and g.n == 9
    assert diameter(g) == 2
    assert all(g.has_edge(emb[a], emb[b]) for a in range(6) for b in range(a + 1, 6))
    # the apex vertices resolve the host (diameter 2, so truncation at 1 is inert)
    assert check_resolving_set(g, 1, {6, 7, 8})


def test_gap_construction_m4_counts():
    h, g, _ = gen.gap_construction(4)
    assert h.n == 10 and g.n == 14
    # each apex is adjacent to exactly m vertices of the clique
    assert all(g.degree(v) == 4 for v in range(10, 14))


def test_random_tree_contract():
    t = gen.random_tree(10, 7)
    assert t.m == 9
    assert nx.is_tree(to_nx(t))
    assert t == gen.random_tree(10, 7)
    assert t != gen.random_tree(10, 8)


def test_random_connected_contract():
    g = gen.random_connected(8, 0.3, 1)
    assert is_connected(g)
    assert g == gen.random_connected(8, 0.3, 1)


@pytest.mark.parametrize(
    "build",
    [
        lambda: gen.path(0),
        lambda: gen.cycle(2),
        lambda: gen.wheel(4),
        lambda: gen.fan(0),
        lambda: gen.complete_multipartite([3]),
        lambda: gen.complete_multipartite([0, 2]),
        lambda: gen.spider([1, 1]),
        lambda: gen.spider([1, 0, 1]),
        lambda: gen.leaf_cluster_caterpillar(2, 2),
        lambda: gen.leaf_cluster_caterpillar(0, 3),
        lambda: gen.subdivided_star(2, 1),
        lambda: gen.subdivided_star(3, 4),
        lambda: gen.blowup(gen.complete(2), [("clique", 1), ("clique", 2)]),
        lambda: gen.blowup(gen.complete(2), [("ring", 2), ("clique", 2)]),
        lambda: gen.gap_construction(2),
        lambda: gen.random_tree(1, 0),
        lambda: gen.random_connected(5, 0.0, 0),
    ],
)
def test_out_of_range_parameters_rejected(build):
    with pytest.raises(GraphInputError):
        build()


@given(st.integers(2, 20), st.integers(0, 2**63 - 1))
def test_random_tree_is_always_a_tree(n, seed):
    t = gen.random_tree(n, seed)
    assert t.n == n and t.m == n - 1 and is_connected(t)
