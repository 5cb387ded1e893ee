import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphroots.graph import (
    Graph,
    LabeledInstance,
    bfs_layering,
    components,
    diameter,
    distances_from,
    is_connected,
    is_square_root,
    max_degree,
    square,
)
from oracles import nx_square_edges, to_nx


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


@given(graphs())
def test_square_matches_networkx(g):
    assert set(square(g).edges()) == nx_square_edges(g)


@given(graphs())
def test_every_graph_is_a_root_of_its_square(g):
    assert is_square_root(g, square(g))


@given(graphs())
def test_components_match_networkx(g):
    ours = components(g)
    theirs = sorted((frozenset(c) for c in nx.connected_components(to_nx(g))), key=min)
    assert ours == theirs
    assert is_connected(g) == (len(ours) <= 1)


@given(graphs(max_n=9))
def test_distances_and_diameter(g):
    gx = to_nx(g)
    for s in range(g.n):
        ref = nx.single_source_shortest_path_length(gx, s)
        assert distances_from(g, s) == [ref.get(v, -1) for v in range(g.n)]
    if g.n and is_connected(g):
        assert diameter(g) == nx.diameter(gx)
    elif g.n:
        with pytest.raises(ValueError):
            diameter(g)


@settings(max_examples=60)
@given(graphs(max_n=12), st.data())
def test_bfs_layering_relations(g, data):
    if g.n == 0:
        return
    s = data.draw(st.integers(0, g.n - 1))
    lay = bfs_layering(g, s)
    dist = distances_from(g, s)
    assert lay.depth == max(dist)
    for v in range(g.n):
        assert lay.level_of[v] == dist[v]
        assert set(lay.parents[v]) == {u for u in g.neighbors(v) if dist[u] == dist[v] - 1 and dist[v] >= 0}
        if dist[v] > 0:
            assert lay.tree_parent[v] == min(lay.parents[v])
        else:
            assert lay.tree_parent[v] == -1
    for v in range(g.n):
        for c in lay.tree_children(v):
            assert lay.tree_parent[c] == v
        desc = set(lay.tree_descendants(v))
        assert all(dist[d] > dist[v] for d in desc)


def test_level_past_end_is_empty():
    lay = bfs_layering(Graph(3, [(0, 1), (1, 2)]), 0)
    assert lay.level(3) == frozenset() and lay.level(-1) == frozenset()


def test_ladder_square_degree_by_hand():
    # u1..u3 and v1..v3 with rungs: the middle vertices see everything but their far corner.
    h = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])
    assert max_degree(square(h)) == 5


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(-1)
    with pytest.raises(ValueError):
        Graph.from_adjacency([0b10, 0b00])


def test_from_adjacency_round_trip():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(0, 9)
        g = Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.4])
        assert Graph.from_adjacency(g.adjacency) == g
        assert hash(Graph.from_adjacency(g.adjacency)) == hash(g)


def test_induced_subgraph_relabels_in_order():
    g = Graph(5, [(0, 4), (2, 4), (1, 3)])
    sub, mapping = g.induced_subgraph({4, 0, 2})
    assert mapping == [0, 2, 4]
    assert sub.edges() == ((0, 2), (1, 2))


def test_is_square_root_needs_matching_vertex_count():
    with pytest.raises(ValueError):
        is_square_root(Graph(2, [(0, 1)]), Graph(3))


def test_labeled_instance_canonicalizes_and_validates():
    g = Graph(3, [(0, 1), (1, 2)])
    inst = LabeledInstance(g, required=[(1, 0)], forbidden=[(2, 1)])
    assert inst.required == {(0, 1)} and inst.forbidden == {(1, 2)}
    with pytest.raises(ValueError):
        LabeledInstance(g, required=[(0, 2)])


def test_square_examples():
    from graphroots.generators import complete, cycle, path
    assert square(path(3)) == complete(3)
    assert square(Graph(1)) == Graph(1)
    c7 = square(cycle(7))
    assert set(c7.edges()) == {tuple(sorted((i, (i + d) % 7))) for i in range(7) for d in (1, 2)}
    assert max_degree(c7) == 4
    assert is_square_root(cycle(7), c7)
    assert is_square_root(complete(3), complete(3))
    assert not is_square_root(path(3), path(3))


def test_layering_examples():
    from graphroots.generators import complete, cycle, ladder
    lay = bfs_layering(cycle(6), 0)
    assert lay.levels == (frozenset({0}), frozenset({1, 5}), frozenset({2, 4}), frozenset({3}))
    assert bfs_layering(complete(3), 0).levels == (frozenset({0}), frozenset({1, 2}))
    assert bfs_layering(ladder(3), 0).depth == 3


def test_metric_examples():
    from graphroots.generators import cycle
    assert diameter(cycle(7)) == 3
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert components(two_triangles) == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]


@given(graphs(max_n=9), st.data())
def test_square_is_monotone_and_contains_the_graph(g, data):
    extra = [e for e in data.draw(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)), max_size=4))
             if e[0] != e[1] and max(e) < g.n]
    bigger = Graph(g.n, set(g.edges()) | {tuple(sorted(e)) for e in extra})
    assert set(g.edges()) <= set(square(g).edges())
    assert set(square(g).edges()) <= set(square(bigger).edges())


@given(graphs(max_n=10))
def test_square_respects_components(g):
    assert components(square(g)) == components(g)
    for comp in components(g):
        sub, _ = g.induced_subgraph(comp)
        sq_sub, _ = square(g).induced_subgraph(comp)
        assert square(sub) == sq_sub


def test_layering_matches_all_pairs_distances_on_larger_graphs():
    rng = random.Random(31)
    for _ in range(100):
        n = rng.randint(2, 50)
        p = rng.uniform(0.02, 0.2)
        g = Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])
        apsp = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        s = rng.randrange(n)
        lay = bfs_layering(g, s)
        for i, level in enumerate(lay.levels):
            assert level == {v for v, d in apsp[s].items() if d == i}
        for u, v in g.edges():
            if lay.level_of[u] >= 0:
                assert abs(lay.level_of[u] - lay.level_of[v]) <= 1
