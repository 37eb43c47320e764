import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from antiresolve.errors import GraphError
from antiresolve.graph import (
    INF,
    adjacency_value,
    build_graph,
    classify_vertices,
    complete_graph,
    distance,
    empty_graph,
    induced_subgraph,
    path_graph,
    star_graph,
)
from antiresolve.io import fixtures

import oracles
from strategies import graphs


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.degrees() == [1, 2, 1]
    assert g.sorted_edges() == [(0, 1), (1, 2)]


def test_build_normalises_orientation():
    assert build_graph(3, [(1, 0)]).edges == frozenset({(0, 1)})


@pytest.mark.parametrize("n, edges, msg", [
    (4, [(0, 1), (1, 0)], "duplicate"),
    (3, [(1, 1)], "self-loop"),
    (3, [(0, 3)], "out of range"),
    (3, [(-1, 2)], "out of range"),
])
def test_build_rejects(n, edges, msg):
    with pytest.raises(GraphError, match=msg):
        build_graph(n, edges)


def test_k5_degrees():
    g = build_graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert g.degrees() == [4] * 5
    assert g.is_complete()


def test_adjacency_value_fig3():
    g = fixtures()["fig3"]
    v, x1, z1 = 0, g.labels.index("x1"), g.labels.index("z1")
    assert adjacency_value(g, v, x1) == 1
    assert adjacency_value(g, v, z1) == 2
    assert adjacency_value(g, 4, 4) == 0


def test_adjacency_value_out_of_range():
    with pytest.raises(GraphError):
        adjacency_value(path_graph(3), 0, 3)


def test_distance_examples():
    g = fixtures()["fig3"]
    assert distance(g, 0, g.labels.index("z1")) == 3
    assert distance(path_graph(3), 0, 2) == 2
    assert distance(empty_graph(2), 0, 1) == INF
    assert distance(path_graph(3), 1, 1) == 0


def test_induced_subgraph_examples():
    sub, mapping = induced_subgraph(complete_graph(5), [1, 3, 4])
    assert sub == complete_graph(3)
    assert mapping == [1, 3, 4]

    sub, _ = induced_subgraph(star_graph(4), [1, 2, 3, 4])
    assert sub.m == 0 and max(sub.degrees()) == 0

    g = fixtures()["fig3"]
    ids = [g.labels.index(x) for x in ("x1", "y1", "z1")]
    sub, mapping = induced_subgraph(g, ids)
    assert sorted(sub.degrees()) == [1, 1, 2]
    assert sub.m == 2


def test_classify_examples():
    rep = classify_vertices(fixtures()["fig4a"])
    assert rep.isolated == {0} and rep.dominant == set()
    assert (rep.min_degree, rep.max_degree) == (0, 1)

    rep = classify_vertices(complete_graph(6))
    assert rep.dominant == set(range(6)) and rep.isolated == set()

    rep = classify_vertices(fixtures()["fig3"])
    assert rep.isolated == rep.dominant == set()
    assert (rep.min_degree, rep.max_degree) == (2, 4)


def test_edit_is_copy_on_write():
    g = path_graph(4)
    h = g.edit(add=[(0, 3)], remove=[(1, 2)])
    assert g.sorted_edges() == [(0, 1), (1, 2), (2, 3)]
    assert h.sorted_edges() == [(0, 1), (0, 3), (2, 3)]


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=24))
def test_adjacency_is_clamped_distance(g):
    for u in range(g.n):
        for v in range(g.n):
            d = distance(g, u, v)
            assert adjacency_value(g, u, v) == (2 if d == INF else min(2, d))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=16))
def test_distance_matches_networkx_and_is_metric(g):
    ref = oracles.all_distances(g)
    for u in range(g.n):
        assert list(g.bfs(u)) == ref[u]
    for u in range(g.n):
        for v in range(g.n):
            assert distance(g, u, v) == distance(g, v, u)
            for w in range(g.n):
                duv, dvw, duw = distance(g, u, v), distance(g, v, w), distance(g, u, w)
                if not math.isinf(duv) and not math.isinf(dvw):
                    assert duw <= duv + dvw


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=14), st.data())
def test_induced_subgraph_properties(g, data):
    assert induced_subgraph(g, range(g.n))[0] == g
    s = data.draw(st.sets(st.integers(0, g.n - 1))) if g.n else set()
    sub, mapping = induced_subgraph(g, s)
    back = {(mapping[a], mapping[b]) for a, b in sub.edges}
    assert back == {(u, v) for u, v in g.edges if u in s and v in s}


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=14))
def test_classify_invariants(g):
    rep = classify_vertices(g)
    deg = g.degrees()
    assert rep.isolated == {v for v in range(g.n) if deg[v] == 0}
    assert rep.dominant == {v for v in range(g.n) if deg[v] == g.n - 1}
    if g.n > 1:
        assert not (rep.isolated and rep.dominant)
    assert sum(deg) == 2 * g.m
