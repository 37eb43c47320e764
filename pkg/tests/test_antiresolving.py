import random

import pytest
from hypothesis import given, settings

from antiresolve.antiresolving import (
    UNBOUNDED,
    Flavor,
    anonymity_value,
    antiresolving_k,
    class_masks,
    enumerate_bad_sets,
    is_transformation,
    k1_upper_bound,
    k1_value_formula,
    k_adjacency_antidimension,
    k_antidimension,
    partition,
    representation,
)
from antiresolve.errors import PreconditionError
from antiresolve.graph import Graph, complete_graph, empty_graph, mask_to_list, path_graph, star_graph
from antiresolve.io import fixtures, generate_random

import oracles
from strategies import graphs

A, M = Flavor.ADJACENCY, Flavor.METRIC


@pytest.fixture
def fig3():
    return fixtures()["fig3"]


def ids(g, *names):
    return [g.labels.index(x) for x in names]


def test_representation_examples(fig3):
    (y1,) = ids(fig3, "y1")
    (z1,) = ids(fig3, "z1")
    assert representation(fig3, y1, [0], A).coords == (2,)
    assert representation(fig3, z1, [0], M).coords == (3,)
    assert representation(complete_graph(4), 3, [0, 1], A).coords == (1, 1)


def test_representation_rejects_member():
    with pytest.raises(PreconditionError):
        representation(path_graph(3), 0, [0])


def test_partition_fig3_adjacency(fig3):
    part = partition(fig3, [0], A)
    x = set(ids(fig3, "x1", "x2", "x3", "x4"))
    rest = set(range(1, 11)) - x
    assert set(part.classes) == {frozenset(x), frozenset(rest)}
    assert part.k_value == 4
    assert part.representations[part.classes.index(frozenset(x))].coords == (1,)


def test_partition_fig3_metric(fig3):
    part = partition(fig3, [0], M)
    assert sorted(len(c) for c in part.classes) == [2, 4, 4]
    assert part.k_value == 2
    z = frozenset(ids(fig3, "z1", "z2"))
    assert z in part.classes


def test_partition_empty_graph():
    part = partition(empty_graph(5), [0, 1], A)
    assert part.classes == (frozenset({2, 3, 4}),)
    assert part.representations[0].coords == (2, 2)


def test_partition_rejects_full_set():
    with pytest.raises(PreconditionError):
        partition(path_graph(3), [0, 1, 2])


def test_antiresolving_k_examples(fig3):
    assert antiresolving_k(fig3, [0], M) == 2
    assert antiresolving_k(fig3, [0], A) == 4
    for n in range(3, 8):
        for ell in range(1, n):
            assert antiresolving_k(complete_graph(n), range(ell), A) == n - ell


def test_adjacency_antidimension_examples(fig3):
    assert k_adjacency_antidimension(complete_graph(5), 4, 1) == 1
    assert k_antidimension(fig3, 4, 1) == (1, (0,))
    # every singleton of fig3 has value >= 2 (oracle: [4, 2, 2, ...])
    assert k_adjacency_antidimension(fig3, 1, 1) is None


def test_anonymity_value_examples(fig3):
    rep = anonymity_value(complete_graph(5), 1, A)
    assert rep.k == 4 and rep.witness == (0,)
    rep = anonymity_value(fig3, 1, A)
    assert rep.k == 2
    assert antiresolving_k(fig3, rep.witness, A) == 2
    assert anonymity_value(empty_graph(6), 2, A).k == 4


def test_anonymity_value_rejects_ell():
    with pytest.raises(PreconditionError):
        anonymity_value(path_graph(3), 3)
    with pytest.raises(PreconditionError):
        anonymity_value(path_graph(3), 0)


def test_bad_set_examples(fig3):
    assert enumerate_bad_sets(path_graph(3), 1) == [(0,), (2,)]
    assert enumerate_bad_sets(complete_graph(4), 2) == []
    assert enumerate_bad_sets(fig3, 1) == []


def test_transformation_fig2():
    fx = fixtures()
    assert is_transformation(fx["fig2_g1"], fx["fig2_g2"], 2, 1, M).holds
    assert is_transformation(fx["fig2_g1"], fx["fig2_g3"], 2, 1, M).holds
    # the only shared vertex is v, which is 3-antiresolving in the star
    assert antiresolving_k(fx["fig2_g1"], [0], M) == 3
    assert anonymity_value(fx["fig2_g3"], 1, M).k == 1


def test_transformation_counterexample():
    check = is_transformation(path_graph(3), path_graph(3), 2, 1, A)
    assert not check
    assert check.counterexample == (0,)
    assert (check.k_original, check.k_published) == (1, 1)


def test_k1_formula_examples(fig3):
    assert k1_value_formula(fig3) == 2
    assert k1_value_formula(star_graph(4)) == 1
    assert k1_value_formula(fixtures()["fig4a"]) == 1
    assert k1_value_formula(complete_graph(5)) == 4
    assert k1_value_formula(empty_graph(5)) == 4


def test_k1_upper_bound_examples():
    assert k1_upper_bound(Graph(11, [(0, 1)])) == 5
    assert k1_upper_bound(complete_graph(7)) is UNBOUNDED
    assert k1_upper_bound(path_graph(4)) == 1


def test_parallel_matches_serial(fig3):
    g = generate_random(12, 0.4, 3)
    for ell in (1, 2):
        for flavor in (A, M):
            a = anonymity_value(g, ell, flavor, threads=1)
            b = anonymity_value(g, ell, flavor, threads=2)
            assert (a.k, a.witness, a.sets_examined) == (b.k, b.witness, b.sets_examined)


# properties against the group-by oracle

def _corpus(count, max_n, seed):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, max_n)
        yield generate_random(n, rng.choice([0.1, 0.2, 0.3, 0.5, 0.7]), rng.randrange(2**31))


@pytest.mark.parametrize("flavor", ["adjacency", "metric"])
def test_k_exact_against_groupby(flavor):
    rng = random.Random(11)
    for g in _corpus(60, 24, 7):
        dist = oracles.all_distances(g)
        for _ in range(15):
            size = rng.randint(1, min(3, g.n - 1))
            s = tuple(sorted(rng.sample(range(g.n), size)))
            expect = oracles.classes(g, s, flavor, dist)
            got = [frozenset(mask_to_list(m)) for m in class_masks(g, s, flavor)]
            assert sorted(map(sorted, got)) == sorted(map(sorted, expect.values()))
            assert antiresolving_k(g, s, flavor) == min(len(c) for c in expect.values())


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_anonymity_matches_bruteforce(g):
    for ell in range(1, min(3, g.n - 1) + 1):
        for flavor in ("adjacency", "metric"):
            assert anonymity_value(g, ell, flavor).k == oracles.anonymity(g, ell, flavor)
    assert enumerate_bad_sets(g, min(2, g.n - 1)) == oracles.bad_sets(g, min(2, g.n - 1))


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=2, max_n=14))
def test_k1_upper_bound_holds(g):
    if g.is_complete() or g.is_empty():
        return
    assert anonymity_value(g, 1, A).k <= k1_upper_bound(g)


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=2, max_n=14))
def test_k1_formula_matches_bruteforce(g):
    assert k1_value_formula(g) == anonymity_value(g, 1, A).k


def test_k1_formula_all_graphs_n5():
    pairs = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    for bits in range(1 << len(pairs)):
        g = Graph(5, [p for i, p in enumerate(pairs) if bits >> i & 1])
        assert k1_value_formula(g) == oracles.anonymity(g, 1)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=3, max_n=8))
def test_antidimension_consistency(g):
    for ell in (1, 2):
        if ell >= g.n:
            continue
        for flavor in ("adjacency", "metric"):
            ks = [k for k in range(1, g.n) if k_antidimension(g, k, ell, flavor) is not None]
            assert anonymity_value(g, ell, flavor).k == min(ks)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=2, max_n=12))
def test_adjacency_coarsens_metric(g):
    for v in range(g.n):
        metric = [set(mask_to_list(m)) for m in class_masks(g, (v,), M)]
        adj = [set(mask_to_list(m)) for m in class_masks(g, (v,), A)]
        for c in metric:
            assert any(c <= d for d in adj)
        assert antiresolving_k(g, [v], A) >= antiresolving_k(g, [v], M)


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=3, max_n=8), graphs(min_n=1, max_n=8))
def test_anonymous_graph_makes_any_pair_a_transformation(g, g0):
    if g0.n > g.n:
        return
    for ell in (1, 2):
        if ell >= g.n:
            continue
        k = anonymity_value(g, ell, A).k
        assert is_transformation(g0, g, k, ell, A).holds


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=8), graphs(min_n=2, max_n=8))
def test_is_transformation_matches_oracle(g1, g2):
    for k in (2, 3):
        for flavor in ("adjacency", "metric"):
            got = is_transformation(g1, g2, k, 2, flavor)
            ok, witness = oracles.transformation_holds(g1, g2, k, 2, flavor)
            assert got.holds == ok
            assert got.counterexample == witness


def test_closed_forms_full_ell_range():
    for n in range(2, 9):
        for ell in range(1, n):
            assert anonymity_value(complete_graph(n), ell, A).k == n - ell
            assert anonymity_value(empty_graph(n), ell, A).k == n - ell
