import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from matchgeo import (
    EdgeAlreadyPresent,
    InsertionEffect,
    MixedSizes,
    antipodes_of,
    are_adjacent,
    bfs_distance,
    classify_insertion,
    diameter,
    distance,
    eccentricity,
    insert_edge,
    neighbors,
)
from matchgeo.errors import ResourceLimit
from matchgeo.metric import antipode_count, bfs_distances_from, matching_graph

from oracles import all_matchings, plain_bfs
from test_matching import matching_pairs

HEX_A = "1-2,3-4,5-6"
HEX_B = "2-3,4-5,1-6"


def test_distance_examples(M):
    a = M(HEX_A)
    assert distance(a, a) == 0
    assert distance(a, M(HEX_B)) == 2
    assert distance(M("1-2,3-4"), M("1-3,2-4")) == 1
    with pytest.raises(MixedSizes):
        distance(M("1-2"), a)


def test_classify_insertion_examples(M):
    a, b = M(HEX_A), M(HEX_B)
    # oracle: the recomputed distance after inserting
    assert distance(insert_edge(a, (1, 4)), b) == 1
    assert classify_insertion(a, b, (1, 4)) is InsertionEffect.DECREASE
    assert distance(insert_edge(a, (1, 3)), b) == 2
    assert classify_insertion(a, b, (1, 3)) is InsertionEffect.NEUTRAL
    c = M("1-2,3-4")
    assert classify_insertion(c, c, (1, 3)) is InsertionEffect.INCREASE
    with pytest.raises(EdgeAlreadyPresent):
        classify_insertion(a, b, (1, 2))


DELTA = {InsertionEffect.INCREASE: 1, InsertionEffect.DECREASE: -1, InsertionEffect.NEUTRAL: 0}


@settings(max_examples=200)
@given(matching_pairs(lo=2, hi=7))
def test_trichotomy_matches_distance_change(pair):
    a, b = pair
    d = distance(a, b)
    for e in combinations(range(1, 2 * a.m + 1), 2):
        if e in a:
            continue
        got = distance(insert_edge(a, e), b) - d
        assert got == DELTA[classify_insertion(a, b, e)]


@settings(max_examples=200)
@given(matching_pairs(lo=2, hi=7))
def test_first_insertion_of_target_edge_is_a_geodesic_step(pair):
    a, b = pair
    for e in set(b.edges) - set(a.edges):
        assert distance(insert_edge(a, e), b) == distance(a, b) - 1


def test_bfs_distance_examples(M):
    a = M(HEX_A)
    assert bfs_distance(a, a) == 0
    # P_2 is a triangle
    tri = all_matchings(2)
    assert all(bfs_distance(x, y) == 1 for x, y in combinations(tri, 2))
    assert bfs_distance(a, M(HEX_B)) == 2


@pytest.mark.parametrize("m", [2, 3, 4])
def test_distance_equals_bfs_all_pairs(m):
    for a in all_matchings(m):
        ref = plain_bfs(a)
        for b, d in ref.items():
            assert distance(a, b) == d


def test_numpy_bfs_matches_plain_bfs():
    start = all_matchings(5)[17]
    assert bfs_distances_from(start) == plain_bfs(start)


def test_distance_equals_bfs_random_m6():
    rng = random.Random(6)
    g = matching_graph(6)
    for _ in range(20):
        i = rng.randrange(len(g))
        dist = g.bfs(i)
        for j in rng.sample(range(len(g)), 50):
            assert distance(g.vertices[i], g.vertices[j]) == dist[j]


@pytest.mark.parametrize("m", [2, 3, 4])
def test_metric_axioms(m):
    verts = all_matchings(m)
    sample = verts if m < 4 else verts[::3]
    for a in sample:
        for b in sample:
            assert distance(a, b) == distance(b, a)
            assert (distance(a, b) == 0) == (a == b)
            for c in sample:
                assert distance(a, c) <= distance(a, b) + distance(b, c)


def test_eccentricity_and_diameter(M):
    assert diameter(5) == 4
    assert diameter(1) == 0
    assert eccentricity(M("1-2")) == 0
    assert eccentricity(M(HEX_A)) == 2
    for v in all_matchings(3):
        assert eccentricity(v, brute_force=True) == 2


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_brute_force_diameter(m):
    assert diameter(m, brute_force=True) == m - 1


def test_antipodes_examples(M):
    assert len(list(antipodes_of(M(HEX_A)))) == 8
    assert sorted(antipodes_of(M("1-2,3-4"))) == [M("1-3,2-4"), M("1-4,2-3")]


@pytest.mark.parametrize("m, count", [(2, 2), (3, 8), (4, 48), (5, 384)])
def test_antipode_strategies_agree(m, count):
    rng = random.Random(m)
    verts = all_matchings(m)
    for v in rng.sample(verts, min(len(verts), 10)):
        direct = list(antipodes_of(v))
        assert len(direct) == len(set(direct)) == count == antipode_count(m)
        assert sorted(direct) == list(antipodes_of(v, method="filter"))
        assert all(distance(v, w) == m - 1 for w in direct)


def test_antipodes_are_the_bfs_far_layer():
    v = all_matchings(4)[40]
    ref = plain_bfs(v)
    assert sorted(antipodes_of(v)) == sorted(w for w, d in ref.items() if d == 3)


def _c4_vertices(a, b):
    return {v for e in set(a.edges) ^ set(b.edges) for v in e}


def _lemma_holds(a, b, e):
    ae, be = insert_edge(a, e), insert_edge(b, e)
    if set(e) <= _c4_vertices(a, b):
        return ae == be
    return are_adjacent(ae, be)


def test_insertion_adjacency_lemma_exhaustive_m3():
    edges = list(combinations(range(1, 7), 2))
    for a in all_matchings(3):
        for b in neighbors(a):
            for e in edges:
                assert _lemma_holds(a, b, e)


@pytest.mark.parametrize("m", [4, 5, 6])
def test_insertion_adjacency_lemma_random(m):
    rng = random.Random(m)
    verts = matching_graph(m).vertices
    edges = list(combinations(range(1, 2 * m + 1), 2))
    for _ in range(2000):
        a = rng.choice(verts)
        b = rng.choice(neighbors(a))
        assert _lemma_holds(a, b, rng.choice(edges))


def test_resource_cap_on_bfs(M):
    a = M("1-2,3-4,5-6,7-8,9-10,11-12,13-14,15-16")
    with pytest.raises(ResourceLimit):
        bfs_distance(a, a)
    with pytest.raises(ResourceLimit):
        matching_graph(6, cap=1000)
