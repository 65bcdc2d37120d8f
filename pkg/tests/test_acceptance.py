"""Exit criteria. Every comparison is an exact integer equality.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import contextlib
import math
import random
import time
from itertools import combinations

import pytest

from matchgeo import (
    antipodes_of,
    are_adjacent,
    count_cycle_factorizations,
    distance,
    enumerate_all_matchings,
    enumerate_geodesics,
    geodesic_count,
    insert_edge,
    labeled_tree_recurrence,
    neighbors,
    p2k_closed,
    p2k_recurrence,
    p2k_weighted,
    verify_unique_maximal_pair,
)
from matchgeo.metric import matching_graph
from matchgeo.noncrossing import boundary_pair, enumerate_noncrossing, is_noncrossing

from conftest import ACCEPTANCE_LINES


@contextlib.contextmanager
def criterion(label, limit=None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = limit is None or elapsed < limit
        status = "PASS" if ok and within else "FAIL"
        budget = f" (limit {limit:g}s)" if limit else ""
        ACCEPTANCE_LINES.append(f"{status} {label} [{elapsed:.1f}s{budget}]")
    if limit is not None:
        assert elapsed < limit, f"{label}: {elapsed:.1f}s exceeds {limit}s"


def _common_edges_kept(path):
    common = set(path.steps[0].edges) & set(path.steps[-1].edges)
    return all(common <= set(s.edges) for s in path.steps)


def _geodesics_ok(path):
    steps = path.steps
    return (len(set(steps)) == len(steps)
            and all(are_adjacent(x, y) for x, y in zip(steps, steps[1:])))


def _formula_pairs(m):
    verts = list(enumerate_all_matchings(m))
    if m <= 4:
        return [(a, b) for a in verts for b in verts]
    rng = random.Random(2024)
    return [(rng.choice(verts), rng.choice(verts)) for _ in range(500)]


def test_c1_order_and_regularity():
    expected = {2: 3, 3: 15, 4: 105, 5: 945, 6: 10395}
    with criterion("C1 order (2m-1)!! and degree 2*C(m,2), m=2..6"):
        for m, order in expected.items():
            limit = 60 if m == 6 else None
            start = time.perf_counter()
            verts = list(enumerate_all_matchings(m))
            assert len(verts) == len(set(verts)) == order
            degree = 2 * math.comb(m, 2)
            for v in verts:
                assert len(set(neighbors(v))) == degree
            if limit:
                assert time.perf_counter() - start < limit


def test_c2_distance_theorem():
    with criterion("C2 distance = BFS distance (all pairs m<=5, 10^4 random at m=6)", limit=300):
        for m in range(2, 6):
            g = matching_graph(m)
            for i, a in enumerate(g.vertices):
                dist = g.bfs(i)
                for j, b in enumerate(g.vertices):
                    assert distance(a, b) == dist[j], (str(a), str(b))
        g = matching_graph(6)
        rng = random.Random(6)
        pairs = sorted((rng.randrange(len(g)), rng.randrange(len(g))) for _ in range(10_000))
        src, dist = None, None
        for i, j in pairs:
            if i != src:
                src, dist = i, g.bfs(i)
            assert distance(g.vertices[i], g.vertices[j]) == dist[j]


def test_c3_diameter_eccentricity_antipodes():
    with criterion("C3 eccentricity m-1 and (2m-2)!! antipodes for every vertex, m=2..5"):
        for m, count in {2: 2, 3: 8, 4: 48, 5: 384}.items():
            g = matching_graph(m)
            for i, v in enumerate(g.vertices):
                dist = g.bfs(i)
                assert dist.max() == m - 1
                assert int((dist == m - 1).sum()) == count
                assert sum(1 for _ in antipodes_of(v)) == count


def test_c4_counting_identities():
    with criterion("C4 P_2k recurrence = weighted = k^(k-2) = T_k, k=1..12", limit=1):
        for k in range(1, 13):
            closed = 1 if k == 1 else k ** (k - 2)
            assert p2k_recurrence(k) == p2k_weighted(k) == p2k_closed(k) == closed
            assert labeled_tree_recurrence(k) == closed


def test_c5_antipodal_geodesics():
    with criterion("C5 enumerated antipodal geodesics = m^(m-2), m=2..6", limit=60):
        for m, want in {2: 1, 3: 3, 4: 16, 5: 125, 6: 1296}.items():
            a, b = boundary_pair(m)
            assert distance(a, b) == m - 1
            paths = list(enumerate_geodesics(a, b, cap=None))
            assert len(paths) == len(set(paths)) == want
            for p in paths:
                assert p.length == m - 1 and _geodesics_ok(p) and _common_edges_kept(p)


def test_c6_general_pair_formula():
    with criterion("C6 multinomial formula = enumeration (all pairs m<=4, 500 random m=5)"):
        for m in range(2, 6):
            for a, b in _formula_pairs(m):
                n = 0
                for p in enumerate_geodesics(a, b, cap=None):
                    assert p.length == distance(a, b) and _geodesics_ok(p)
                    n += 1
                assert n == geodesic_count(a, b), (str(a), str(b))


def test_c7_hurwitz():
    with criterion("C7 n-cycle factorizations = n^(n-2), n=2..6", limit=30):
        for n, want in {2: 1, 3: 3, 4: 16, 5: 125, 6: 1296}.items():
            assert count_cycle_factorizations(n) == want


def test_c8_noncrossing_uniqueness():
    with criterion("C8 unique maximal non-crossing pair, Catalan counts, m=3..6", limit=300):
        for m, cat in {3: 5, 4: 14, 5: 42, 6: 132}.items():
            nc = list(enumerate_noncrossing(m))
            assert len(nc) == cat
            assert sum(map(is_noncrossing, enumerate_all_matchings(m))) == cat
            report = verify_unique_maximal_pair(m)
            assert report.max_count == m ** (m - 2)
            assert report.maximal_pairs == [boundary_pair(m)]
            assert report.ok


def _lemma_case(a, b, e):
    cyc = {v for x in set(a.edges) ^ set(b.edges) for v in x}
    ae, be = insert_edge(a, e), insert_edge(b, e)
    if set(e) <= cyc:
        return ae == be
    return are_adjacent(ae, be)


def test_c9_lemma_suites():
    with criterion("C9 insertion lemma (exhaustive m=3, 10^4 random m=4..6); "
                   "common edges on every C5-C6 geodesic"):
        edges3 = list(combinations(range(1, 7), 2))
        for a in enumerate_all_matchings(3):
            for b in neighbors(a):
                for e in edges3:
                    assert _lemma_case(a, b, e)
        for m in (4, 5, 6):
            rng = random.Random(90 + m)
            verts = matching_graph(m).vertices
            edges = list(combinations(range(1, 2 * m + 1), 2))
            for _ in range(10_000):
                a = rng.choice(verts)
                b = rng.choice(neighbors(a))
                assert _lemma_case(a, b, rng.choice(edges))
        for m in range(2, 7):
            a, b = boundary_pair(m)
            assert all(_common_edges_kept(p) for p in enumerate_geodesics(a, b, cap=None))
        for m in range(2, 6):
            for a, b in _formula_pairs(m):
                assert all(_common_edges_kept(p) for p in enumerate_geodesics(a, b, cap=None))
