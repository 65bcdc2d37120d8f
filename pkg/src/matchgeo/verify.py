"""Brute-force oracle checks, one per theorem, for a fixed m.

Each check returns a :class:`CheckResult`; ``counterexample`` holds the first
failing instance rendered as matching literals.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .geodesics import (
    count_cycle_factorizations,
    count_labeled_trees,
    enumerate_geodesics,
    geodesic_count,
    labeled_tree_recurrence,
    p2k_closed,
    p2k_recurrence,
    p2k_weighted,
)
from .matching import (
    are_adjacent,
    enumerate_all_matchings,
    insert_edge,
    matching_count,
    neighbors,
    union_decompose,
)
from .metric import (
    InsertionEffect,
    antipode_count,
    antipodes_of,
    classify_insertion,
    distance,
    matching_graph,
)
from .noncrossing import (
    boundary_geodesics_stay_noncrossing,
    boundary_pair,
    catalan,
    enumerate_noncrossing,
    is_noncrossing,
    mm_distance,
    verify_unique_maximal_pair,
)

log = logging.getLogger(__name__)

EXHAUSTIVE_MAX_M = 5
RANDOM_DISTANCE_PAIRS = 10_000
RANDOM_FORMULA_PAIRS = 500
LEMMA_TRIALS = 10_000


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    counterexample: list = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "detail": self.detail,
            "counterexample": self.counterexample,
        }


def _fail(name, *items, detail=""):
    return CheckResult(name, False, detail, [str(x) for x in items])


def _random_pairs(verts, count, rng):
    return [(rng.choice(verts), rng.choice(verts)) for _ in range(count)]


def check_order_and_regularity(m: int) -> CheckResult:
    name = "order_and_regularity"
    verts = list(enumerate_all_matchings(m))
    if len(verts) != matching_count(m) or len(set(verts)) != len(verts):
        return _fail(name, detail=f"{len(verts)} matchings, expected {matching_count(m)}")
    degree = 2 * math.comb(m, 2)
    for v in verts:
        nbrs = neighbors(v)
        if len(nbrs) != degree or len(set(nbrs)) != degree:
            return _fail(name, v, detail=f"degree {len(set(nbrs))}, expected {degree}")
        for w in nbrs:
            if not are_adjacent(v, w):
                return _fail(name, v, w, detail="listed neighbor is not adjacent")
    g = matching_graph(m)
    if (g.bfs(0) < 0).any():
        return _fail(name, detail="graph is disconnected")
    return CheckResult(name, True, f"{len(verts)} vertices, all of degree {degree}, connected")


def check_distance_formula(m: int, rng: random.Random) -> CheckResult:
    name = "distance_formula"
    g = matching_graph(m)
    verts = g.vertices
    if m <= EXHAUSTIVE_MAX_M:
        for i, a in enumerate(verts):
            dist = g.bfs(i)
            for j, b in enumerate(verts):
                if distance(a, b) != dist[j]:
                    return _fail(name, a, b, detail=f"formula {distance(a, b)} vs BFS {dist[j]}")
        return CheckResult(name, True, f"all {len(verts) ** 2} ordered pairs agree with BFS")
    pairs = _random_pairs(verts, RANDOM_DISTANCE_PAIRS, rng)
    pairs.sort(key=lambda p: g.index[p[0]])
    cache_src, dist = None, None
    for a, b in pairs:
        if a != cache_src:
            cache_src, dist = a, g.bfs(g.index[a])
        if distance(a, b) != dist[g.index[b]]:
            return _fail(name, a, b, detail=f"formula {distance(a, b)} vs BFS {dist[g.index[b]]}")
    return CheckResult(name, True, f"{len(pairs)} random pairs agree with BFS")


def check_eccentricity_and_antipodes(m: int, rng: random.Random) -> CheckResult:
    name = "eccentricity_and_antipodes"
    g = matching_graph(m)
    ids = range(len(g)) if m <= EXHAUSTIVE_MAX_M else rng.sample(range(len(g)), 50)
    expected = antipode_count(m)
    for i in ids:
        v = g.vertices[i]
        dist = g.bfs(i)
        if dist.max() != m - 1:
            return _fail(name, v, detail=f"eccentricity {dist.max()}, expected {m - 1}")
        far = sorted(g.vertices[j] for j in np.flatnonzero(dist == m - 1))
        direct = sorted(antipodes_of(v))
        if len(far) != expected or direct != far:
            return _fail(name, v, detail=f"{len(far)} BFS antipodes, {len(direct)} direct, "
                                         f"expected {expected}")
    scope = "every vertex" if m <= EXHAUSTIVE_MAX_M else "50 random vertices"
    return CheckResult(name, True, f"{scope}: eccentricity {m - 1}, {expected} antipodes")


def check_p2k_identities(k_max: int = 12) -> CheckResult:
    name = "p2k_identities"
    for k in range(1, k_max + 1):
        values = {p2k_recurrence(k), p2k_weighted(k), p2k_closed(k),
                  labeled_tree_recurrence(k), count_labeled_trees(k)}
        if len(values) != 1:
            return _fail(name, k, detail=f"disagreement at k={k}: {sorted(values)}")
    return CheckResult(name, True, f"five routes agree for k=1..{k_max}")


def check_antipodal_geodesics(m: int) -> CheckResult:
    name = "antipodal_geodesics"
    a, b = boundary_pair(m)
    paths = list(enumerate_geodesics(a, b, cap=None))
    for p in paths:
        if p.violations():
            return _fail(name, *p.steps, detail="; ".join(p.violations()))
    want = p2k_closed(m)
    if len(paths) != want or len(set(paths)) != len(paths):
        return _fail(name, a, b, detail=f"{len(paths)} paths enumerated, expected {want}")
    return CheckResult(name, True, f"{want} geodesics between {a} and {b}")


def check_general_formula(m: int, rng: random.Random) -> CheckResult:
    name = "general_pair_formula"
    verts = list(enumerate_all_matchings(m))
    if m <= 4:
        pairs = [(a, b) for a in verts for b in verts]
    else:
        pairs = _random_pairs(verts, RANDOM_FORMULA_PAIRS, rng)
    for a, b in pairs:
        count = 0
        for p in enumerate_geodesics(a, b, cap=None):
            bad = p.violations()
            if bad:
                return _fail(name, *p.steps, detail="; ".join(bad))
            count += 1
        if count != geodesic_count(a, b):
            return _fail(name, a, b, detail=f"enumerated {count}, formula {geodesic_count(a, b)}")
    return CheckResult(name, True, f"{len(pairs)} pairs: formula equals enumeration, "
                                   "common edges kept on every path")


def check_hurwitz(n: int) -> CheckResult:
    name = "hurwitz_factorizations"
    got = count_cycle_factorizations(n)
    if got != p2k_closed(n):
        return _fail(name, n, detail=f"{got} factorizations, expected {p2k_closed(n)}")
    return CheckResult(name, True, f"{got} factorizations of the cycle (1 .. {n})")


def check_noncrossing(m: int) -> CheckResult:
    name = "noncrossing"
    verts = list(enumerate_noncrossing(m))
    filtered = [v for v in enumerate_all_matchings(m) if is_noncrossing(v)]
    if verts != filtered or len(verts) != catalan(m):
        return _fail(name, detail=f"{len(verts)} direct, {len(filtered)} filtered, "
                                  f"Catalan {catalan(m)}")
    g = matching_graph(m, noncrossing=True)
    for i, a in enumerate(g.vertices):
        dist = g.bfs(i)
        for j, b in enumerate(g.vertices):
            if not mm_distance(a, b) == distance(a, b) == dist[j]:
                return _fail(name, a, b, detail="subgraph distance differs")
    if 2 <= m <= 6:
        if not boundary_geodesics_stay_noncrossing(m):
            return _fail(name, *boundary_pair(m), detail="a boundary geodesic leaves the subgraph")
        report = verify_unique_maximal_pair(m)
        if not report.ok:
            return _fail(name, *[x for p in report.maximal_pairs for x in p],
                         detail=f"maximum {report.max_count} reached by "
                                f"{len(report.maximal_pairs)} pairs")
    return CheckResult(name, True, f"{len(verts)} non-crossing matchings; subgraph distances "
                                   "match; boundary pair is the unique maximum")


def check_insertion_lemma(m: int, rng: random.Random) -> CheckResult:
    """Insertion into two adjacent matchings gives equal or adjacent results."""
    name = "insertion_adjacency_lemma"
    n = 2 * m
    all_edges = list(combinations(range(1, n + 1), 2))

    def one(a, b, e):
        cyc = {v for x in set(a.edges) ^ set(b.edges) for v in x}
        ae, be = insert_edge(a, e), insert_edge(b, e)
        if set(e) <= cyc:
            return ae == be
        return are_adjacent(ae, be)

    if m <= 3:
        trials = 0
        for a in enumerate_all_matchings(m):
            for b in neighbors(a):
                for e in all_edges:
                    trials += 1
                    if not one(a, b, e):
                        return _fail(name, a, b, f"{e[0]}-{e[1]}")
        return CheckResult(name, True, f"exhaustive, {trials} cases")
    verts = matching_graph(m).vertices
    for _ in range(LEMMA_TRIALS):
        a = rng.choice(verts)
        b = rng.choice(neighbors(a))
        e = rng.choice(all_edges)
        if not one(a, b, e):
            return _fail(name, a, b, f"{e[0]}-{e[1]}")
    return CheckResult(name, True, f"{LEMMA_TRIALS} random cases")


def check_insertion_trichotomy(m: int, rng: random.Random) -> CheckResult:
    """Declared effect of every insertion matches the recomputed distance change,
    and every edge of the target is a valid first step."""
    name = "insertion_trichotomy"
    verts = list(enumerate_all_matchings(m))
    pairs = _random_pairs(verts, 300, rng)
    delta = {InsertionEffect.INCREASE: 1, InsertionEffect.DECREASE: -1,
             InsertionEffect.NEUTRAL: 0}
    for a, b in pairs:
        d = distance(a, b)
        for e in combinations(range(1, 2 * m + 1), 2):
            if e in a:
                continue
            got = distance(insert_edge(a, e), b) - d
            if got != delta[classify_insertion(a, b, e)]:
                return _fail(name, a, b, f"{e[0]}-{e[1]}")
            if e in b and got != -1:
                return _fail(name, a, b, f"{e[0]}-{e[1]}", detail="target edge is not a first step")
    return CheckResult(name, True, f"{len(pairs)} random pairs, every insertion")


def check_cycle_structure(m: int) -> CheckResult:
    name = "cycle_decomposition"
    verts = list(enumerate_all_matchings(m))
    for a in verts[:50]:
        for b in verts:
            deco = union_decompose(a, b)
            covered = sorted(v for c in deco.cycles for v in c.vertices)
            if covered != list(range(1, 2 * m + 1)) or (deco.l == m) != (a == b):
                return _fail(name, a, b)
    return CheckResult(name, True, "cycles partition the vertices; l = m iff equal")


def run_all(m: int, seed: int = 0) -> list:
    """Run every check for ``m``; the materialized graph must fit the caller's cap."""
    rng = random.Random(seed)
    checks = [
        lambda: check_order_and_regularity(m),
        lambda: check_cycle_structure(m),
        lambda: check_distance_formula(m, rng),
        lambda: check_eccentricity_and_antipodes(m, rng),
        lambda: check_insertion_lemma(m, rng),
        lambda: check_insertion_trichotomy(m, rng),
        lambda: check_p2k_identities(),
        lambda: check_antipodal_geodesics(m),
        lambda: check_general_formula(m, rng),
        lambda: check_hurwitz(m) if m <= 8 else CheckResult("hurwitz_factorizations", True,
                                                             "skipped above n=8"),
        lambda: check_noncrossing(m),
    ]
    if m < 2:
        checks = checks[:2] + [checks[6]]
    results = []
    for check in checks:
        result = check()
        log.info("%s: %s", result.name, "ok" if result.passed else "FAILED")
        results.append(result)
    return results
