"""Non-crossing matchings: points 1..2m sit on a circle in label order."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import CapExceeded, MixedSizes, NotNonCrossing, ResourceLimit, SharedVertex, VertexOutOfRange
from .geodesics import DEFAULT_CAP, count_geodesic_walks, geodesic_count
from .matching import Matching, union_decompose
from .metric import matching_graph


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def edges_cross(e1, e2, m: int) -> bool:
    """Chords cross iff exactly one endpoint of ``e2`` lies strictly inside the arc of ``e1``."""
    for v in (*e1, *e2):
        if not 1 <= v <= 2 * m:
            raise VertexOutOfRange(v, m)
    if set(e1) & set(e2):
        raise SharedVertex(e1, e2)
    a, b = sorted(e1)
    inside = (a < e2[0] < b) + (a < e2[1] < b)
    return inside == 1


def _crosses(e1, e2):
    a, b = e1
    return (a < e2[0] < b) != (a < e2[1] < b)


def is_noncrossing(matching: Matching) -> bool:
    edges = matching.edges
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if f.a > e.b:
                break
            if _crosses(e, f):
                return False
    return True


def enumerate_noncrossing(m: int) -> Iterator[Matching]:
    """All non-crossing matchings on 2m points, canonical order.

    Vertex 1 pairs with an even-indexed vertex 2j, splitting the circle into
    an inside block and an outside block that are matched independently.
    """
    def blocks(lo, hi):
        # non-crossing matchings of lo..hi as lists of pairs
        if lo > hi:
            yield []
            return
        for j in range(lo + 1, hi + 1, 2):
            for inner in blocks(lo + 1, j - 1):
                for outer in blocks(j + 1, hi):
                    yield [(lo, j)] + inner + outer

    found = [Matching(pairs, m) for pairs in blocks(1, 2 * m)]
    yield from sorted(found)


def _require_noncrossing(*ms):
    for x in ms:
        if not is_noncrossing(x):
            raise NotNonCrossing(x)


def boundary_pair(m: int) -> tuple:
    """The two matchings made only of hull edges: {1-2,3-4,...} and {2-3,...,2m-1}."""
    if m < 2:
        raise ValueError("m must be at least 2")
    first = Matching([(2 * i - 1, 2 * i) for i in range(1, m + 1)], m)
    second = Matching([(2 * i, 2 * i + 1) for i in range(1, m)] + [(1, 2 * m)], m)
    return first, second


def mm_distance(m1: Matching, m2: Matching) -> int:
    """Half the total excess length of the alternating cycles."""
    if m1.m != m2.m:
        raise MixedSizes(m1.m, m2.m)
    _require_noncrossing(m1, m2)
    return sum(len(c) - 2 for c in union_decompose(m1, m2).cycles) // 2


def mm_bfs_distance(m1: Matching, m2: Matching) -> int:
    """Breadth-first distance inside the induced non-crossing subgraph."""
    if m1.m != m2.m:
        raise MixedSizes(m1.m, m2.m)
    _require_noncrossing(m1, m2)
    g = matching_graph(m1.m, noncrossing=True)
    return int(g.bfs(g.index[m1])[g.index[m2]])


def mm_geodesic_count(m1: Matching, m2: Matching, cap: int | None = DEFAULT_CAP) -> int:
    """Geodesics of length distance(m1, m2) that only visit non-crossing matchings."""
    if m1.m != m2.m:
        raise MixedSizes(m1.m, m2.m)
    _require_noncrossing(m1, m2)
    ambient = geodesic_count(m1, m2)
    if cap is not None and ambient > cap:
        raise CapExceeded(ambient, cap)
    return count_geodesic_walks(m1, m2, keep=is_noncrossing)


@dataclass
class UniquePairReport:
    m: int
    pairs_checked: int
    expected_count: int
    max_count: int
    maximal_pairs: list = field(default_factory=list)
    boundary: tuple = ()

    @property
    def ok(self) -> bool:
        return (self.max_count == self.expected_count
                and len(self.maximal_pairs) == 1
                and set(self.maximal_pairs[0]) == set(self.boundary))

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "pairs_checked": self.pairs_checked,
            "expected_count": str(self.expected_count),
            "max_count": str(self.max_count),
            "maximal_pairs": [[str(a), str(b)] for a, b in self.maximal_pairs],
            "boundary_pair": [str(x) for x in self.boundary],
            "ok": self.ok,
        }


def verify_unique_maximal_pair(m: int, max_m: int = 6) -> UniquePairReport:
    """Count restricted geodesics for every unordered pair of distinct
    non-crossing matchings and collect the pairs reaching the maximum."""
    if not 2 <= m <= max_m:
        raise ResourceLimit(f"m={m} outside the supported range [2, {max_m}]")
    verts = list(enumerate_noncrossing(m))
    best, winners, checked = 0, [], 0
    for a, b in combinations(verts, 2):
        c = mm_geodesic_count(a, b, cap=None)
        checked += 1
        if c > best:
            best, winners = c, [(a, b)]
        elif c == best:
            winners.append((a, b))
    expected = m ** (m - 2)
    return UniquePairReport(m, checked, expected, best, winners, boundary_pair(m))


def boundary_geodesics_stay_noncrossing(m: int) -> bool:
    from .geodesics import enumerate_geodesics

    a, b = boundary_pair(m)
    return all(is_noncrossing(s) for p in enumerate_geodesics(a, b, cap=None) for s in p.steps)

