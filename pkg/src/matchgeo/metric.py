"""Distances in the graph of perfect matchings, plus breadth-first oracles."""

from __future__ import annotations

import enum
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import EdgeAlreadyPresent, MixedSizes, ResourceLimit
from .matching import (
    DEFAULT_MAX_VERTICES,
    Matching,
    double_factorial,
    enumerate_all_matchings,
    insert_edge,
    make_edge,
    matching_count,
    neighbors,
    union_decompose,
)


def distance(m1: Matching, m2: Matching) -> int:
    """Graph distance, computed as m minus the number of alternating cycles."""
    return m1.m - union_decompose(m1, m2).l


class InsertionEffect(enum.Enum):
    INCREASE = 1
    DECREASE = -1
    NEUTRAL = 0


def insertion_splits(m1: Matching, m2: Matching, cycle, e) -> bool:
    """Whether inserting ``e`` (both ends on ``cycle`` of ``m1 | m2``) splits that cycle.

    Only the four rewired vertices change, so it is enough to walk the new
    union from one end of ``e`` and see if the walk closes early.
    """
    u, v = e
    p1, p2 = m1.partner, m2.partner
    x, y = p1[u - 1], p1[v - 1]
    rewired = {u: v, v: u, x: y, y: x}
    start = w = u
    steps = 0
    while True:
        w = rewired.get(w) or p1[w - 1]
        w = p2[w - 1]
        steps += 2
        if w == start:
            break
    return steps < len(cycle)


def classify_insertion(m1: Matching, m2: Matching, e) -> InsertionEffect:
    """How inserting ``e`` into ``m1`` changes the distance to ``m2``.

    Decided from the cycle structure of ``m1 | m2`` alone: endpoints in
    different cycles merge them, endpoints in one cycle either split it or
    leave the count unchanged.
    """
    if m1.m != m2.m:
        raise MixedSizes(m1.m, m2.m)
    e = make_edge(*e)
    if e in m1:
        raise EdgeAlreadyPresent(e)
    deco = union_decompose(m1, m2)
    where = deco.cycle_index()
    if where[e.a] != where[e.b]:
        return InsertionEffect.INCREASE
    if insertion_splits(m1, m2, deco.cycles[where[e.a]], e):
        return InsertionEffect.DECREASE
    return InsertionEffect.NEUTRAL


class MatchingGraph:
    """The graph on a list of matchings, stored as CSR adjacency arrays.

    ``vertices`` are sorted canonically; ``index`` maps a matching to its row.
    When ``noncrossing`` is set only non-crossing matchings are kept and edges
    are those induced from the full graph.
    """

    def __init__(self, vertices: list, noncrossing: bool = False):
        self.vertices = vertices
        self.noncrossing = noncrossing
        self.index = {v: i for i, v in enumerate(vertices)}
        indptr = [0]
        indices = []
        for v in vertices:
            for w in neighbors(v):
                j = self.index.get(w)
                if j is not None:
                    indices.append(j)
            indptr.append(len(indices))
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)

    def __len__(self):
        return len(self.vertices)

    def degree(self, i: int) -> int:
        return int(self.indptr[i + 1] - self.indptr[i])

    def neighbor_ids(self, i: int) -> np.ndarray:
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def bfs(self, source: int) -> np.ndarray:
        """Hop distances from row ``source``; -1 marks unreachable rows."""
        dist = np.full(len(self.vertices), -1, dtype=np.int64)
        dist[source] = 0
        frontier = np.array([source], dtype=np.int64)
        level = 0
        indptr, indices = self.indptr, self.indices
        while frontier.size:
            level += 1
            starts = indptr[frontier]
            counts = indptr[frontier + 1] - starts
            total = int(counts.sum())
            if total == 0:
                break
            # gather every neighbor of every frontier row in one shot
            offsets = np.repeat(starts - np.cumsum(counts) + counts, counts)
            nbrs = indices[offsets + np.arange(total)]
            nbrs = np.unique(nbrs[dist[nbrs] < 0])
            dist[nbrs] = level
            frontier = nbrs
        return dist

    def to_dot(self) -> str:
        name = "M" if self.noncrossing else "P"
        lines = [f"graph {name}{self.vertices[0].m if self.vertices else 0} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for i, v in enumerate(self.vertices):
            for j in self.neighbor_ids(i):
                if j > i:
                    lines.append(f'  "{v}" -- "{self.vertices[j]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _check_cap(m: int, cap: int | None):
    total = matching_count(m)
    if cap is not None and total > cap:
        raise ResourceLimit(f"(2m-1)!! = {total} matchings for m={m} exceeds cap {cap}")


@lru_cache(maxsize=8)
def _graph(m: int, noncrossing: bool) -> MatchingGraph:
    verts = list(enumerate_all_matchings(m, cap=None))
    if noncrossing:
        from .noncrossing import is_noncrossing

        verts = [v for v in verts if is_noncrossing(v)]
    return MatchingGraph(verts, noncrossing)


def matching_graph(m: int, noncrossing: bool = False,
                   cap: int | None = DEFAULT_MAX_VERTICES) -> MatchingGraph:
    """Materialize the full graph (or its non-crossing induced subgraph).

    Results are cached per ``(m, noncrossing)``.
    """
    _check_cap(m, cap)
    return _graph(m, noncrossing)


def bfs_distances_from(matching: Matching, cap: int | None = DEFAULT_MAX_VERTICES) -> dict:
    """Breadth-first distances from ``matching`` to every vertex."""
    g = matching_graph(matching.m, cap=cap)
    dist = g.bfs(g.index[matching])
    return {v: int(d) for v, d in zip(g.vertices, dist)}


def bfs_distance(m1: Matching, m2: Matching, cap: int | None = DEFAULT_MAX_VERTICES) -> int:
    if m1.m != m2.m:
        raise MixedSizes(m1.m, m2.m)
    g = matching_graph(m1.m, cap=cap)
    return int(g.bfs(g.index[m1])[g.index[m2]])


def eccentricity(matching: Matching, brute_force: bool = False,
                 cap: int | None = DEFAULT_MAX_VERTICES) -> int:
    if not brute_force:
        return matching.m - 1
    g = matching_graph(matching.m, cap=cap)
    return int(g.bfs(g.index[matching]).max())


def diameter(m: int, brute_force: bool = False, cap: int | None = DEFAULT_MAX_VERTICES) -> int:
    if m < 1:
        raise ValueError("m must be at least 1")
    if not brute_force:
        return m - 1
    g = matching_graph(m, cap=cap)
    return max(int(g.bfs(i).max()) for i in range(len(g)))


def antipode_count(m: int) -> int:
    """(2m-2)!!, the number of antipodes of any vertex."""
    return double_factorial(2 * m - 2)


def antipodes_of(matching: Matching, method: str = "direct") -> Iterator[Matching]:
    """Matchings whose union with ``matching`` is one Hamiltonian cycle.

    ``"direct"`` walks alternating Hamiltonian cycles out of vertex 1;
    ``"filter"`` scans every matching and keeps those with a single cycle
    (canonical order, used as an oracle).
    """
    if method == "filter":
        for other in enumerate_all_matchings(matching.m, cap=None):
            if union_decompose(matching, other).l == 1:
                yield other
        return
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    p = matching.partner
    n = len(p)
    if n == 0:
        return
    new = [0] * n
    used = [False] * n
    used[0] = used[p[0] - 1] = True

    def walk(end, remaining):
        # ``end`` is the open end of the path; it still needs its new partner
        if remaining == 0:
            new[end - 1], new[0] = 1, end
            yield Matching._from_partner(tuple(new))
            return
        for q in range(2, n + 1):
            if used[q - 1]:
                continue
            r = p[q - 1]
            new[end - 1], new[q - 1] = q, end
            used[q - 1] = used[r - 1] = True
            yield from walk(r, remaining - 1)
            used[q - 1] = used[r - 1] = False
        new[end - 1] = 0

    yield from walk(p[0], n // 2 - 1)
