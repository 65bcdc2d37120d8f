"""Perfect matchings of the complete graph K_2m and their elementary operations.

Vertices are labeled 1..2m everywhere in the public API. A matching is held
as a ``partner`` tuple where ``partner[v - 1]`` is the vertex matched to ``v``;
equality, hashing and ordering all go through this canonical form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    DuplicateVertex,
    MixedSizes,
    ResourceLimit,
    VertexOutOfRange,
    WrongEdgeCount,
)

#: Default refusal threshold for anything that touches every vertex of the graph.
DEFAULT_MAX_VERTICES = 10**6


class Edge(NamedTuple):
    """An edge of K_2m with ``a < b``."""

    a: int
    b: int

    def __str__(self):
        return f"{self.a}-{self.b}"


def make_edge(u: int, v: int) -> Edge:
    if u == v:
        raise DuplicateVertex(u)
    return Edge(u, v) if u < v else Edge(v, u)


def double_factorial(n: int) -> int:
    """n!! with the usual conventions 0!! = (-1)!! = 1."""
    return math.prod(range(n, 0, -2))


def matching_count(m: int) -> int:
    """Number of perfect matchings of K_2m, i.e. (2m-1)!!."""
    return double_factorial(2 * m - 1)


@total_ordering
class Matching:
    """An immutable perfect matching of K_2m in canonical form."""

    __slots__ = ("_partner", "_edges", "_hash")

    def __init__(self, pairs: Iterable[Sequence[int]], m: int | None = None):
        pairs = [tuple(p) for p in pairs]
        if m is None:
            m = len(pairs)
        for p in pairs:
            if len(p) != 2:
                raise WrongEdgeCount(len(pairs), m)
        n = 2 * m
        partner = [0] * n
        for u, v in pairs:
            for x in (u, v):
                if not isinstance(x, int) or not 1 <= x <= n:
                    raise VertexOutOfRange(x, m)
            if u == v:
                raise DuplicateVertex(u)
            for x, y in ((u, v), (v, u)):
                if partner[x - 1]:
                    raise DuplicateVertex(x)
                partner[x - 1] = y
        if len(pairs) != m:
            raise WrongEdgeCount(len(pairs), m)
        self._set(tuple(partner))

    @classmethod
    def _from_partner(cls, partner: tuple) -> Matching:
        # trusted constructor for internal callers that already hold an involution
        obj = cls.__new__(cls)
        obj._set(partner)
        return obj

    def _set(self, partner):
        self._partner = partner
        self._edges = tuple(
            Edge(v, p) for v, p in enumerate(partner, 1) if v < p
        )
        self._hash = hash(partner)

    @classmethod
    def parse(cls, text: str, m: int | None = None) -> Matching:
        """Parse a literal such as ``"1-2,3-4,5-6"`` (any pair order)."""
        text = text.strip()
        pairs = []
        if text:
            for chunk in text.split(","):
                parts = chunk.strip().split("-")
                if len(parts) != 2:
                    raise ValueError(f"malformed pair {chunk.strip()!r} in {text!r}")
                try:
                    pairs.append((int(parts[0]), int(parts[1])))
                except ValueError:
                    raise ValueError(f"malformed pair {chunk.strip()!r} in {text!r}") from None
        return cls(pairs, m)

    @property
    def m(self) -> int:
        return len(self._partner) // 2

    @property
    def partner(self) -> tuple:
        return self._partner

    @property
    def edges(self) -> tuple:
        return self._edges

    def mate(self, v: int) -> int:
        return self._partner[v - 1]

    def __contains__(self, e) -> bool:
        u, v = e
        return 1 <= u <= len(self._partner) and self._partner[u - 1] == v

    def __iter__(self) -> Iterator[Edge]:
        return iter(self._edges)

    def __len__(self):
        return len(self._edges)

    def __eq__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return self._partner == other._partner

    def __lt__(self, other):
        if not isinstance(other, Matching):
            return NotImplemented
        return (self.m, self._edges) < (other.m, other._edges)

    def __hash__(self):
        return self._hash

    def __str__(self):
        return ",".join(f"{a}-{b}" for a, b in self._edges)

    def __repr__(self):
        return f"Matching('{self}')"

    def __reduce__(self):
        return (Matching, (self._edges, self.m))


def canonicalize(pairs: Iterable[Sequence[int]], m: int) -> Matching:
    return Matching(pairs, m)


def _check_vertex(v: int, m: int):
    if not 1 <= v <= 2 * m:
        raise VertexOutOfRange(v, m)


def _same_size(m1: Matching, m2: Matching):
    if m1.m != m2.m:
        raise MixedSizes(m1.m, m2.m)


def insert_edge(matching: Matching, e: Sequence[int]) -> Matching:
    """Force ``e`` into the matching and pair up the two displaced partners."""
    u, v = e
    m = matching.m
    _check_vertex(u, m)
    _check_vertex(v, m)
    if u == v:
        raise DuplicateVertex(u)
    partner = matching.partner
    if partner[u - 1] == v:
        return matching
    x, y = partner[u - 1], partner[v - 1]
    new = list(partner)
    new[u - 1], new[v - 1] = v, u
    new[x - 1], new[y - 1] = y, x
    return Matching._from_partner(tuple(new))


def insert_sequence(matching: Matching, edges: Iterable[Sequence[int]]) -> Matching:
    for e in edges:
        matching = insert_edge(matching, e)
    return matching


def symmetric_difference(m1: Matching, m2: Matching) -> frozenset:
    _same_size(m1, m2)
    return frozenset(m1.edges).symmetric_difference(m2.edges)


def are_adjacent(m1: Matching, m2: Matching) -> bool:
    """True iff the symmetric difference is a single 4-cycle."""
    diff = symmetric_difference(m1, m2)
    if len(diff) != 4:
        return False
    degree = {}
    for a, b in diff:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    return len(degree) == 4 and all(d == 2 for d in degree.values())


def neighbors(matching: Matching) -> list:
    """All 2*C(m, 2) neighbors, in canonical order.

    Each unordered pair of edges {(a,b), (c,d)} yields the two rewirings
    {(a,c),(b,d)} and {(a,d),(b,c)}.
    """
    partner = matching.partner
    edges = matching.edges
    out = []
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            for x, y in ((c, d), (d, c)):
                new = list(partner)
                new[a - 1], new[x - 1] = x, a
                new[b - 1], new[y - 1] = y, b
                out.append(Matching._from_partner(tuple(new)))
    out.sort()
    return out


@dataclass(frozen=True)
class AlternatingCycle:
    """Vertices in cycle order, starting at the smallest vertex and then its
    partner in the first matching. A common edge is a 2-vertex cycle."""

    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    @property
    def half_length(self) -> int:
        return len(self.vertices) // 2


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: tuple

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.cycles)

    @property
    def lengths(self) -> tuple:
        return tuple(len(c) for c in self.cycles)

    def cycle_index(self) -> dict:
        """Map each vertex to the index of the cycle containing it."""
        return {v: i for i, c in enumerate(self.cycles) for v in c.vertices}


def union_decompose(m1: Matching, m2: Matching) -> CycleDecomposition:
    _same_size(m1, m2)
    p1, p2 = m1.partner, m2.partner
    seen = [False] * len(p1)
    cycles = []
    for start in range(1, len(p1) + 1):
        if seen[start - 1]:
            continue
        verts = []
        v = start
        while True:
            w = p1[v - 1]
            verts.append(v)
            verts.append(w)
            seen[v - 1] = seen[w - 1] = True
            v = p2[w - 1]
            if v == start:
                break
        cycles.append(AlternatingCycle(tuple(verts)))
    return CycleDecomposition(tuple(cycles))


def enumerate_all_matchings(m: int, cap: int | None = DEFAULT_MAX_VERTICES) -> Iterator[Matching]:
    """Every perfect matching of K_2m exactly once, in canonical order.

    The smallest unmatched vertex is paired with each larger candidate in turn,
    which produces the matchings in increasing canonical order.
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    total = matching_count(m)
    if cap is not None and total > cap:
        raise ResourceLimit(f"(2m-1)!! = {total} matchings for m={m} exceeds cap {cap}")
    n = 2 * m
    partner = [0] * n

    def rec(free):
        if not free:
            yield Matching._from_partner(tuple(partner))
            return
        u = free[0]
        for j in range(1, len(free)):
            v = free[j]
            partner[u - 1], partner[v - 1] = v, u
            yield from rec(free[1:j] + free[j + 1:])

    yield from rec(list(range(1, n + 1)))
