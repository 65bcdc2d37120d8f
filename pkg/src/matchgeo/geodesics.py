"""Counting and enumerating geodesics between perfect matchings.

All counts are exact Python integers.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .errors import CapExceeded, MixedSizes, ResourceLimit
from .matching import Matching, are_adjacent, insert_edge, union_decompose
from .metric import distance, insertion_splits, matching_graph

DEFAULT_CAP = 10**5


# -- the single-cycle numbers P_2k -------------------------------------------

def _check_k(k):
    if k < 1:
        raise ValueError("k must be at least 1")


def p2k_recurrence(k: int) -> int:
    """P_2k from the halved recurrence (k/2) * sum C(k-2, i-1) P_2i P_2(k-i)."""
    _check_k(k)
    table = [0, 1]
    for j in range(2, k + 1):
        s = sum(math.comb(j - 2, i - 1) * table[i] * table[j - i] for i in range(1, j))
        twice = j * s
        assert twice % 2 == 0, f"k * sum is odd at k={j}"
        table.append(twice // 2)
    return table[k]


def p2k_weighted(k: int) -> int:
    """P_2k from the weighted form sum i * C(k-2, i-1) P_2i P_2(k-i)."""
    _check_k(k)
    table = [0, 1]
    for j in range(2, k + 1):
        table.append(sum(i * math.comb(j - 2, i - 1) * table[i] * table[j - i]
                         for i in range(1, j)))
    return table[k]


def p2k_closed(k: int) -> int:
    """k^(k-2), with k=1 giving 1."""
    _check_k(k)
    if k == 1:
        return 1
    return k ** (k - 2)


def labeled_tree_recurrence(k: int) -> int:
    """T_k = sum i * C(k-2, i-1) T_i T_(k-i), T_1 = 1 (labeled trees on k points)."""
    _check_k(k)
    trees = {1: 1}
    for j in range(2, k + 1):
        trees[j] = sum(i * math.comb(j - 2, i - 1) * trees[i] * trees[j - i]
                       for i in range(1, j))
    return trees[k]


def count_labeled_trees(k: int) -> int:
    """Spanning trees of K_k via an exact integer determinant of the reduced Laplacian.

    Independent of any recurrence; uses fraction-free Bareiss elimination.
    """
    _check_k(k)
    n = k - 1
    if n == 0:
        return 1
    a = [[(k - 1) if i == j else -1 for j in range(n)] for i in range(n)]
    sign, prev = 1, 1
    for c in range(n - 1):
        if a[c][c] == 0:
            for r in range(c + 1, n):
                if a[r][c]:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) // prev
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


# -- arbitrary pairs ----------------------------------------------------------

def cycle_profile(m1: Matching, m2: Matching) -> tuple:
    """n(C) = length(C)/2 - 1 for each alternating cycle, in canonical cycle order."""
    return tuple(c.half_length - 1 for c in union_decompose(m1, m2).cycles)


def count_from_profile(profile) -> int:
    """Multinomial interlacing times the per-cycle factor (n+1)^(n-1)."""
    total = sum(profile)
    count = math.factorial(total)
    for n in profile:
        count //= math.factorial(n)
    for n in profile:
        if n > 0:
            count *= (n + 1) ** (n - 1)
    return count


def geodesic_count(m1: Matching, m2: Matching) -> int:
    return count_from_profile(cycle_profile(m1, m2))


# -- explicit enumeration -----------------------------------------------------

@dataclass(frozen=True)
class GeodesicPath:
    steps: tuple

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    @property
    def source(self) -> Matching:
        return self.steps[0]

    @property
    def target(self) -> Matching:
        return self.steps[-1]

    def __str__(self):
        return " > ".join(str(s) for s in self.steps)

    def violations(self) -> list:
        """Return the broken path invariants (empty when the path is a valid geodesic)."""
        problems = []
        steps = self.steps
        if len(set(steps)) != len(steps):
            problems.append("repeated matching")
        for a, b in zip(steps, steps[1:]):
            if not are_adjacent(a, b):
                problems.append(f"{a} and {b} are not adjacent")
        if self.length != distance(self.source, self.target):
            problems.append("length differs from the distance between the endpoints")
        common = set(self.source.edges) & set(self.target.edges)
        for s in steps:
            if not common <= set(s.edges):
                problems.append(f"{s} misses a common edge of the endpoints")
        return problems


def geodesic_steps(current: Matching, target: Matching) -> list:
    """Neighbors of ``current`` one step closer to ``target``, canonical order.

    Every insertion inside a cycle of the union is tried and the decreasing
    ones (those splitting the cycle) are kept; each neighbor arises from two
    such edges, so results are deduplicated.
    """
    found = set()
    for cyc in union_decompose(current, target).cycles:
        if len(cyc) < 4:
            continue
        for u, v in combinations(sorted(cyc.vertices), 2):
            if current.mate(u) == v:
                continue
            if insertion_splits(current, target, cyc, (u, v)):
                found.add(insert_edge(current, (u, v)))
    return sorted(found)


def _walk(prefix: list, target: Matching, remaining: int, keep=None) -> Iterator[tuple]:
    if remaining == 0:
        yield tuple(prefix)
        return
    for nxt in geodesic_steps(prefix[-1], target):
        if keep is not None and not keep(nxt):
            continue
        prefix.append(nxt)
        yield from _walk(prefix, target, remaining - 1, keep)
        prefix.pop()


def _walk_list(args):
    first, target, remaining = args
    return list(_walk(list(first), target, remaining))


def enumerate_geodesics(m1: Matching, m2: Matching, cap: int | None = DEFAULT_CAP,
                        workers: int | None = None) -> Iterator[GeodesicPath]:
    """Every geodesic from ``m1`` to ``m2`` exactly once, in canonical order.

    The closed-form count is checked against ``cap`` before any work. With
    ``workers > 1`` the subtrees under each first step are walked in separate
    processes; output order is unchanged.
    """
    if m1.m != m2.m:
        raise MixedSizes(m1.m, m2.m)
    expected = geodesic_count(m1, m2)
    if cap is not None and expected > cap:
        raise CapExceeded(expected, cap)
    d = distance(m1, m2)
    if workers and workers > 1 and d >= 2:
        jobs = [((m1, s), m2, d - 1) for s in geodesic_steps(m1, m2)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_walk_list, jobs):
                for steps in chunk:
                    yield GeodesicPath(steps)
        return
    for steps in _walk([m1], m2, d):
        yield GeodesicPath(steps)


def count_geodesic_walks(m1: Matching, m2: Matching, keep=None) -> int:
    """Count geodesics by memoized walking of the step DAG (no closed form).

    ``keep`` optionally restricts which intermediate matchings may be visited.
    """
    if m1.m != m2.m:
        raise MixedSizes(m1.m, m2.m)

    @lru_cache(maxsize=None)
    def count(cur):
        if cur == m2:
            return 1
        return sum(count(nxt) for nxt in geodesic_steps(cur, m2)
                   if keep is None or keep(nxt))

    return count(m1)


def bfs_geodesic_count(m1: Matching, m2: Matching) -> int:
    """Shortest-path count from breadth-first layers of the materialized graph.

    Uses only adjacency, never the cycle structure.
    """
    if m1.m != m2.m:
        raise MixedSizes(m1.m, m2.m)
    g = matching_graph(m1.m)
    src, dst = g.index[m1], g.index[m2]
    dist = g.bfs(src)
    paths = [0] * len(g)
    paths[src] = 1
    by_level = sorted(range(len(g)), key=lambda i: dist[i])
    for i in by_level:
        if dist[i] <= 0 or dist[i] > dist[dst]:
            continue
        paths[i] = sum(paths[j] for j in g.neighbor_ids(i) if dist[j] == dist[i] - 1)
    return paths[dst]


# -- Hurwitz factorizations ----------------------------------------------------

def count_cycle_factorizations(n: int, max_n: int = 8) -> int:
    """Sequences of n-1 transpositions of {1..n} whose product is (1 2 ... n).

    Products compose left to right (the left factor acts first). Counted by
    exhaustive search over the Cayley graph of transpositions, memoized on the
    permutation still to be produced.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if n > max_n:
        raise ResourceLimit(f"n={n} exceeds the brute-force limit {max_n}")
    identity = tuple(range(n))
    target = tuple((i + 1) % n for i in range(n))
    transpositions = []
    for a, b in combinations(range(n), 2):
        t = list(identity)
        t[a], t[b] = b, a
        transpositions.append(tuple(t))

    @lru_cache(maxsize=None)
    def ways(rest, steps):
        # rest must equal t_1 ; t_2 ; ... ; t_steps
        if steps == 0:
            return 1 if rest == identity else 0
        # t ; r' = rest  <=>  r' = t^-1 ; rest = t ; rest
        return sum(ways(tuple(rest[t[i]] for i in range(n)), steps - 1)
                   for t in transpositions)

    return ways(target, n - 1)


def compose(*perms: tuple) -> tuple:
    """Left-to-right product of 0-based permutation tuples."""
    out = tuple(range(len(perms[0])))
    for p in perms:
        out = tuple(p[x] for x in out)
    return out
