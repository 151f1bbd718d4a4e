"""Bipartite maximum matching (Hopcroft-Karp) and the König minimum vertex
cover, the polynomial subroutines behind k-TS adjacency and the XP edge
oracle.

Tie-breaking is deterministic everywhere (lowest id first) so golden tests
stay stable. Isolated vertices are assigned to the left side of a
bipartition and never enter a matching or a König cover.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, VertexSet, check_vertex_set

Matching = frozenset[tuple[int, int]]

_INF = float("inf")


@dataclass(frozen=True)
class Bipartition:
    """A 2-coloring of a graph: every edge joins left to right."""

    left: VertexSet
    right: VertexSet


def bipartition_of(g: Graph) -> Bipartition | None:
    """Deterministic 2-coloring, or None when g has an odd cycle.

    BFS from the lowest-id unvisited vertex per component; that vertex is
    colored left.
    """
    color: list[int | None] = [None] * g.vertex_count
    for root in range(g.vertex_count):
        if color[root] is not None:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] is None:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    left = frozenset(v for v in range(g.vertex_count) if color[v] == 0)
    right = frozenset(v for v in range(g.vertex_count) if color[v] == 1)
    return Bipartition(left, right)


def maximum_matching(g: Graph, bp: Bipartition) -> Matching:
    """Maximum-cardinality matching via Hopcroft-Karp phases.

    Runs in O(sqrt(n) * (n + m)). Returns edges as (u, v) pairs with u on
    the left side.
    """
    left = sorted(bp.left)
    pair_left: dict[int, int] = {}
    pair_right: dict[int, int] = {}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in left:
            if u not in pair_left:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = _INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in g.neighbors(u):
                if v not in pair_right:
                    if found == _INF:
                        found = dist[u] + 1
                else:
                    w = pair_right[v]
                    if dist[w] == _INF:
                        dist[w] = dist[u] + 1
                        queue.append(w)
        return found != _INF

    def dfs(u: int) -> bool:
        for v in g.neighbors(u):
            w = pair_right.get(v)
            if w is None:
                pair_left[u] = v
                pair_right[v] = u
                return True
            if dist[w] == dist[u] + 1 and dfs(w):
                pair_left[u] = v
                pair_right[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in left:
            if u not in pair_left:
                dfs(u)
    return frozenset(pair_left.items())


def konig_min_vertex_cover(g: Graph, bp: Bipartition) -> VertexSet:
    """Minimum vertex cover of a bipartite graph, size equal to the maximum
    matching (König equality).

    Constructed by alternating-path reachability from unmatched left
    vertices: cover = (left not reached) union (right reached).
    """
    matching = maximum_matching(g, bp)
    match_of: dict[int, int] = {}
    for u, v in matching:
        match_of[u] = v
        match_of[v] = u
    reached: set[int] = set()
    queue: deque[int] = deque()
    for u in sorted(bp.left):
        if u not in match_of:
            reached.add(u)
            queue.append(u)
    while queue:
        u = queue.popleft()  # u is always on the left side here
        for v in g.neighbors(u):
            if v in reached:
                continue
            reached.add(v)
            w = match_of.get(v)
            if w is not None and w not in reached:
                reached.add(w)
                queue.append(w)
    cover = (bp.left - reached) | (bp.right & reached)
    # Left vertices never reached include matched-but-unreachable ones only;
    # isolated left vertices are unmatched hence reached, so never covered.
    return frozenset(cover)


def has_perfect_matching_between(g: Graph, a, b) -> bool:
    """True iff the bipartite graph induced by edges of g between the
    disjoint sets a and b has a matching saturating both sides.

    False whenever |a| != |b|; vacuously true for two empty sets.
    """
    sa = check_vertex_set(g, a)
    sb = check_vertex_set(g, b)
    if len(sa) != len(sb):
        return False
    if not sa:
        return True
    # Hopcroft-Karp on the subgraph of a-b edges only.
    b_mask = 0
    for v in sb:
        b_mask |= 1 << v
    pair_left: dict[int, int] = {}
    pair_right: dict[int, int] = {}
    dist: dict[int, float] = {}
    left = sorted(sa)

    def nbrs(u: int):
        for v in g.neighbors(u):
            if (b_mask >> v) & 1:
                yield v

    def bfs() -> bool:
        queue: deque[int] = deque()
        for u in left:
            if u not in pair_left:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = _INF
        while queue:
            u = queue.popleft()
            if dist[u] >= found:
                continue
            for v in nbrs(u):
                w = pair_right.get(v)
                if w is None:
                    if found == _INF:
                        found = dist[u] + 1
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found != _INF

    def dfs(u: int) -> bool:
        for v in nbrs(u):
            w = pair_right.get(v)
            if w is None or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_left[u] = v
                pair_right[v] = u
                return True
        dist[u] = _INF
        return False

    size = 0
    while bfs():
        for u in left:
            if u not in pair_left and dfs(u):
                size += 1
    return size == len(sa)
