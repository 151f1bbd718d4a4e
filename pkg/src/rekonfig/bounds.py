"""Quantitative machinery around the guaranteed value mu = |I| - k: the
intersecting-family bound on shortest sequence length, greedy coloring, and
the constructive three-move shortcut sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import PreconditionError
from .exact import Budget, max_independent_set
from .graph import (
    Graph,
    ReconfigSequence,
    VertexSet,
    check_vertex_set,
    closed_neighborhood,
    is_independent_set,
)


@dataclass(frozen=True)
class LengthBound:
    """Upper bound on the length of a shortest k-TJ sequence, k = set_size - mu.

    Every second set of a shortest sequence pairwise intersects in fewer than
    mu vertices, so those sets form a family whose size is at most
    C(n, mu) / C(set_size, mu); hence floor(length/2) + 1 cannot exceed that
    ratio. binomial_bound keeps the ratio exact (no floats); loose_bound is
    the (n / (set_size - mu))^mu form reported for display.
    """

    n: int
    set_size: int
    mu: int
    binomial_bound: Fraction
    loose_bound: Fraction
    max_length: int


def shortest_length_bound(n: int, set_size: int, mu: int) -> LengthBound:
    """Exact-arithmetic length bound; mu = 0 forces max_length = 1."""
    if not (0 <= mu < set_size <= n):
        raise PreconditionError(
            f"need 0 <= mu < set_size <= n, got mu={mu}, set_size={set_size}, n={n}"
        )
    bound = Fraction(comb(n, mu), comb(set_size, mu))
    # floor(l/2) + 1 <= bound, with floor(l/2) integral, gives
    # l <= 2*(floor(bound) - 1) + 1.
    max_length = 2 * (int(bound) - 1) + 1
    loose = Fraction(n, set_size - mu) ** mu
    return LengthBound(n, set_size, mu, bound, loose, max_length)


def greedy_coloring(g: Graph) -> tuple[int, ...]:
    """Proper coloring with at most max_degree + 1 colors: ascending vertex
    id, smallest available color."""
    colors: list[int] = [-1] * g.vertex_count
    for v in range(g.vertex_count):
        taken = {colors[u] for u in g.neighbors(v) if colors[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return tuple(colors)


def find_simple_sequence(
    g: Graph, i, j, mu: int, budget: Budget | None = None
) -> ReconfigSequence | None:
    """Constructive shortcut: anchors A in i and B in j of size mu, residue
    independent set I* of size k = |i| - mu found outside N[A union B], and
    the four-step walk <i, A+I*, B+I*, j>.

    Returns None when the shortcut fails; that means nothing about
    reachability (fall back to the exact solver). The anchor sets are the
    lexicographically smallest mu-subsets. I* is taken from the largest
    greedy-coloring color class of the residue graph, with an exhaustive
    maximum-independent-set fallback when the class is too small.
    """
    si = check_vertex_set(g, i)
    sj = check_vertex_set(g, j)
    for name, s in (("i", si), ("j", sj)):
        if not is_independent_set(g, s):
            raise PreconditionError(f"{name} is not an independent set")
    if len(si) != len(sj):
        raise PreconditionError(f"set sizes differ: {len(si)} vs {len(sj)}")
    if si == sj:
        return ReconfigSequence((si,))
    if mu < 1 or 2 * mu > len(si):
        # 2*mu == |i| still works: the middle hop swaps exactly mu <= k tokens
        raise PreconditionError(f"need 1 <= mu and 2*mu <= |i|, got mu={mu}, |i|={len(si)}")
    a = frozenset(sorted(si)[:mu])
    b = frozenset(sorted(sj)[:mu])
    k = len(si) - mu
    removed = closed_neighborhood(g, a | b)
    residue_vertices = sorted(set(range(g.vertex_count)) - removed)
    if len(residue_vertices) < k:
        return None
    sub, old_ids = g.induced_subgraph(residue_vertices)
    colors = greedy_coloring(sub)
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    star: VertexSet | None = None
    if by_color:
        best = max(by_color.values(), key=lambda cl: (len(cl), -min(cl, default=0)))
        if len(best) >= k:
            star = frozenset(old_ids[v] for v in best[:k])
    if star is None:
        big = max_independent_set(sub, budget)
        if len(big) >= k:
            star = frozenset(old_ids[v] for v in sorted(big)[:k])
    if star is None:
        return None
    return ReconfigSequence((si, a | star, b | star, sj))
