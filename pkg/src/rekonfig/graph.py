"""Core graph types, feasibility predicates and reconfiguration adjacency.

Vertices are 0-based integers internally (file formats are 1-based, see
io_formats). All types are immutable after construction; every operation is a
pure function, so values can be shared freely across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator

from .errors import GraphConstructionError, PreconditionError, SizeMismatchError

VertexSet = frozenset[int]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with sorted adjacency lists.

    Invariants: no self-loops, no duplicate edges, adjacency is symmetric,
    and every neighbor id is < vertex_count. Use :func:`new_graph` instead of
    calling the constructor with raw adjacency.
    """

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Bitmask of neighbors per vertex (bit i set iff i is adjacent)."""
        masks = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.vertex_count):
            for v in self.adjacency[u]:
                if u < v:
                    yield (u, v)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.vertex_count)

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Subgraph induced by `keep`. Returns (subgraph, new-id -> old-id map)."""
        old_ids = sorted(set(keep))
        index = {old: new for new, old in enumerate(old_ids)}
        edges = [
            (index[u], index[v])
            for u in old_ids
            for v in self.adjacency[u]
            if u < v and v in index
        ]
        return new_graph(len(old_ids), edges), tuple(old_ids)


def new_graph(vertex_count: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a Graph from an edge list, deduplicating and symmetrizing.

    Raises GraphConstructionError naming the offending edge on a self-loop
    or an out-of-range endpoint.
    """
    if vertex_count < 0:
        raise GraphConstructionError(f"negative vertex count {vertex_count}")
    nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
    for u, v in edges:
        if u == v:
            raise GraphConstructionError(f"self-loop ({u},{v})")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphConstructionError(
                f"edge ({u},{v}) out of range for {vertex_count} vertices"
            )
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(vertex_count, tuple(tuple(sorted(s)) for s in nbrs))


def set_to_mask(x: Iterable[int]) -> int:
    m = 0
    for v in x:
        m |= 1 << v
    return m


def mask_to_set(m: int) -> VertexSet:
    return frozenset(iter_bits(m))


def iter_bits(m: int) -> Iterator[int]:
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def check_vertex_set(g: Graph, x: Iterable[int]) -> VertexSet:
    xs = frozenset(x)
    for v in xs:
        if not (0 <= v < g.vertex_count):
            raise PreconditionError(f"vertex {v} out of range for {g.vertex_count} vertices")
    return xs


def is_independent_set(g: Graph, x: Iterable[int]) -> bool:
    """True iff no edge of g has both endpoints in x."""
    xm = set_to_mask(x)
    masks = g.neighbor_masks
    return all(not (masks[v] & xm) for v in iter_bits(xm))


def is_vertex_cover(g: Graph, x: Iterable[int]) -> bool:
    """True iff every edge of g has at least one endpoint in x."""
    xm = set_to_mask(x)
    # x covers all edges iff V \ x is independent.
    out = g.full_mask & ~xm
    masks = g.neighbor_masks
    return all(not (masks[v] & out) for v in iter_bits(out))


def complement_set(g: Graph, x: Iterable[int]) -> VertexSet:
    return frozenset(range(g.vertex_count)) - frozenset(x)


def closed_neighborhood(g: Graph, x: Iterable[int]) -> VertexSet:
    """N[x]: x together with every vertex adjacent to x."""
    xm = set_to_mask(x)
    m = xm
    for v in iter_bits(xm):
        m |= g.neighbor_masks[v]
    return mask_to_set(m)


def open_neighborhood(g: Graph, x: Iterable[int]) -> VertexSet:
    xm = set_to_mask(x)
    m = 0
    for v in iter_bits(xm):
        m |= g.neighbor_masks[v]
    return mask_to_set(m & ~xm)


class FeasibilityKind(Enum):
    INDEPENDENT_SET = "is"
    VERTEX_COVER = "vc"


class RuleKind(Enum):
    KTJ = "ktj"
    KTS = "kts"


@dataclass(frozen=True)
class Rule:
    """Reconfiguration rule: jump or slide up to k tokens per step."""

    kind: RuleKind
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise PreconditionError(f"rule requires k >= 1, got {self.k}")


def is_feasible(g: Graph, kind: FeasibilityKind, x: Iterable[int]) -> bool:
    if kind is FeasibilityKind.INDEPENDENT_SET:
        return is_independent_set(g, x)
    return is_vertex_cover(g, x)


@dataclass(frozen=True)
class ReconfigInstance:
    """A reconfiguration question: transform start into target under rule."""

    graph: Graph
    kind: FeasibilityKind
    start: VertexSet
    target: VertexSet
    rule: Rule

    def __post_init__(self):
        object.__setattr__(self, "start", check_vertex_set(self.graph, self.start))
        object.__setattr__(self, "target", check_vertex_set(self.graph, self.target))
        if len(self.start) != len(self.target):
            raise SizeMismatchError(
                f"start has {len(self.start)} vertices, target has {len(self.target)}"
            )
        for name, s in (("start", self.start), ("target", self.target)):
            if not is_feasible(self.graph, self.kind, s):
                raise PreconditionError(f"{name} set is not feasible for {self.kind.value}")


@dataclass(frozen=True)
class ReconfigSequence:
    """Ordered list of vertex sets; the certificate format for all solvers."""

    steps: tuple[VertexSet, ...]

    def __post_init__(self):
        if len(self.steps) < 1:
            raise PreconditionError("a reconfiguration sequence needs at least one step")
        object.__setattr__(self, "steps", tuple(frozenset(s) for s in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.steps)

    def __getitem__(self, i):
        return self.steps[i]

    @property
    def length(self) -> int:
        """Number of transitions (one less than the number of steps)."""
        return len(self.steps) - 1


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    index: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.accepted


def adjacent_ktj(a: Iterable[int], b: Iterable[int], k: int) -> bool:
    """k-token-jumping adjacency: equal sizes and |a symmetric-diff b| <= 2k."""
    sa, sb = frozenset(a), frozenset(b)
    if len(sa) != len(sb):
        raise SizeMismatchError(f"set sizes differ: {len(sa)} vs {len(sb)}")
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    return len(sa ^ sb) <= 2 * k


def adjacent_kts(g: Graph, a: Iterable[int], b: Iterable[int], k: int) -> bool:
    """k-token-sliding adjacency: k-TJ plus a perfect matching, along edges of
    g, between the removed vertices (a minus b) and the added ones (b minus a)."""
    sa, sb = frozenset(a), frozenset(b)
    if not adjacent_ktj(sa, sb, k):
        return False
    from .matching import has_perfect_matching_between

    return has_perfect_matching_between(g, sa - sb, sb - sa)


def adjacent_under(inst_or_rule, g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    rule: Rule = inst_or_rule.rule if isinstance(inst_or_rule, ReconfigInstance) else inst_or_rule
    if rule.kind is RuleKind.KTJ:
        return adjacent_ktj(a, b, rule.k)
    return adjacent_kts(g, a, b, rule.k)


def verify_sequence(inst: ReconfigInstance, seq: ReconfigSequence) -> Verdict:
    """Check a certificate against an instance.

    ACCEPT iff the first step equals start, the last equals target, every
    step is feasible with cardinality |start|, and every consecutive pair is
    adjacent under the instance rule. All failures are REJECT verdicts with
    the index and reason of the first violation; nothing raises.
    """
    steps = seq.steps
    size = len(inst.start)
    if steps[0] != inst.start:
        return Verdict(False, 0, "first step differs from the start set")
    if steps[-1] != inst.target:
        return Verdict(False, len(steps) - 1, "last step differs from the target set")
    for i, s in enumerate(steps):
        if any(not (0 <= v < inst.graph.vertex_count) for v in s):
            return Verdict(False, i, "step contains an out-of-range vertex")
        if len(s) != size:
            return Verdict(False, i, f"step has size {len(s)}, expected {size}")
        if not is_feasible(inst.graph, inst.kind, s):
            return Verdict(False, i, f"step is not a feasible {inst.kind.value} set")
    for i in range(1, len(steps)):
        if not adjacent_under(inst.rule, inst.graph, steps[i - 1], steps[i]):
            return Verdict(
                False, i, f"steps {i - 1} and {i} are not adjacent under the rule"
            )
    return Verdict(True)


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of g plus the bijection line-vertex -> edge of g.

    Edge i and edge j are adjacent in the line graph iff they share an
    endpoint. Edges are numbered in lexicographic (u, v) order.
    """
    edge_list = tuple(g.edges())
    index_by_vertex: dict[int, list[int]] = {v: [] for v in range(g.vertex_count)}
    for i, (u, v) in enumerate(edge_list):
        index_by_vertex[u].append(i)
        index_by_vertex[v].append(i)
    line_edges = set()
    for incident in index_by_vertex.values():
        for i, j in itertools.combinations(incident, 2):
            line_edges.add((min(i, j), max(i, j)))
    return new_graph(len(edge_list), sorted(line_edges)), edge_list
