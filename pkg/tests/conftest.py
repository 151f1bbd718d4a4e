import random

import pytest

from rekonfig.graph import FeasibilityKind, Graph, new_graph


@pytest.fixture
def c4() -> Graph:
    return new_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def k4() -> Graph:
    return new_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture
def k33() -> Graph:
    return new_graph(6, [(i, j + 3) for i in range(3) for j in range(3)])


@pytest.fixture
def path3() -> Graph:
    return new_graph(3, [(0, 1), (1, 2)])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return new_graph(n, edges)


def random_bipartite(rng: random.Random, left: int, right: int, p: float) -> Graph:
    edges = [
        (u, left + v) for u in range(left) for v in range(right) if rng.random() < p
    ]
    return new_graph(left + right, edges)


def brute_feasible(g: Graph, kind: FeasibilityKind, size: int):
    """Reference enumeration straight from the definition."""
    import itertools

    from rekonfig.graph import is_independent_set, is_vertex_cover

    check = is_independent_set if kind is FeasibilityKind.INDEPENDENT_SET else is_vertex_cover
    return [
        frozenset(c)
        for c in itertools.combinations(range(g.vertex_count), size)
        if check(g, c)
    ]
