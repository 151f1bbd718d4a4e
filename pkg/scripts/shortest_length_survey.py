#!/usr/bin/env python3
"""Survey shortest k-TJ sequence lengths against the intersecting-family
bound.

Samples random independent-set instances with k = size - mu, solves each
exactly with shortest certificates, and tabulates the observed maximum
length per (size, mu) next to the proven ceiling. The slack column shows
how far below the bound real instances stay.

Usage:
    python scripts/shortest_length_survey.py [--samples 400] [--max-n 9] [--seed 3]
"""

import argparse
import itertools
import random
import sys
from collections import defaultdict

from rekonfig.bounds import shortest_length_bound
from rekonfig.exact import solve_exact
from rekonfig.graph import (
    FeasibilityKind,
    ReconfigInstance,
    Rule,
    RuleKind,
    is_independent_set,
    new_graph,
)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--samples", type=int, default=400)
    parser.add_argument("--max-n", type=int, default=9)
    parser.add_argument("--seed", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    observed = defaultdict(lambda: (0, 0))  # (size, mu) -> (count, max length)
    bound_for = {}
    produced = 0
    attempts = 0
    while produced < args.samples and attempts < args.samples * 20:
        attempts += 1
        n = rng.randint(3, args.max_n)
        p = rng.uniform(0.1, 0.7)
        g = new_graph(
            n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        )
        size = rng.randint(2, max(2, n // 2))
        family = [
            frozenset(c)
            for c in itertools.combinations(range(n), size)
            if is_independent_set(g, c)
        ]
        if len(family) < 2:
            continue
        i, j = rng.sample(family, 2)
        mu = rng.randint(1, size - 1)
        inst = ReconfigInstance(
            g, FeasibilityKind.INDEPENDENT_SET, i, j, Rule(RuleKind.KTJ, size - mu)
        )
        res = solve_exact(inst, want_shortest=True)
        if not res.reachable:
            continue
        produced += 1
        length = res.shortest.length
        bound = shortest_length_bound(n, size, mu)
        if (length // 2) + 1 > bound.binomial_bound:
            print("BOUND VIOLATION", n, size, mu, length, bound.binomial_bound)
            return 1
        count, best = observed[(size, mu)]
        observed[(size, mu)] = (count + 1, max(best, length))
        key = (size, mu)
        bound_for[key] = max(bound_for.get(key, 0), bound.max_length)

    print(f"{'size':>4} {'mu':>3} {'instances':>9} {'max length':>10} {'bound':>6} {'slack':>6}")
    for (size, mu), (count, best) in sorted(observed.items()):
        ceiling = bound_for[(size, mu)]
        print(f"{size:>4} {mu:>3} {count:>9} {best:>10} {ceiling:>6} {ceiling - best:>6}")
    print(f"{produced} reachable instances, zero bound violations")
    return 0


if __name__ == "__main__":
    sys.exit(main())
