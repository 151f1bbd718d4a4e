#!/usr/bin/env python3
"""Sweep the XP vertex-cover algorithm against exhaustive reachability.

For every graph in the chosen pool, every pair of equal-size vertex covers
and every guaranteed value mu, compares xp_vcr_solve with the connected
components of the explicit cover reconfiguration graph, and prints one
summary row per vertex count.

Usage:
    python scripts/xp_agreement_sweep.py [--max-n 7] [--random 100] [--seed 1]
"""

import argparse
import itertools
import random
import sys
import time
from collections import defaultdict

from rekonfig.exact import feasible_masks
from rekonfig.graph import FeasibilityKind, mask_to_set, new_graph
from rekonfig.xp import xp_vcr_solve


def connected_edge_subsets(n):
    all_edges = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(all_edges)):
        edges = [all_edges[i] for i in range(len(all_edges)) if (bits >> i) & 1]
        if not edges and n > 1:
            continue
        seen = {0}
        frontier = [0]
        adj = defaultdict(list)
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        while frontier:
            u = frontier.pop()
            for v in adj[u]:
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        if len(seen) == n:
            yield edges


def union_find_labels(count, edges):
    parent = list(range(count))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
    return [find(i) for i in range(count)]


def sweep_graph(g):
    checks = mismatches = 0
    for size in range(1, g.vertex_count + 1):
        covers = feasible_masks(g, FeasibilityKind.VERTEX_COVER, size)
        if len(covers) < 2:
            continue
        c = len(covers)
        sets = [mask_to_set(m) for m in covers]
        inter = [[(covers[i] & covers[j]).bit_count() for j in range(c)] for i in range(c)]
        for mu in range(1, size):
            labels = union_find_labels(
                c,
                ((i, j) for i in range(c) for j in range(i + 1, c) if inter[i][j] >= mu),
            )
            for i in range(c):
                for j in range(c):
                    got = xp_vcr_solve(g, sets[i], sets[j], mu)
                    checks += 1
                    if got != (labels[i] == labels[j]):
                        mismatches += 1
    return checks, mismatches


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=5, help="exhaustive sweep limit")
    parser.add_argument("--random", type=int, default=50, help="extra random graphs, n <= 10")
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    pools = {}
    for n in range(1, args.max_n + 1):
        pools[f"exhaustive n={n}"] = [new_graph(n, e) for e in connected_edge_subsets(n)]
    randoms = []
    for _ in range(args.random):
        n = rng.randint(4, 10)
        p = rng.uniform(0.2, 0.7)
        randoms.append(
            new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        )
    pools[f"random n<=10 ({args.random})"] = randoms

    total_mismatch = 0
    print(f"{'pool':<24} {'graphs':>7} {'checks':>10} {'mismatch':>9} {'secs':>7}")
    for name, graphs in pools.items():
        t0 = time.time()
        checks = mismatches = 0
        for g in graphs:
            dc, dm = sweep_graph(g)
            checks += dc
            mismatches += dm
        total_mismatch += mismatches
        print(f"{name:<24} {len(graphs):>7} {checks:>10} {mismatches:>9} {time.time()-t0:>7.1f}")
    print("agreement:", "100%" if total_mismatch == 0 else f"{total_mismatch} mismatches")
    return 0 if total_mismatch == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
