#!/usr/bin/env python3
"""Monotone cycles are tileable when odd, hopeless when even.

Run:  python demos/03_monotone_cycles_and_paths.py
"""

from itertools import permutations

import numpy as np

from eotile import (
    build_graph,
    canonical_clique,
    find_embedding,
    find_monotone_path,
    is_tileable,
    is_turanable,
    monotone_cycle,
    monotone_hamilton_cycle,
    star_canonical_clique,
)
from eotile.canonical import ALL_STAR_TYPES, CanonicalType

print("Monotone odd cycles are tileable because every star-canonical")
print("clique carries a spanning monotone Hamilton cycle:")
print("  is_tileable(monotone C_5) =", is_tileable(monotone_cycle(5)).value)
print()
print("The spanning cycles, one per star type (size 5):")
for kind in ALL_STAR_TYPES[:6]:
    cycle = monotone_hamilton_cycle(kind, 5)
    graph, x = star_canonical_clique(kind, 5)
    names = ["x" if v == x else f"v{v + 1}" for v in cycle]
    print(f"  {kind.label:22s} {' -> '.join(names)}")
print("  ... and similarly for the remaining fourteen types.")

print()
print("Even cycles fail already in the min ordering.  Exhausting all")
print("Hamilton cycles of min K_6 finds no monotone one:")
host = canonical_clique(CanonicalType.MIN, 6)


def monotone(order):
    ranks = [host.rank_of(order[i], order[(i + 1) % 6]) for i in range(6)]
    for direction in (ranks, ranks[::-1]):
        for s in range(6):
            r = direction[s:] + direction[:s]
            if all(a < b for a, b in zip(r, r[1:])):
                return True
    return False


count = sum(monotone((0, *rest)) for rest in permutations(range(1, 6)))
print(f"  monotone spanning cycles found: {count}")
print("  engine agrees:", find_embedding(monotone_cycle(6), host) is None)
print("  hence is_turanable(monotone C_6) =", is_turanable(monotone_cycle(6)).value)

print()
print("Monotone paths are far more robust: above the k(k+1)n/2 edge")
print("threshold one always exists.")
rng = np.random.default_rng(0)
pairs = [(u, v) for u in range(10) for v in range(u + 1, 10)]
picked = rng.choice(len(pairs), size=30, replace=False)
ranks = rng.permutation(30) + 1
host = build_graph(10, [(*pairs[int(i)], int(r)) for i, r in zip(picked, ranks)])
emb = find_monotone_path(host, 2)
print(f"  random 10-vertex host with 30 edges: path found at {emb.vertex_map}")
