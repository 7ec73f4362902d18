#!/usr/bin/env python3
"""Deciding Turanability and tileability, and repairing the gap.

Run:  python demos/02_turanable_vs_tileable.py
"""

from eotile import (
    add_pendant,
    add_two_pendants,
    are_order_isomorphic,
    build_graph,
    c4_1243,
    d_graph,
    enumerate_orderings,
    extremal_vertices,
    is_tileable,
    is_turanable,
    is_universally_tileable,
    monotone_cycle,
)

d4 = d_graph(4)
print("D_4 is the ordering of the diamond with both fans increasing:")
for u, v, r in d4.edges:
    print(f"  rank {r}: u{u + 1}u{v + 1}")

print()
print("Turanable means embeddable into all four canonical orderings of K_4:")
print("  is_turanable(D_4) =", is_turanable(d4).value)

verdict = is_tileable(d4)
print("Tileable needs all twenty star-canonical orderings; D_4 fails one:")
print(f"  is_tileable(D_4) = {verdict.value}, failing type = {verdict.failing}")

print()
print("Scanning every ordering of the diamond confirms none is tileable:")
classes = list(enumerate_orderings(d4))
turanable = [g for g in classes if is_turanable(g).value]
print(f"  {len(classes)} classes, {len(turanable)} Turanable,",
      f"{sum(is_tileable(g).value for g in classes)} tileable")
print("  the Turanable one is D_4 itself:",
      are_order_isomorphic(turanable[0], d4) is not None)

print()
print("The four-cycle behaves the same way: its only Turanable ordering")
print("is 1243, and even that one is not tileable:")
print("  is_turanable(C_4^1243) =", is_turanable(c4_1243()).value)
print("  is_tileable(C_4^1243)  =", is_tileable(c4_1243()).value)

print()
print("Pendant edges at a minimal and a maximal vertex repair tileability.")
minimal, maximal = extremal_vertices(d4)
print(f"  minimal vertices of D_4: {sorted(minimal)}, maximal: {sorted(maximal)}")
f6 = add_two_pendants(d4, min(minimal), min(maximal))
print("  F_6 = D_4 + two pendants is tileable:", is_tileable(f6).value)
f7 = add_pendant(f6, 4, "below")
print("  one more pendant below keeps it tileable:", is_tileable(f7).value)

print()
print("Universal tileability (every ordering works) is rare:")
for name, graph in [
    ("two disjoint stars", build_graph(5, [(0, 1, 1), (0, 2, 2), (3, 4, 3)])),
    ("monotone C_4", monotone_cycle(4)),
    ("the diamond", d4),
]:
    print(f"  {name}: {is_universally_tileable(graph)}")
