#!/usr/bin/env python3
"""Tour of the canonical and star-canonical orderings.

Run:  python demos/01_canonical_orderings.py
"""

from eotile import (
    are_order_isomorphic,
    canonical_clique,
    canonical_labels,
    classify_star_canonical,
    induced_subgraph,
    reverse,
    star_canonical_clique,
)
from eotile.canonical import ALL_STAR_TYPES, CANONICAL_ORDER, CanonicalType

print("The four canonical orderings of K_4, by their standard labelings")
print("=" * 66)
for kind in CANONICAL_ORDER:
    labels = canonical_labels(kind, 4)
    ordered = sorted(labels.items(), key=lambda kv: kv[1])
    pretty = "  ".join(f"v{u + 1}v{v + 1}:{label}" for (u, v), label in ordered)
    print(f"{kind.value:8s} {pretty}")

print()
print("Reversal swaps min with max (relabeling the vertices):")
mn = canonical_clique(CanonicalType.MIN, 5)
mx = canonical_clique(CanonicalType.MAX, 5)
cert = are_order_isomorphic(reverse(mn), mx)
print(f"  reverse(min K_5) ~ max K_5 via vertex map {cert.vertex_map}")

print()
print("Canonical orderings are hereditary: any subset induces the same type.")
sub = induced_subgraph(mn, {1, 2, 4})
print(
    "  min K_5 restricted to {v2, v3, v5} is min K_3:",
    are_order_isomorphic(sub, canonical_clique(CanonicalType.MIN, 3)) is not None,
)

print()
print("Star-canonical orderings add a special vertex x; twenty types exist.")
print("Labels of the middle increasing ordering over a min K_4 part:")
graph, x = star_canonical_clique(ALL_STAR_TYPES[16], 5)  # middle-inc.min
for u, v, r in graph.edges:
    name = f"x·v{u + 1}" if v == x else f"v{u + 1}v{v + 1}"
    print(f"  rank {r}: {name}")

print()
print("Every canonical ordering is itself star-canonical; the classifier")
print("recovers how:")
for kind in CANONICAL_ORDER:
    found = classify_star_canonical(canonical_clique(kind, 6))
    for star, special, _ in sorted(found, key=lambda t: t[0].label):
        role = "v_1" if special == 0 else "v_n"
        print(f"  {kind.value:8s} = {star.label:22s} with x playing {role}")
