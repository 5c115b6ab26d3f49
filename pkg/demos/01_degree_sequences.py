#!/usr/bin/env python3
"""Walkthrough: graphic sequences, realizations, and degree-preserving shuffles."""

from factorpack import (
    enumerate_graphic,
    erdos_gallai_graphic,
    havel_hakimi_realize,
    switch_randomize,
)

print("=" * 64)
print("Degree sequences and realizations")
print("=" * 64)

for seq in [(2, 2, 2, 2), (3, 3, 1, 1), (3, 3, 2, 2, 1, 1)]:
    print(f"{seq} graphic? {erdos_gallai_graphic(seq)}")

print()
print("A deterministic realization of (3,3,2,2,1,1):")
g = havel_hakimi_realize([3, 3, 2, 2, 1, 1])
print("  edges:", g.sorted_edges())
print("  degrees:", g.degrees())

print()
print("Two-switch shuffles keep every degree (same multiset, different graph):")
for seed in (1, 2, 3):
    shuffled = switch_randomize(g, steps=50, seed=seed)
    print(f"  seed={seed}: edges {shuffled.sorted_edges()}  degrees {shuffled.degrees()}")

print()
print("All graphic sequences on 4 vertices:")
for ds in enumerate_graphic(4, 3):
    print(" ", ds.degrees)
