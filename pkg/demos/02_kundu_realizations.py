#!/usr/bin/env python3
"""Walkthrough: realizations that carry a spanning k-regular subgraph.

Whenever pi and pi - k are both graphic, some realization of pi contains a
k-factor.  The builder colors that factor "residual", the remaining
realization edges black, and the non-edges of K_n white.
"""

from factorpack import kundu_realize
from factorpack.coloring import BLACK, RESIDUAL

for pi, k in [((3, 3, 3, 3), 3), ((4, 4, 4, 4, 3, 3), 3), ((2, 2, 2, 2, 2), 2)]:
    real = kundu_realize(pi, k, seed=0)
    residual = real.class_graph(RESIDUAL)
    print(f"pi={pi}, k={k}")
    print(f"  residual ({k}-regular): {residual.sorted_edges()}")
    print(f"  black leftovers:        {real.edges_of(BLACK)}")
    print(f"  realization degrees:    {list(real.degrees)}")
    print()

print("The residual class is regular even when pi is not:")
real = kundu_realize((5, 4, 4, 3, 3, 3), 3, seed=0)
print("  pi =", list(real.degrees))
print("  residual degrees:", real.class_graph(RESIDUAL).degrees())
