#!/usr/bin/env python3
"""Degree-driven decompositions, the dimension-2 decision, and the
right-degree gadget.

Run: python3 demos/degrees_and_gadgets.py
"""

import random

from isospace import (Graph, PrimeField, dim2_gadget, greedy_deg_decomposition,
                      greedy_part_bound, has_isotropic_dim2, max_degree,
                      right_degree_min, singular_exists_brute,
                      space_from_graph, validate_decomposition)
from isospace.bipartite import MatrixSpace
from isospace.ffield import Matrix

F3 = PrimeField(3)

print("Greedy decomposition bounded by the maximum degree:")
for g, name in [(Graph.complete(3), "K_3"), (Graph.cycle(6), "C_6"),
                (Graph.path(5), "P_5")]:
    sp = space_from_graph(g, F3)
    parts = greedy_deg_decomposition(sp)
    validate_decomposition(sp, parts)
    delta = max_degree(sp)
    print(f"  {name}: Delta = {delta}, greedy parts = {len(parts)} "
          f"(bound {greedy_part_bound(sp.n, delta)})")

print()
print("Does a dimension-2 isotropic space exist? (one radical sweep per line)")
for g, name in [(Graph.complete(3), "K_3"), (Graph.path(3), "P_3")]:
    sp = space_from_graph(g, F3)
    ok, wit = has_isotropic_dim2(sp)
    print(f"  {name}: {ok}" + (f", witness pair {wit}" if ok else ""))

print()
print("The right-degree gadget ties singularity questions to the dim-2 decision:")
rng = random.Random(4)
n, m = 2, 2
slices = [Matrix.from_rows(F3, [[rng.randrange(3) for _ in range(m)]
                                for _ in range(n)]) for _ in range(n)]
gadget = dim2_gadget(slices)
rdeg = right_degree_min(slices)
ok, _ = has_isotropic_dim2(gadget)
print(f"  random slices (n={n}, m={m}): min right degree {rdeg}; "
      f"gadget on F_3^{gadget.n} has dim-2 isotropic: {ok} "
      f"(agree: {(rdeg < n) == ok})")

scalars = MatrixSpace.from_generators(F3, 3, 3, [Matrix.identity(F3, 3)])
print(f"  <I_3>: nonzero singular member exists: "
      f"{singular_exists_brute(scalars) is not None}")
