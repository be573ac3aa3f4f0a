#!/usr/bin/env python3
"""Quantum channels from connected graphs: periodicity decides isotropic
2-decomposability, and gate fidelity vanishes exactly on isotropic spaces.

Run: python3 demos/quantum_walks.py
"""

import numpy as np

from isospace import (ComplexSubspace, Graph, channel_from_graph,
                      decide_iso_2_decomposition, fidelity_pure,
                      is_bipartite_bfs, is_irreducible, is_isotropic_subspace,
                      period)

for g, name in [(Graph(2, [(0, 1)]), "K_2"), (Graph.complete(3), "K_3"),
                (Graph.cycle(4), "C_4"), (Graph.cycle(5), "C_5")]:
    ch = channel_from_graph(g)
    ok, rho = is_irreducible(ch)
    bip = is_bipartite_bfs(g)[0]
    print(f"{name}: {len(ch.kraus)} Kraus operators, irreducible: {ok}, "
          f"period {period(ch)}, bipartite: {bip}, "
          f"2-decomposable: {decide_iso_2_decomposition(ch)}")

print()
k2 = channel_from_graph(Graph(2, [(0, 1)]))
e1 = np.array([1.0, 0.0])
plus = np.array([1.0, 1.0]) / np.sqrt(2)
print("gate fidelity against the identity on K_2's channel:")
print(f"  on e_1 (spans an isotropic line): {fidelity_pure(k2, e1):.3f}")
print(f"  on (e_1+e_2)/sqrt(2):             {fidelity_pure(k2, plus):.3f}")
iso = ComplexSubspace.from_vectors(2, [e1])
print(f"  <e_1> isotropic: {is_isotropic_subspace(k2, iso)} "
      "(fidelity 0 exactly on isotropic spaces)")
