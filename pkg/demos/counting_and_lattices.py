#!/usr/bin/env python3
"""Counting oracles: Gaussian binomials, the isotropic lattice of a
non-degenerate form, and the two maximal-isotropic enumerations.

Run: python3 demos/counting_and_lattices.py
"""

from isospace import (AltMatrixSpace, PrimeField, enumerate_isotropic_lattice,
                      enumerate_maximal_branch, enumerate_maximal_filter,
                      enumerate_subspaces, gaussian_binomial,
                      isotropic_count_formula)
from isospace.ffield import Matrix

F2 = PrimeField(2)


def symplectic(field, n):
    h = n // 2
    ent = [[0] * n for _ in range(n)]
    for i in range(h):
        ent[i][h + i] = 1
        ent[h + i][i] = (-1) % field.p
    return Matrix.from_rows(field, ent)


print("Subspace counts of F_2^4 per dimension, enumeration vs. formula:")
for d in range(5):
    count = sum(1 for _ in enumerate_subspaces(F2, 4, d))
    print(f"  dim {d}: enumerated {count:3d}   binomial {gaussian_binomial(4, d, 2):3d}")

print()
for n in (2, 4, 6):
    sp = AltMatrixSpace(F2, n, [symplectic(F2, n)])
    lat = enumerate_isotropic_lattice(sp)
    got = [len(level) for level in lat.levels]
    want = [isotropic_count_formula(n, d, 2) for d in range(n // 2 + 1)]
    print(f"isotropic spaces of the non-degenerate form on F_2^{n}: "
          f"lattice {got} vs formula {want}")
    mf = enumerate_maximal_filter(sp)
    mb = enumerate_maximal_branch(sp)
    print(f"  maximal: filter {len(mf)}, branch {len(mb)}, "
          f"all of dimension {n // 2} "
          f"(Lagrangians; count = I(A, n/2) = {isotropic_count_formula(n, n // 2, 2)})")
