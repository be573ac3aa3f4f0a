"""Shared generators for the seeded random test suites."""

from isospace.altspace import AltMatrixSpace
from isospace.bipartite import MatrixSpace
from isospace.ffield import Matrix, PrimeField
from isospace.graphs import Graph

F2 = PrimeField(2)
F3 = PrimeField(3)


def random_alternating(rng, field, n):
    ent = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randrange(field.p)
            ent[i][j] = v
            ent[j][i] = (-v) % field.p
    return Matrix.from_rows(field, ent)


def random_space(rng, field, n, m):
    return AltMatrixSpace.from_generators(
        field, n, [random_alternating(rng, field, n) for _ in range(m)])


def random_matrix_space(rng, field, s, t, m):
    mats = [Matrix.from_rows(field, [[rng.randrange(field.p) for _ in range(t)]
                                     for _ in range(s)]) for _ in range(m)]
    return MatrixSpace.from_generators(field, s, t, mats)


def random_graph(rng, n, p=0.5):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < p])


def symplectic_form(field, n):
    """Non-degenerate alternating form [[0, I], [-I, 0]] on F^n, n even."""
    assert n % 2 == 0
    h = n // 2
    ent = [[0] * n for _ in range(n)]
    for i in range(h):
        ent[i][h + i] = 1
        ent[h + i][i] = (-1) % field.p
    return Matrix.from_rows(field, ent)
