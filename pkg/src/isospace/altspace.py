"""Alternating matrix spaces over prime fields.

An alternating matrix space is the span of alternating n x n matrices: zero
diagonal and A^t = -A (over F_2 that reads: symmetric with zero diagonal).
The operations here mirror the graph-theoretic vocabulary: radicals play
the role of non-neighbourhoods, degrees the role of vertex degrees,
restriction the role of induced subgraphs.
"""

from __future__ import annotations

from itertools import product

from .errors import as_guard
from .ffield import (Matrix, PrimeField, Subspace, all_vectors, kernel,
                     rref_canonicalize, vstack)


def is_alternating(m: Matrix) -> bool:
    if m.rows != m.cols:
        return False
    p = m.field.p
    n = m.rows
    for i in range(n):
        if m[i, i] != 0:
            return False
        for j in range(i + 1, n):
            if m[i, j] != (-m[j, i]) % p:
                return False
    return True


def elementary_alternating(field: PrimeField, n: int, i: int, j: int) -> Matrix:
    """e_i e_j^t - e_j e_i^t for i < j."""
    if not (0 <= i < j < n):
        raise ValueError("need 0 <= i < j < n")
    ent = [0] * (n * n)
    ent[i * n + j] = 1
    ent[j * n + i] = field.p - 1
    return Matrix(field, n, n, ent)


class AltMatrixSpace:
    """Span of an ordered, linearly independent basis of alternating matrices."""

    __slots__ = ("field", "n", "basis")

    def __init__(self, field: PrimeField, n: int, basis):
        self.field = field
        self.n = int(n)
        self.basis = tuple(basis)
        self.validate()

    @classmethod
    def from_generators(cls, field: PrimeField, n: int, mats) -> "AltMatrixSpace":
        """Span of arbitrary alternating generators, re-reduced to an
        independent ordered basis with deterministic (row-major) pivots."""
        mats = list(mats)
        for m in mats:
            if not is_alternating(m):
                raise ValueError("generator is not alternating")
        if not mats:
            return cls(field, n, ())
        flat = Matrix(field, len(mats), n * n, [e for m in mats for e in m.entries])
        red, rank = rref_canonicalize(flat)
        basis = [Matrix(field, n, n, red.row(i)) for i in range(rank)]
        return cls(field, n, basis)

    @classmethod
    def zero_space(cls, field: PrimeField, n: int) -> "AltMatrixSpace":
        return cls(field, n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def validate(self) -> None:
        """Check the alternating condition and basis independence."""
        for m in self.basis:
            if m.field != self.field or m.rows != self.n or m.cols != self.n:
                raise ValueError("basis matrix has wrong field or shape")
            if not is_alternating(m):
                raise ValueError("not alternating: nonzero diagonal or not skew-symmetric")
        if self.basis:
            flat = Matrix(self.field, len(self.basis), self.n * self.n,
                          [e for m in self.basis for e in m.entries])
            if flat.rank() != len(self.basis):
                raise ValueError("dependent basis")

    def combination(self, coeffs) -> Matrix:
        p = self.field.p
        ent = [0] * (self.n * self.n)
        for c, m in zip(coeffs, self.basis):
            if c % p:
                for idx, e in enumerate(m.entries):
                    ent[idx] += c * e
        return Matrix(self.field, self.n, self.n, [e % p for e in ent])

    def bilinear(self, u, v) -> tuple:
        """(u^t A_1 v, ..., u^t A_m v)."""
        p = self.field.p
        out = []
        for m in self.basis:
            av = m.apply(v)
            out.append(sum(x * y for x, y in zip(u, av)) % p)
        return tuple(out)

    def __eq__(self, other):
        return (isinstance(other, AltMatrixSpace) and self.field == other.field
                and self.n == other.n and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field.p, self.n, tuple(m.entries for m in self.basis)))

    def __repr__(self):
        return f"AltMatrixSpace(F{self.field.p}, n={self.n}, dim={self.dim})"


def radical_space(space: AltMatrixSpace) -> Subspace:
    """rad(A): the isolated vectors, i.e. the intersection of the kernels."""
    if space.dim == 0:
        return Subspace.full(space.field, space.n)
    stacked = space.basis[0]
    for m in space.basis[1:]:
        stacked = vstack(stacked, m)
    return kernel(stacked)


def rad_of(space: AltMatrixSpace, target) -> Subspace:
    """rad_A(target): all u with u^t A v = 0 for every v in the target.

    target may be a vector or a Subspace; for a subspace the constraints
    range over its basis.
    """
    if isinstance(target, Subspace):
        if target.n != space.n:
            raise ValueError("ambient mismatch")
        vecs = target.basis_rows()
    else:
        if len(target) != space.n:
            raise ValueError("vector length mismatch")
        vecs = [tuple(target)]
    rows = []
    for m in space.basis:
        for v in vecs:
            rows.append(m.apply(v))
    if not rows:
        return Subspace.full(space.field, space.n)
    constraint = Matrix.from_rows(space.field, rows)
    return kernel(constraint)


def degree(space: AltMatrixSpace, v) -> int:
    """deg_A(v) = dim <A v : A in basis> = rank of [A_1 v | ... | A_m v]."""
    if len(v) != space.n:
        raise ValueError("vector length mismatch")
    rows = [m.apply(v) for m in space.basis]
    if not rows:
        return 0
    return Matrix.from_rows(space.field, rows).rank()


def codegree(space: AltMatrixSpace, v) -> int:
    return space.n - degree(space, v)


def max_degree(space: AltMatrixSpace, guard=None) -> int:
    """Delta(A): maximum of deg_A over all q^n - 1 nonzero vectors (guarded)."""
    g = as_guard(guard)
    best = 0
    for v in all_vectors(space.field, space.n, guard=g, nonzero=True):
        d = degree(space, v)
        if d > best:
            best = d
            if best == min(space.n, space.dim):
                break
    return best


def restrict(space: AltMatrixSpace, u: Subspace) -> AltMatrixSpace:
    """A|_U via T = transpose of u's RREF basis: span of {T^t A T}."""
    if u.n != space.n:
        raise ValueError("ambient mismatch")
    b = u.basis              # d x n
    bt = b.transpose()       # n x d
    mats = [(b @ m) @ bt for m in space.basis]
    return AltMatrixSpace.from_generators(space.field, u.dim, mats)


def isometry_transform(space: AltMatrixSpace, t: Matrix) -> AltMatrixSpace:
    """The isometric space T^t A T; raises ValueError when t is singular."""
    if t.rows != space.n or t.cols != space.n:
        raise ValueError("transform shape mismatch")
    if t.rank() != space.n:
        raise ValueError("transform is singular")
    tt = t.transpose()
    mats = [(tt @ m) @ t for m in space.basis]
    return AltMatrixSpace.from_generators(space.field, space.n, mats)


def is_isotropic(space: AltMatrixSpace, u: Subspace) -> bool:
    """True iff b_i^t A b_j = 0 for all basis pairs of u and all basis A."""
    if u.n != space.n:
        raise ValueError("ambient mismatch")
    rows = u.basis_rows()
    for m in space.basis:
        images = [m.apply(r) for r in rows]
        p = space.field.p
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                if sum(x * y for x, y in zip(rows[i], images[j])) % p:
                    return False
    return True


def nondegenerate_part(space: AltMatrixSpace):
    """Restrict to a complement of rad(A).

    Returns (space', T) with T invertible, columns ordered [complement |
    radical], such that T^t A T is block-diagonal with the nondegenerate
    space' in the leading block.  space' has zero radical.
    """
    rad = radical_space(space)
    comp = rad.coordinate_complement()
    cols = comp.basis_rows() + rad.basis_rows()
    t = Matrix.from_rows(space.field, cols).transpose() if cols else \
        Matrix(space.field, space.n, 0, ())
    part = restrict(space, comp)
    return part, t


def max_rank_bruteforce(space: AltMatrixSpace, guard=None) -> int:
    """rk(A): maximum rank over all q^m linear combinations (guarded)."""
    g = as_guard(guard)
    q = space.field.p
    m = space.dim
    g.require(q**m)
    best = 0
    for coeffs in product(range(q), repeat=m):
        g.tick()
        r = space.combination(coeffs).rank()
        if r > best:
            best = r
            if best == space.n:
                break
    return best
