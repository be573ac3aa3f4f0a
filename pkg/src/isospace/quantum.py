"""Quantum channels from connected graphs: periodicity and isotropic spaces.

A connected graph yields an irreducible channel whose Kraus operators are
scaled elementary matrices (a quantum walk).  Isotropic subspaces,
noiseless subspaces, periods, and pure-state gate fidelities are computed
in complex floating point with explicit tolerances.
"""

from __future__ import annotations

import numpy as np

from .graphs import Graph

CHANNEL_TOL = 1e-10
EIG_TOL = 1e-8
ISO_TOL = 1e-9
PD_TOL = 1e-10
ORTHO_TOL = 1e-10
UNIT_TOL = 1e-9


class QuantumChannel:
    """A finite Kraus family {B_i} with sum B_i^dagger B_i = I."""

    __slots__ = ("n", "kraus")

    def __init__(self, kraus):
        kraus = [np.asarray(k, dtype=complex) for k in kraus]
        if not kraus:
            raise ValueError("need at least one Kraus operator")
        n = kraus[0].shape[0]
        for k in kraus:
            if k.shape != (n, n):
                raise ValueError("Kraus operators must be square of equal size")
        total = sum(k.conj().T @ k for k in kraus)
        if np.max(np.abs(total - np.eye(n))) > CHANNEL_TOL:
            raise ValueError("Kraus operators do not satisfy the "
                             "trace-preservation identity")
        self.n = n
        self.kraus = tuple(kraus)

    def apply(self, rho: np.ndarray) -> np.ndarray:
        return sum(k @ rho @ k.conj().T for k in self.kraus)

    def __repr__(self):
        return f"QuantumChannel(n={self.n}, kraus={len(self.kraus)})"


class ComplexSubspace:
    """A subspace of C^n held as orthonormal basis columns."""

    __slots__ = ("n", "basis")

    def __init__(self, basis: np.ndarray):
        basis = np.asarray(basis, dtype=complex)
        if basis.ndim != 2:
            raise ValueError("basis must be an n x d array of columns")
        n, d = basis.shape
        gram = basis.conj().T @ basis
        if d and np.max(np.abs(gram - np.eye(d))) > ORTHO_TOL:
            raise ValueError("basis columns are not orthonormal")
        self.n = n
        self.basis = basis

    @classmethod
    def from_vectors(cls, n: int, vectors) -> "ComplexSubspace":
        """Orthonormalize a spanning list of vectors (rank revealed by QR)."""
        arr = np.array([np.asarray(v, dtype=complex) for v in vectors]).T
        if arr.size == 0:
            return cls(np.zeros((n, 0), dtype=complex))
        q, r = np.linalg.qr(arr)
        keep = [j for j in range(r.shape[0]) if abs(r[j, j]) > 1e-12]
        return cls(q[:, keep])

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def __repr__(self):
        return f"ComplexSubspace(C^{self.n}, dim {self.dim})"


def channel_from_graph(g: Graph) -> QuantumChannel:
    """Kraus family {E_ij / sqrt(d_j), E_ji / sqrt(d_i) : {i,j} edge}.

    Requires a connected graph with no isolated vertex; the resulting
    channel is irreducible with 2|E| Kraus operators.
    """
    if g.n == 0 or not g.is_connected() or any(g.degree(i) == 0 for i in range(g.n)):
        raise ValueError("channel construction needs a connected graph "
                         "with every vertex degree >= 1")
    degs = [g.degree(i) for i in range(g.n)]
    kraus = []
    for (i, j) in g.edges:
        e_ij = np.zeros((g.n, g.n), dtype=complex)
        e_ij[i, j] = 1.0 / np.sqrt(degs[j])
        kraus.append(e_ij)
        e_ji = np.zeros((g.n, g.n), dtype=complex)
        e_ji[j, i] = 1.0 / np.sqrt(degs[i])
        kraus.append(e_ji)
    return QuantumChannel(kraus)


def channel_matrix(ch: QuantumChannel) -> np.ndarray:
    """The n^2 x n^2 matrix sum_i B_i (x) conj(B_i).

    With row-major vectorization, applying it to vec(rho) equals
    vec(sum_i B_i rho B_i^dagger).
    """
    return sum(np.kron(k, k.conj()) for k in ch.kraus)


def is_irreducible(ch: QuantumChannel):
    """Check irreducibility; returns (bool, fixed state or None).

    The eigenvalue 1 must have algebraic (hence geometric) multiplicity 1
    and the fixed point, Hermitized and trace-normalized, must be positive
    definite.
    """
    m = channel_matrix(ch)
    n = ch.n
    vals, vecs = np.linalg.eig(m)
    close = [i for i in range(len(vals)) if abs(vals[i] - 1.0) < EIG_TOL]
    if len(close) != 1:
        return False, None
    rho = vecs[:, close[0]].reshape(n, n)
    rho = (rho + rho.conj().T) / 2.0
    tr = np.trace(rho).real
    if abs(tr) < PD_TOL:
        return False, None
    rho = rho / tr
    eigs = np.linalg.eigvalsh(rho)
    if np.min(eigs) <= PD_TOL:
        return False, None
    return True, rho


def period(ch: QuantumChannel) -> int:
    """Number of magnitude-one eigenvalues of the channel matrix.

    Defined for irreducible channels only.
    """
    ok, _ = is_irreducible(ch)
    if not ok:
        raise ValueError("period is defined for irreducible channels")
    vals = np.linalg.eigvals(channel_matrix(ch))
    return int(np.sum(np.abs(np.abs(vals) - 1.0) < EIG_TOL))


def decide_iso_2_decomposition(ch: QuantumChannel) -> bool:
    """An irreducible channel has an isotropic 2-decomposition iff its
    period is even."""
    return period(ch) % 2 == 0


def is_isotropic_subspace(ch: QuantumChannel, u: ComplexSubspace) -> bool:
    """True iff |a^dagger B_i b| < tol for all basis pairs and Kraus."""
    if u.n != ch.n:
        raise ValueError("ambient mismatch")
    b = u.basis
    for k in ch.kraus:
        if b.size and np.max(np.abs(b.conj().T @ k @ b)) >= ISO_TOL:
            return False
    return True


def is_noiseless_subspace(ch: QuantumChannel, u: ComplexSubspace) -> bool:
    """True iff every Kraus operator fixes u pointwise."""
    if u.n != ch.n:
        raise ValueError("ambient mismatch")
    if u.dim == 0:
        raise ValueError("noiseless subspaces are nonzero by definition")
    b = u.basis
    for k in ch.kraus:
        if np.max(np.abs(k @ b - b)) >= ISO_TOL:
            return False
    return True


def fidelity_pure(ch: QuantumChannel, u) -> float:
    """Gate fidelity against the identity on the pure state uu^dagger.

    Equals sum_i |u^dagger B_i u|^2, clamped to [0, 1]; u must be a unit
    vector.
    """
    u = np.asarray(u, dtype=complex).reshape(-1)
    if u.shape[0] != ch.n:
        raise ValueError("ambient mismatch")
    if abs(np.linalg.norm(u) - 1.0) > UNIT_TOL:
        raise ValueError("fidelity_pure expects a unit vector")
    val = sum(abs(np.vdot(u, k @ u)) ** 2 for k in ch.kraus)
    return float(min(1.0, max(0.0, val)))
