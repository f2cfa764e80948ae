"""The Hilbert space of Hilbert-Schmidt operators on an N-dimensional space.

An element X of this space is stored as a plain N x N complex array.  The
inner product is <X|Y> = Tr[X* Y], so the matrix units E_ij form an
orthonormal basis.  Linear maps on the space ("superoperators") are stored
as N^2 x N^2 matrices in the flattened matrix-unit basis.

Flattening convention (fixed for the whole library): row-major over the
(i, j) index of X, i.e. flatten(X)[i*N + j] = X[i, j].  Antilinear maps
are stored as the linear part acting after entrywise conjugation in this
same basis; composing two antilinear maps therefore yields the plain
linear superoperator M1 @ conj(M2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .dense_linalg import adjoint


def matrix_unit(n: int, i: int, j: int) -> np.ndarray:
    """The basis operator |i><j| on an n-dimensional space."""
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"matrix unit index ({i}, {j}) out of range for dimension {n}")
    x = np.zeros((n, n), dtype=complex)
    x[i, j] = 1.0
    return x


def hs_inner(x: np.ndarray, y: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product Tr[X* Y], conjugate-linear in X."""
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {y.shape}")
    return complex(np.trace(x.conj().T @ y))


def hs_norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(x))


def flatten(x: np.ndarray) -> np.ndarray:
    """Row-major flattening of an N x N array to length N^2."""
    return np.asarray(x).reshape(-1)


def unflatten(v: np.ndarray) -> np.ndarray:
    n = int(round(np.sqrt(v.shape[0])))
    if n * n != v.shape[0]:
        raise ValueError(f"length {v.shape[0]} is not a perfect square")
    return np.asarray(v).reshape(n, n)


@dataclass(frozen=True)
class SandwichOp:
    """The superoperator X -> A X B*."""

    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        a, b = self.left, self.right
        if a.shape != b.shape or a.shape[0] != a.shape[1]:
            raise ValueError(f"sandwich factors must be equal square matrices, got {a.shape}, {b.shape}")

    @property
    def dim(self) -> int:
        return self.left.shape[0]


def sandwich_apply(op: SandwichOp, x: np.ndarray) -> np.ndarray:
    if x.shape != op.left.shape:
        raise ValueError(f"dimension mismatch: operator dim {op.dim}, vector shape {x.shape}")
    return op.left @ x @ adjoint(op.right)


def sandwich_compose(p: SandwichOp, q: SandwichOp) -> SandwichOp:
    """(A1 v B1)(A2 v B2) = (A1 A2) v (B1 B2)."""
    if p.dim != q.dim:
        raise ValueError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return SandwichOp(p.left @ q.left, p.right @ q.right)


def sandwich_adjoint(op: SandwichOp) -> SandwichOp:
    """(A v B)* = A* v B* with respect to the Hilbert-Schmidt inner product."""
    return SandwichOp(adjoint(op.left), adjoint(op.right))


def sandwich_superop(op: SandwichOp) -> np.ndarray:
    """N^2 x N^2 matrix of X -> A X B* in the flattening convention.

    Row-major vec gives vec(A X B*) = (A kron conj(B)) vec(X).
    """
    return np.kron(op.left, op.right.conj())


def superop_matrix(fn: Callable[[np.ndarray], np.ndarray], n: int) -> np.ndarray:
    """Matrix of an arbitrary linear map, column by column over matrix units."""
    m = np.zeros((n * n, n * n), dtype=complex)
    for i in range(n):
        for j in range(n):
            m[:, i * n + j] = flatten(fn(matrix_unit(n, i, j)))
    return m


@dataclass(frozen=True)
class AntilinearOp:
    """An antilinear map stored as linear-part-after-conjugation.

    Action: X -> unflatten(matrix @ conj(flatten(X))).
    """

    matrix: np.ndarray

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return unflatten(self.matrix @ flatten(x).conj())


def antilinear_compose(p: AntilinearOp, q: AntilinearOp) -> np.ndarray:
    """The linear superoperator matrix of p after q."""
    return p.matrix @ q.matrix.conj()


def antilinear_adjoint(p: AntilinearOp) -> AntilinearOp:
    """Adjoint with the antilinear pairing <p* y, x> = <p x, y>."""
    return AntilinearOp(p.matrix.T)


def compose_antilinear_linear(p: AntilinearOp, m: np.ndarray) -> AntilinearOp:
    """The antilinear map X -> p(unflatten(m @ flatten(X)))."""
    return AntilinearOp(p.matrix @ m.conj())


def transpose_permutation(n: int) -> np.ndarray:
    """Permutation matrix sending flattened index (i, j) to (j, i)."""
    t = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            t[j * n + i, i * n + j] = 1.0
    return t


def conjugation_J(n: int) -> AntilinearOp:
    """The antiunitary map X -> X* (conjugate transpose of the matrix)."""
    return AntilinearOp(transpose_permutation(n).astype(complex))


def commutant_basis(
    generators: Sequence[np.ndarray], svd_rtol: float = 1e-8
) -> tuple[int, list[np.ndarray]]:
    """Dimension and basis of all superoperators commuting with the generators.

    Solves the stacked linear system [M, G_k] = 0 over all k by a null-space
    SVD; singular values below svd_rtol times the largest count as zero.
    """
    if len(generators) == 0:
        raise ValueError("commutant of an empty generator list is undefined here")
    d = generators[0].shape[0]
    blocks = []
    eye = np.eye(d)
    for g in generators:
        if g.shape != (d, d):
            raise ValueError("generators must share one dimension")
        # vec([G, M]) = (G kron I - I kron G^T) vec(M), row-major vec
        blocks.append(np.kron(g, eye) - np.kron(eye, g.T))
    stacked = np.vstack(blocks)
    _, s, vh = np.linalg.svd(stacked)
    cutoff = svd_rtol * (s[0] if s.size else 1.0)
    rank = int(np.sum(s > cutoff))
    null = vh[rank:].conj()
    basis = [null[r].reshape(d, d) for r in range(null.shape[0])]
    return len(basis), basis


def in_span(basis: Sequence[np.ndarray], target: np.ndarray, tol: float = 1e-8) -> bool:
    """Whether target lies in the linear span of basis (least-squares residual)."""
    a = np.column_stack([b.reshape(-1) for b in basis])
    t = target.reshape(-1)
    coef, *_ = np.linalg.lstsq(a, t, rcond=None)
    return float(np.linalg.norm(a @ coef - t)) <= tol * max(1.0, float(np.linalg.norm(t)))
