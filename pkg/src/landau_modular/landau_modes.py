"""The planar charged-particle (Landau) system on a truncated two-mode
Fock space: ladder matrices, the rotated ladder pair A+/A-, the four
Hamiltonians, the joint Fock basis, and the phase-space (Wigner) sampling
of Hilbert-Schmidt operators.

Tensor convention: the two-mode space is the Kronecker product with the
x-mode as the left factor, so basis index n_x * ncut + n_y labels the
state |n_x, n_y>.  Truncated ladders violate the canonical commutation
relations at the top of the cut; every algebraic identity is therefore
asserted on the interior subspace of states with n_x + n_y <= ncut - 4,
where it holds exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dense_linalg import adjoint, hermitian_function
from . import complex_hermite as ch


@dataclass(frozen=True)
class ModeCut:
    """Per-mode truncation count (each mode keeps levels 0 .. ncut-1)."""

    ncut: int

    def __post_init__(self):
        if self.ncut < 2:
            raise ValueError(f"per-mode cut must be >= 2, got {self.ncut}")

    @property
    def dim(self) -> int:
        return self.ncut * self.ncut


def ladder(n: int) -> np.ndarray:
    """Single-mode lowering matrix: a[m-1, m] = sqrt(m)."""
    if n < 2:
        raise ValueError(f"ladder dimension must be >= 2, got {n}")
    a = np.zeros((n, n), dtype=complex)
    for m in range(1, n):
        a[m - 1, m] = math.sqrt(m)
    return a


def hermite_fn(n: int, x: float) -> float:
    """Orthonormal Hermite function by the stable three-term recurrence.

    zeta_0(x) = pi^(-1/4) exp(-x^2/2);
    zeta_{m+1} = sqrt(2/(m+1)) x zeta_m - sqrt(m/(m+1)) zeta_{m-1}.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    z0 = math.pi ** -0.25 * math.exp(-x * x / 2.0)
    if n == 0:
        return z0
    z1 = math.sqrt(2.0) * x * z0
    for m in range(1, n):
        z0, z1 = z1, math.sqrt(2.0 / (m + 1)) * x * z1 - math.sqrt(m / (m + 1)) * z0
    return z1


def mode_ops(cut: ModeCut) -> tuple[np.ndarray, np.ndarray]:
    """The two-mode lowering operators (a_x, a_y) on the tensor space."""
    a = ladder(cut.ncut)
    eye = np.eye(cut.ncut)
    return np.kron(a, eye), np.kron(eye, a)


def interior_mask(cut: ModeCut, margin: int = 4) -> np.ndarray:
    """Boolean mask of basis states with n_x + n_y <= ncut - margin."""
    n = cut.ncut
    nx = np.repeat(np.arange(n), n)
    ny = np.tile(np.arange(n), n)
    return nx + ny <= n - margin


def interior_deviation(actual: np.ndarray, expected: np.ndarray,
                       mask: np.ndarray) -> float:
    """Largest column norm of (actual - expected) over interior basis states."""
    diff = actual[:, mask] - expected[:, mask]
    if diff.size == 0:
        return 0.0
    return float(np.max(np.linalg.norm(diff, axis=0)))


@dataclass(frozen=True)
class RotatedLadders:
    """The pair (A+, A-) diagonalizing the two magnetic Hamiltonians."""

    a_plus: np.ndarray
    a_plus_dag: np.ndarray
    a_minus: np.ndarray
    a_minus_dag: np.ndarray


def build_A_pm(cut: ModeCut, literal: bool = False) -> RotatedLadders:
    """The rotated ladder pair from the mode operators.

    Correct combination (derived from the gauge potentials):
        A+ = (3/4)(a_x - i a_y) - (1/4)(a_x* - i a_y*)
        A- = (3/4)(a_x + i a_y) - (1/4)(a_x* + i a_y*)

    With literal=True the A+ line uses -(1/4)(a_x* + i a_y*) instead — a
    historically printed variant kept so tests can witness that it breaks
    the commutation relations ([A+, A-*] = -1/8 instead of 0).
    """
    ax, ay = mode_ops(cut)
    axd, ayd = adjoint(ax), adjoint(ay)
    if literal:
        a_plus = 0.75 * (ax - 1j * ay) - 0.25 * (axd + 1j * ayd)
    else:
        a_plus = 0.75 * (ax - 1j * ay) - 0.25 * (axd - 1j * ayd)
    a_minus = 0.75 * (ax + 1j * ay) - 0.25 * (axd + 1j * ayd)
    return RotatedLadders(
        a_plus=a_plus, a_plus_dag=adjoint(a_plus),
        a_minus=a_minus, a_minus_dag=adjoint(a_minus),
    )


def build_A_pm_from_qp(cut: ModeCut) -> RotatedLadders:
    """Independent construction from the gauge-covariant position/momentum pairs.

    With x = (a_x + a_x*)/sqrt2, p_x = (a_x - a_x*)/(i sqrt2) (same for y):
        Q- = p_x + y/2,  P- = p_y - x/2,
        Q+ = p_y + x/2,  P+ = p_x - y/2,
        A+ = (Q+ + iP+)/sqrt2,  A- = (iQ- - P-)/sqrt2.
    """
    ax, ay = mode_ops(cut)
    axd, ayd = adjoint(ax), adjoint(ay)
    s2 = math.sqrt(2.0)
    x = (ax + axd) / s2
    y = (ay + ayd) / s2
    px = (ax - axd) / (1j * s2)
    py = (ay - ayd) / (1j * s2)
    q_minus = px + y / 2
    p_minus = py - x / 2
    q_plus = py + x / 2
    p_plus = px - y / 2
    a_plus = (q_plus + 1j * p_plus) / s2
    a_minus = (1j * q_minus - p_minus) / s2
    return RotatedLadders(
        a_plus=a_plus, a_plus_dag=adjoint(a_plus),
        a_minus=a_minus, a_minus_dag=adjoint(a_minus),
    )


@dataclass(frozen=True)
class Hamiltonians:
    """The level Hamiltonians: h_up = N- + 1/2, h_down = N+ + 1/2,
    h0 = (N+ + N- + 1)/2, hint_up = -(N+ - N-)/2, hint_down = -hint_up."""

    h_up: np.ndarray
    h_down: np.ndarray
    h0: np.ndarray
    hint_up: np.ndarray
    hint_down: np.ndarray
    n_plus: np.ndarray
    n_minus: np.ndarray


def hamiltonians(cut: ModeCut) -> Hamiltonians:
    ops = build_A_pm(cut)
    n_plus = ops.a_plus_dag @ ops.a_plus
    n_minus = ops.a_minus_dag @ ops.a_minus
    eye = np.eye(cut.dim)
    h_up = n_minus + 0.5 * eye
    h_down = n_plus + 0.5 * eye
    h0 = 0.5 * (n_plus + n_minus + eye)
    hint_up = -0.5 * (n_plus - n_minus)
    return Hamiltonians(h_up=h_up, h_down=h_down, h0=h0,
                        hint_up=hint_up, hint_down=-hint_up,
                        n_plus=n_plus, n_minus=n_minus)


def ground_state(cut: ModeCut, restrict: bool = True) -> np.ndarray:
    """The joint vacuum as the numerical kernel of N+ + N-.

    With restrict=True the total number operator is first compressed to the
    interior subspace; the lowest eigenvector is embedded back into the full
    space.  Raises if the near-kernel is not one-dimensional (cut too small).
    """
    h = hamiltonians(cut)
    total = h.n_plus + h.n_minus
    if restrict:
        mask = interior_mask(cut)
        sub = total[np.ix_(mask, mask)]
        vals, vecs = np.linalg.eigh(0.5 * (sub + sub.conj().T))
        if vals.shape[0] > 1 and vals[1] < 0.5:
            raise ValueError(
                f"kernel of the total number operator is not one-dimensional "
                f"at cut {cut.ncut} (second eigenvalue {vals[1]:.3e})")
        psi = np.zeros(cut.dim, dtype=complex)
        psi[mask] = vecs[:, 0]
    else:
        vals, vecs = np.linalg.eigh(0.5 * (total + total.conj().T))
        if vals.shape[0] > 1 and vals[1] < 0.5:
            raise ValueError("kernel of the total number operator is not one-dimensional")
        psi = vecs[:, 0].astype(complex)
    # fix the global phase: make the largest-magnitude entry real positive
    k = int(np.argmax(np.abs(psi)))
    psi = psi * (abs(psi[k]) / psi[k])
    return psi / np.linalg.norm(psi)


def fock_psi(cut: ModeCut, n: int, l: int, restrict: bool = True) -> np.ndarray:
    """The joint eigenstate Psi_{n,l} = (A+*)^n (A-*)^l Psi_00 / sqrt(n! l!)."""
    if n < 0 or l < 0:
        raise ValueError(f"labels must be nonnegative, got ({n}, {l})")
    if n + l > cut.ncut - 2:
        raise ValueError(
            f"label ({n}, {l}) exceeds the cut: need n + l <= {cut.ncut - 2}")
    ops = build_A_pm(cut)
    psi = ground_state(cut, restrict=restrict)
    for _ in range(n):
        psi = ops.a_plus_dag @ psi
    for _ in range(l):
        psi = ops.a_minus_dag @ psi
    return psi / math.sqrt(math.factorial(n) * math.factorial(l))


def mode_swap(n: int) -> np.ndarray:
    """Permutation matrix exchanging the two tensor factors |n_x, n_y>."""
    s = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            s[j * n + i, i * n + j] = 1.0
    return s


def displacement(ncut: int, x: float, y: float) -> np.ndarray:
    """Single-mode phase-space displacement U(x, y) = exp(-i(xQ + yP))."""
    a = ladder(ncut)
    ad = adjoint(a)
    s2 = math.sqrt(2.0)
    q = (a + ad) / s2
    p = (a - ad) / (1j * s2)
    return hermitian_function(x * q + y * p, lambda lam: np.exp(-1j * lam))


def wigner_sample(x_op: np.ndarray, x: float, y: float, ncut: int) -> complex:
    """The phase-space sample (2 pi)^(-1/2) Tr[U(x, y)* X].

    x_op may live on a smaller truncation; it is embedded in the top-left
    block of the ncut-dimensional single-mode space.
    """
    n = x_op.shape[0]
    if x_op.shape != (n, n) or n > ncut:
        raise ValueError(f"operator shape {x_op.shape} incompatible with cut {ncut}")
    big = np.zeros((ncut, ncut), dtype=complex)
    big[:n, :n] = x_op
    u = displacement(ncut, x, y)
    return complex(np.trace(adjoint(u) @ big) / math.sqrt(2.0 * math.pi))


def wigner_closed_form(n: int, l: int, x: float, y: float,
                       literal: bool = False) -> complex:
    """Closed form for the phase-space sample of the matrix unit |n><l|.

    The literal form e^(-|z|^2/2) B[n,l](zbar, z) / sqrt(2 pi) with
    z = (x - iy)/sqrt2 misses a phase and an index swap; the corrected
    identity, which wigner_sample satisfies to machine precision, is

        i^(n+l) e^(-|z|^2/2) B[l,n](zbar, z) / sqrt(2 pi).
    """
    z = (x - 1j * y) / math.sqrt(2.0)
    if literal:
        val = ch.eval_normalized(ch.H_basis(n, l), z)
        phase = 1.0
    else:
        val = ch.eval_normalized(ch.H_basis(l, n), z)
        phase = 1j ** (n + l)
    return phase * math.exp(-abs(z) ** 2 / 2.0) * val / math.sqrt(2.0 * math.pi)
