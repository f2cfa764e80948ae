"""Gibbs weights, the cyclic vector, and the modular triple (S, J, Delta).

The state is the Gibbs state of a truncated harmonic ladder: weights
alpha_n proportional to exp(-n * beta), renormalized to sum to one so
every modular identity is exact at finite truncation.  In the matrix-unit
basis everything is diagonal:

    Delta E_ij     = (alpha_i / alpha_j) E_ij
    S E_ij         = sqrt(alpha_i / alpha_j) E_ji      (antilinear)
    J E_ij         = E_ji                              (antilinear)
    H_state        = diag(-log(alpha_i) / beta)
    bigH on E_ij   = -(1/beta) log(alpha_i / alpha_j)
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hs_space import (
    AntilinearOp,
    SandwichOp,
    antilinear_compose,
    conjugation_J,
    sandwich_superop,
    transpose_permutation,
)


@dataclass(frozen=True)
class GibbsWeights:
    """Normalized geometric weights alpha_n = C * exp(-n*beta), sum = 1."""

    beta: float
    n: int
    alpha: np.ndarray

    def __post_init__(self):
        if self.beta <= 0:
            raise ValueError(f"inverse temperature must be positive, got {self.beta}")
        if self.n < 2:
            raise ValueError(f"need at least two levels, got {self.n}")
        a = self.alpha
        if a.shape != (self.n,) or np.any(a <= 0):
            raise ValueError("weights must be positive with one entry per level")
        if abs(a.sum() - 1.0) > 1e-14 * self.n:
            raise ValueError("weights must sum to one")
        ratios = a[1:] / a[:-1]
        if np.any(np.abs(ratios - math.exp(-self.beta)) > 1e-12):
            raise ValueError("weights must be geometric with ratio exp(-beta)")


def build_weights(beta: float, n: int) -> GibbsWeights:
    """Geometric Gibbs weights on n levels, renormalized to sum exactly 1."""
    if beta <= 0:
        raise ValueError(f"inverse temperature must be positive, got {beta}")
    if n < 2:
        raise ValueError(f"need at least two levels, got {n}")
    alpha = np.exp(-beta * np.arange(n))
    alpha /= alpha.sum()
    return GibbsWeights(beta=beta, n=n, alpha=alpha)


def density_matrix(w: GibbsWeights) -> np.ndarray:
    return np.diag(w.alpha).astype(complex)


def cyclic_vector(w: GibbsWeights) -> np.ndarray:
    """The unit vector Phi = sum_i sqrt(alpha_i) E_ii."""
    return np.diag(np.sqrt(w.alpha)).astype(complex)


def state_eval(w: GibbsWeights, a: np.ndarray) -> complex:
    """The state value Tr[rho A] = <Phi, (A v I) Phi>."""
    if a.shape != (w.n, w.n):
        raise ValueError(f"operator must be {w.n} x {w.n}, got {a.shape}")
    return complex(np.sum(w.alpha * np.diag(a)))


def hamiltonian(w: GibbsWeights) -> np.ndarray:
    """H with rho = exp(-beta H): diagonal -(1/beta) log(alpha_i)."""
    return np.diag(-np.log(w.alpha) / w.beta).astype(complex)


@dataclass(frozen=True)
class ModularTriple:
    """The modular data attached to the Gibbs cyclic vector.

    J and S are antilinear; delta, delta_sqrt and big_h are plain
    superoperator matrices in the flattened matrix-unit basis.  h_state is
    the one-body Hamiltonian with rho = exp(-beta * h_state).
    """

    weights: GibbsWeights
    J: AntilinearOp
    S: AntilinearOp
    delta: np.ndarray
    delta_sqrt: np.ndarray
    h_state: np.ndarray
    big_h: np.ndarray


def build_modular_triple(w: GibbsWeights) -> ModularTriple:
    n = w.n
    ratio = np.repeat(w.alpha, n) / np.tile(w.alpha, n)  # (i, j) -> alpha_i / alpha_j
    sq = np.sqrt(ratio)
    # store Delta as the literal square of the stored square roots so the
    # polar identities Delta = S*S and S = J Delta^(1/2) are float-exact
    delta = np.diag(sq * sq).astype(complex)
    delta_sqrt = np.diag(sq).astype(complex)
    t = transpose_permutation(n).astype(complex)
    j = conjugation_J(n)
    s = AntilinearOp(t @ delta_sqrt)
    big_h = np.diag(-np.log(ratio) / w.beta).astype(complex)
    return ModularTriple(
        weights=w, J=j, S=s, delta=delta, delta_sqrt=delta_sqrt,
        h_state=hamiltonian(w), big_h=big_h,
    )


def modular_flow(w: GibbsWeights, t: float, a: np.ndarray) -> np.ndarray:
    """The evolved operator exp(iHt) A exp(-iHt) for the Gibbs Hamiltonian."""
    if a.shape != (w.n, w.n):
        raise ValueError(f"operator must be {w.n} x {w.n}, got {a.shape}")
    energies = -np.log(w.alpha) / w.beta
    phases = np.exp(1j * t * energies)
    # diagonal conjugation: entry (j, k) picks up exp(i t (E_j - E_k))
    return (phases[:, None] * a) * phases.conj()[None, :]


def flow_superop(w: GibbsWeights, t: float) -> np.ndarray:
    """Superoperator of X -> exp(iHt) X exp(-iHt)."""
    u = np.diag(np.exp(1j * t * (-np.log(w.alpha) / w.beta)))
    return sandwich_superop(SandwichOp(u, u))


def kms_function(w: GibbsWeights, a: np.ndarray, b: np.ndarray, z: complex) -> complex:
    """F(z) = Tr[rho A exp(iHz) B exp(-iHz)] by the spectral sum.

    Entire in z at finite truncation.  Raises OverflowError when the
    imaginary part times the spectral spread would overflow exp.
    """
    if a.shape != (w.n, w.n) or b.shape != (w.n, w.n):
        raise ValueError("operators must match the truncation dimension")
    energies = -np.log(w.alpha) / w.beta
    spread = float(energies.max() - energies.min())
    if abs(z.imag) * spread > 700.0:
        raise OverflowError(
            f"imaginary part {z.imag} times spectral spread {spread:.3f} overflows exp"
        )
    diff = energies[None, :] - energies[:, None]  # (j, k) -> E_k - E_j
    kernel = np.exp(1j * z * diff)
    return complex(np.sum(w.alpha[:, None] * a * b.T * kernel))


def kms_boundary_deviation(
    w: GibbsWeights, a: np.ndarray, b: np.ndarray, t_grid: np.ndarray
) -> float:
    """max over the grid of |F(t + i*beta) - Tr[rho alpha_t(B) A]|."""
    rho = density_matrix(w)
    dev = 0.0
    for t in np.asarray(t_grid, dtype=float):
        lhs = kms_function(w, a, b, complex(t, w.beta))
        rhs = complex(np.trace(rho @ modular_flow(w, t, b) @ a))
        dev = max(dev, abs(lhs - rhs))
    return dev


def centralizer_member(
    w: GibbsWeights, b: np.ndarray, tol: float = 1e-10
) -> tuple[bool, tuple[int, int] | None]:
    """Whether B commutes with rho, with the offending entry as witness.

    With pairwise distinct weights this is equivalent to B being diagonal,
    and to <phi; [B v I, A v I]> = 0 for every A.
    """
    if b.shape != (w.n, w.n):
        raise ValueError(f"operator must be {w.n} x {w.n}, got {b.shape}")
    rho = density_matrix(w)
    c = b @ rho - rho @ b
    flat = int(np.argmax(np.abs(c)))
    i, j = divmod(flat, w.n)
    if abs(c[i, j]) <= tol:
        return True, None
    return False, (i, j)
