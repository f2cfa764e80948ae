"""Bivariate complex Hermite polynomials with exact coefficient arithmetic.

A polynomial in the pair (zbar, z) is stored as a map (m, k) -> exact
Gaussian-rational coefficient for the monomial zbar^m z^k.  All identities
(recursion, Rodrigues form, explicit double sum, generating function,
ladder and number actions) are checked as exact equalities of coefficient
maps; floating point enters only at evaluation time.

Conventions:
    h[n, k]     degree-(n, k) polynomial; h[0, 0] = 1, h[1, 1] = zbar z - 1
    a_minus     d/dz              a_minus_dag   z - d/dzbar
    a_plus      d/dzbar           a_plus_dag    zbar - d/dz
    n_plus      -d2/dz dzbar + zbar d/dzbar     (eigenvalue n on h[n, k])
    n_minus     -d2/dz dzbar + z d/dz           (eigenvalue k on h[n, k])
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


class QC:
    """A complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        return QC(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return QC(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return QC(-self.re, -self.im)

    def __mul__(self, other):
        return QC(self.re * other.re - self.im * other.im,
                  self.re * other.im + self.im * other.re)

    def conj(self) -> "QC":
        return QC(self.re, -self.im)

    def __eq__(self, other):
        if isinstance(other, QC):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"QC({self.re!r}, {self.im!r})"

    def to_complex(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)


_ZERO = QC(0)
_ONE = QC(1)


@dataclass(frozen=True)
class BivarPoly:
    """Exact polynomial in (zbar, z): coeffs[(m, k)] multiplies zbar^m z^k."""

    coeffs: tuple  # sorted tuple of ((m, k), QC) with nonzero QC

    @staticmethod
    def from_dict(d: dict) -> "BivarPoly":
        items = tuple(sorted((mk, c) for mk, c in d.items() if c))
        return BivarPoly(items)

    def as_dict(self) -> dict:
        return dict(self.coeffs)

    def __add__(self, other: "BivarPoly") -> "BivarPoly":
        d = self.as_dict()
        for mk, c in other.coeffs:
            d[mk] = d.get(mk, _ZERO) + c
        return BivarPoly.from_dict(d)

    def __sub__(self, other: "BivarPoly") -> "BivarPoly":
        d = self.as_dict()
        for mk, c in other.coeffs:
            d[mk] = d.get(mk, _ZERO) - c
        return BivarPoly.from_dict(d)

    def __mul__(self, other: "BivarPoly") -> "BivarPoly":
        d: dict = {}
        for (m1, k1), c1 in self.coeffs:
            for (m2, k2), c2 in other.coeffs:
                mk = (m1 + m2, k1 + k2)
                d[mk] = d.get(mk, _ZERO) + c1 * c2
        return BivarPoly.from_dict(d)

    def scale(self, c) -> "BivarPoly":
        if not isinstance(c, QC):
            c = QC(c)
        return BivarPoly.from_dict({mk: c * v for mk, v in self.coeffs})

    def is_zero(self) -> bool:
        return not self.coeffs


def poly_const(c=1) -> BivarPoly:
    c = c if isinstance(c, QC) else QC(c)
    return BivarPoly.from_dict({(0, 0): c})


def poly_zero() -> BivarPoly:
    return BivarPoly(())


ZBAR = BivarPoly.from_dict({(1, 0): _ONE})
Z = BivarPoly.from_dict({(0, 1): _ONE})


def mul_zbar(p: BivarPoly) -> BivarPoly:
    return BivarPoly.from_dict({(m + 1, k): c for (m, k), c in p.coeffs})


def mul_z(p: BivarPoly) -> BivarPoly:
    return BivarPoly.from_dict({(m, k + 1): c for (m, k), c in p.coeffs})


def d_zbar(p: BivarPoly) -> BivarPoly:
    return BivarPoly.from_dict(
        {(m - 1, k): c * QC(m) for (m, k), c in p.coeffs if m > 0})


def d_z(p: BivarPoly) -> BivarPoly:
    return BivarPoly.from_dict(
        {(m, k - 1): c * QC(k) for (m, k), c in p.coeffs if k > 0})


def eval_poly(p: BivarPoly, z: complex) -> complex:
    """Floating-point value p(conj(z), z)."""
    zb = complex(z).conjugate()
    total = 0j
    for (m, k), c in p.coeffs:
        total += c.to_complex() * zb**m * z**k
    return total


# ---------------------------------------------------------------------------
# The complex Hermite family by three independent constructions.
# ---------------------------------------------------------------------------

def ch_recursion(n: int, k: int) -> BivarPoly:
    """h[n, k] by the two coupled recursions from h[0, 0] = 1.

    Raising the first index: h[n+1, k] = zbar h[n, k] - k h[n, k-1].
    Raising the second:      h[n, k+1] = z    h[n, k] - n h[n-1, k].
    """
    if n < 0 or k < 0:
        raise ValueError(f"indices must be nonnegative, got ({n}, {k})")
    # build row n = 0 first, then raise the first index k times per column
    row = [poly_const(1)]
    for j in range(k):
        row.append(mul_z(row[j]))  # h[0, j+1] = z h[0, j]
    prev_col = row  # h[0, j] for j = 0..k
    for i in range(n):
        col = []
        for j in range(k + 1):
            p = mul_zbar(prev_col[j])
            if j > 0:
                p = p - prev_col[j - 1].scale(j)
            col.append(p)  # h[i+1, j] = zbar h[i, j] - j h[i, j-1]
        prev_col = col
    return prev_col[k]


def ch_rodrigues(n: int, k: int) -> BivarPoly:
    """h[n, k] from the Rodrigues form.

    Differentiating g * exp(-zbar z) with respect to z maps the polynomial
    part g to (dg/dz - zbar g); with respect to zbar, to (dg/dzbar - z g).
    Apply n z-derivatives and k zbar-derivatives to g = 1, then the sign
    (-1)^(n+k).
    """
    if n < 0 or k < 0:
        raise ValueError(f"indices must be nonnegative, got ({n}, {k})")
    g = poly_const(1)
    for _ in range(n):
        g = d_z(g) - mul_zbar(g)
    for _ in range(k):
        g = d_zbar(g) - mul_z(g)
    if (n + k) % 2:
        g = g.scale(-1)
    return g


def ch_explicit(n: int, k: int, literal: bool = False) -> BivarPoly:
    """h[n, k] as the finite double-factorial sum.

    Corrected form: n! k! sum_j (-1)^j zbar^(n-j) z^(k-j) / ((n-j)!(k-j)!j!).
    With literal=True the alternating sign and the 1/j! are dropped — a
    historically printed variant kept only so tests can witness that it
    disagrees with the Rodrigues construction (at (1, 1) by exactly 2).
    """
    if n < 0 or k < 0:
        raise ValueError(f"indices must be nonnegative, got ({n}, {k})")
    d: dict = {}
    nf, kf = math.factorial(n), math.factorial(k)
    for j in range(min(n, k) + 1):
        if literal:
            c = Fraction(nf * kf, math.factorial(n - j) * math.factorial(k - j))
        else:
            c = Fraction((-1) ** j * nf * kf,
                         math.factorial(n - j) * math.factorial(k - j) * math.factorial(j))
        mk = (n - j, k - j)
        d[mk] = d.get(mk, _ZERO) + QC(c)
    return BivarPoly.from_dict(d)


def generating_coeff(n: int, k: int) -> BivarPoly:
    """Exact (v^n ubar^k) Taylor coefficient of exp(ubar z + v zbar - ubar v).

    Choosing j factors of (-ubar v), n-j of (v zbar) and k-j of (ubar z)
    gives sum_j (-1)^j zbar^(n-j) z^(k-j) / ((n-j)!(k-j)!j!), which must
    equal h[n, k] / (n! k!).
    """
    d: dict = {}
    for j in range(min(n, k) + 1):
        c = Fraction((-1) ** j,
                     math.factorial(n - j) * math.factorial(k - j) * math.factorial(j))
        d[(n - j, k - j)] = QC(c)
    return BivarPoly.from_dict(d)


def generating_check(max_order: int) -> bool:
    """Whether the generating-function coefficients match the recursion exactly."""
    for n in range(max_order + 1):
        for k in range(max_order + 1):
            scale = Fraction(1, math.factorial(n) * math.factorial(k))
            if generating_coeff(n, k) != ch_recursion(n, k).scale(scale):
                return False
    return True


# ---------------------------------------------------------------------------
# Ladder and number operators as exact polynomial maps.
# ---------------------------------------------------------------------------

LADDERS = ("a_minus", "a_plus", "a_minus_dag", "a_plus_dag")


def ladder_apply(which: str, p: BivarPoly) -> BivarPoly:
    """Exact ladder action on a polynomial; see the module docstring table."""
    if which == "a_minus":
        return d_z(p)
    if which == "a_plus":
        return d_zbar(p)
    if which == "a_minus_dag":
        return mul_z(p) - d_zbar(p)
    if which == "a_plus_dag":
        return mul_zbar(p) - d_z(p)
    raise ValueError(f"unknown ladder {which!r}; expected one of {LADDERS}")


def number_apply(which: str, p: BivarPoly) -> BivarPoly:
    """Exact number-operator action; n_plus counts zbar-degree quanta."""
    cross = d_z(d_zbar(p))
    if which == "n_plus":
        return mul_zbar(d_zbar(p)) - cross
    if which == "n_minus":
        return mul_z(d_z(p)) - cross
    raise ValueError(f"unknown number operator {which!r}; expected n_plus or n_minus")


# ---------------------------------------------------------------------------
# Orthonormalized basis and real Hermite polynomials.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalizedPoly:
    """An exact polynomial divided by the square root of an exact integer.

    Represents poly / sqrt(norm_sq); used for the orthonormal basis
    B[n, l] = h[n, l] / sqrt(n! l!), whose squared norm against the
    Gaussian measure is norm_sq-exactly 1.
    """

    poly: BivarPoly
    norm_sq: int


def H_basis(n: int, l: int) -> NormalizedPoly:
    """The orthonormal basis element h[n, l] / sqrt(n! l!)."""
    return NormalizedPoly(poly=ch_recursion(n, l),
                          norm_sq=math.factorial(n) * math.factorial(l))


def eval_normalized(p: NormalizedPoly, z: complex) -> complex:
    return eval_poly(p.poly, z) / math.sqrt(p.norm_sq)


def real_hermite(n: int) -> list:
    """Physicists' Hermite polynomial as exact integer coefficients.

    Returns c with h_n(x) = sum_j c[j] x^j, built from the recursion
    h_{n+1} = 2x h_n - 2n h_{n-1}.
    """
    if n < 0:
        raise ValueError(f"index must be nonnegative, got {n}")
    prev = [1]
    if n == 0:
        return prev
    cur = [0, 2]
    for m in range(1, n):
        nxt = [0] + [2 * c for c in cur]
        for j, c in enumerate(prev):
            nxt[j] -= 2 * m * c
        prev, cur = cur, nxt
    return cur


def eval_real(coeffs: list, x: float) -> float:
    total = 0.0
    for c in reversed(coeffs):
        total = total * x + c
    return total
