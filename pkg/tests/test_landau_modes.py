import math

import numpy as np
import pytest

from landau_modular import cgauss_quad as quad
from landau_modular import landau_modes as lm


def test_ladder_matrix():
    assert np.array_equal(lm.ladder(2), [[0, 1], [0, 0]])
    a = lm.ladder(6)
    assert np.allclose(a.conj().T @ a, np.diag(np.arange(6.0)))
    comm = a @ a.conj().T - a.conj().T @ a
    expect = np.eye(6)
    expect[5, 5] = -5.0
    assert np.allclose(comm, expect)


def test_hermite_fn_values_and_orthonormality():
    assert abs(lm.hermite_fn(0, 0.0) - math.pi ** -0.25) < 1e-14
    assert lm.hermite_fn(1, 0.0) == 0.0
    x, w = quad.real_gauss_rule(60)
    for m in range(9):
        for n in range(9):
            vals = [lm.hermite_fn(m, xi) * lm.hermite_fn(n, xi) for xi in x]
            got = float(np.sum(w * vals))
            assert abs(got - (1.0 if m == n else 0.0)) < 1e-10


def test_ccr_on_interior():
    cut = lm.ModeCut(16)
    mask = lm.interior_mask(cut)
    ops = lm.build_A_pm(cut)
    eye = np.eye(cut.dim)
    for p, q, target in [
        (ops.a_plus, ops.a_plus_dag, eye),
        (ops.a_minus, ops.a_minus_dag, eye),
        (ops.a_plus, ops.a_minus, 0 * eye),
        (ops.a_plus, ops.a_minus_dag, 0 * eye),
        (ops.a_plus_dag, ops.a_minus, 0 * eye),
        (ops.a_plus_dag, ops.a_minus_dag, 0 * eye),
    ]:
        comm = p @ q - q @ p
        assert lm.interior_deviation(comm, target, mask) < 1e-12


def test_literal_variant_breaks_ccr():
    cut = lm.ModeCut(12)
    mask = lm.interior_mask(cut)
    lit = lm.build_A_pm(cut, literal=True)
    good = lm.build_A_pm(cut)
    comm = lit.a_plus @ good.a_minus_dag - good.a_minus_dag @ lit.a_plus
    assert lm.interior_deviation(comm, -0.125 * np.eye(cut.dim), mask) < 1e-12


def test_two_constructions_agree():
    cut = lm.ModeCut(10)
    a = lm.build_A_pm(cut)
    b = lm.build_A_pm_from_qp(cut)
    assert np.max(np.abs(a.a_plus - b.a_plus)) < 1e-12
    assert np.max(np.abs(a.a_minus - b.a_minus)) < 1e-12


def test_hamiltonian_relations():
    cut = lm.ModeCut(12)
    mask = lm.interior_mask(cut)
    h = lm.hamiltonians(cut)
    assert lm.interior_deviation(h.h_up, h.h0 + h.hint_up, mask) < 1e-12
    assert lm.interior_deviation(h.h_down, h.h0 + h.hint_down, mask) < 1e-12
    comm = h.h_up @ h.h_down - h.h_down @ h.h_up
    assert lm.interior_deviation(comm, 0 * comm, mask) < 1e-12


def test_interior_spectrum_is_half_integers():
    cut = lm.ModeCut(12)
    mask = lm.interior_mask(cut)
    h = lm.hamiltonians(cut)
    sub = h.h_up[np.ix_(mask, mask)]
    vals = np.linalg.eigvalsh(0.5 * (sub + sub.conj().T))
    # the operator is a compressed N + 1/2 with N positive semidefinite, so
    # the spectrum sits above 1/2; the bottom eigenvalue approaches 1/2 as
    # the cut grows (edge compression pollutes the higher clusters)
    assert vals[0] > 0.5 - 1e-12
    assert abs(vals[0] - 0.5) < 1e-3
    cut = lm.ModeCut(20)
    mask = lm.interior_mask(cut)
    h = lm.hamiltonians(cut)
    sub = h.h_up[np.ix_(mask, mask)]
    vals = np.linalg.eigvalsh(0.5 * (sub + sub.conj().T))
    assert abs(vals[0] - 0.5) < 1e-6


def test_conjugation_intertwines_exactly():
    h = lm.hamiltonians(lm.ModeCut(10))
    assert np.max(np.abs(h.h_up.conj() - h.h_down)) == 0.0


def test_fock_label_validation():
    cut = lm.ModeCut(8)
    with pytest.raises(ValueError):
        lm.fock_psi(cut, 4, 3)
    with pytest.raises(ValueError):
        lm.fock_psi(cut, -1, 0)


def test_ground_state_residual_converges_with_cut():
    residuals = []
    for ncut in (16, 28):
        cut = lm.ModeCut(ncut)
        ops = lm.build_A_pm(cut)
        psi = lm.ground_state(cut)
        residuals.append(float(np.linalg.norm(ops.a_minus @ psi)))
    assert residuals[1] < residuals[0] / 10
    assert residuals[1] < 1e-4


def test_fock_eigenvalue_residual_converges_with_cut():
    residuals = []
    for ncut in (16, 28):
        cut = lm.ModeCut(ncut)
        h = lm.hamiltonians(cut)
        psi = lm.fock_psi(cut, 2, 1)
        residuals.append(float(np.linalg.norm(h.h_up @ psi - 1.5 * psi)))
    assert residuals[1] < residuals[0] / 10
    assert residuals[1] < 1e-3


def test_degenerate_level_structure():
    cut = lm.ModeCut(16)
    h = lm.hamiltonians(cut)
    tol = 1e-1  # limited by the numerically extracted vacuum at this cut
    states = [lm.fock_psi(cut, n, 1) for n in range(3)]
    for n, psi in enumerate(states):
        assert np.linalg.norm(h.h_up @ psi - 1.5 * psi) < tol
        assert np.linalg.norm(h.h_down @ psi - (n + 0.5) * psi) < tol
    for a in range(3):
        for b in range(3):
            got = abs(np.vdot(states[a], states[b]))
            assert abs(got - (1.0 if a == b else 0.0)) < tol


def test_wigner_origin_and_vacuum():
    from landau_modular.hs_space import matrix_unit
    x00 = matrix_unit(1, 0, 0)
    got = lm.wigner_sample(x00, 0.0, 0.0, 48)
    assert abs(got - 1.0 / math.sqrt(2.0 * math.pi)) < 1e-12
    for x, y in ((0.5, -1.0), (2.0, 1.5)):
        expect = math.exp(-(x * x + y * y) / 4.0) / math.sqrt(2.0 * math.pi)
        assert abs(lm.wigner_sample(x00, x, y, 48) - expect) < 1e-6


def test_wigner_matches_corrected_closed_form():
    from landau_modular.hs_space import matrix_unit
    for n in range(3):
        for l in range(3):
            x_op = matrix_unit(3, n, l)
            for x, y in ((0.3, -0.7), (1.1, 0.4)):
                got = lm.wigner_sample(x_op, x, y, 48)
                assert abs(got - lm.wigner_closed_form(n, l, x, y)) < 1e-9
