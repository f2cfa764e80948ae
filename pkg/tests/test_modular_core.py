import math

import numpy as np
import pytest

from landau_modular import modular_core as mc
from landau_modular.hs_space import matrix_unit
from landau_modular.rng import SplitMix64

LN2 = math.log(2.0)


def test_weights_renormalized_geometric():
    w = mc.build_weights(LN2, 4)
    assert np.allclose(w.alpha, [8 / 15, 4 / 15, 2 / 15, 1 / 15], atol=1e-15)
    assert abs(w.alpha.sum() - 1.0) < 1e-14


def test_weights_zero_temperature_limit():
    w = mc.build_weights(30.0, 2)
    assert w.alpha[0] > 1 - 1e-12
    assert abs(w.alpha[1] / w.alpha[0] - math.exp(-30.0)) < 1e-15


def test_weights_reject_bad_input():
    with pytest.raises(ValueError):
        mc.build_weights(0.0, 4)
    with pytest.raises(ValueError):
        mc.build_weights(1.0, 1)


def test_cyclic_vector_normalized_and_fixed_by_j():
    w = mc.build_weights(LN2, 4)
    phi = mc.cyclic_vector(w)
    assert np.allclose(np.diag(phi) ** 2, w.alpha)
    assert abs(np.linalg.norm(phi) - 1.0) < 1e-14
    triple = mc.build_modular_triple(w)
    assert np.linalg.norm(triple.J(phi) - phi) < 1e-15


def test_state_eval_examples():
    w = mc.build_weights(LN2, 4)
    assert abs(mc.state_eval(w, np.eye(4)) - 1.0) < 1e-14
    assert abs(mc.state_eval(w, matrix_unit(4, 0, 0)) - 8 / 15) < 1e-14
    assert mc.state_eval(w, matrix_unit(4, 0, 1)) == 0.0


def test_modular_triple_actions_at_ln2():
    w = mc.build_weights(LN2, 4)
    t = mc.build_modular_triple(w)
    x01 = matrix_unit(4, 0, 1)
    x10 = matrix_unit(4, 1, 0)
    from landau_modular.hs_space import flatten, unflatten
    assert np.allclose(unflatten(t.delta @ flatten(x01)), 2.0 * x01, atol=1e-13)
    assert np.allclose(t.S(x01), math.sqrt(2.0) * x10, atol=1e-13)
    assert np.allclose(t.J(x01), x10)


def test_s_conjugates_algebra_orbit():
    w = mc.build_weights(0.7, 8)
    t = mc.build_modular_triple(w)
    phi = mc.cyclic_vector(w)
    rng = SplitMix64(20)
    for _ in range(20):
        a = rng.complex_matrix(8)
        assert np.linalg.norm(t.S(a @ phi) - a.conj().T @ phi) < 1e-11


def test_modular_flow_phase_and_invariance():
    w = mc.build_weights(LN2, 4)
    x01 = matrix_unit(4, 0, 1)
    assert np.allclose(mc.modular_flow(w, 0.0, x01), x01)
    # E_1 - E_0 = (1/beta) log(alpha_0 / alpha_1) = 1 at beta = ln 2, and the
    # flow multiplies the (j, k) entry by exp(i t (E_j - E_k)); this sign is
    # the one consistent with the boundary values of kms_function
    t = 1.3
    assert np.allclose(mc.modular_flow(w, t, x01), np.exp(-1j * t) * x01,
                       atol=1e-14)
    rng = SplitMix64(21)
    a = rng.complex_matrix(4)
    assert abs(mc.state_eval(w, mc.modular_flow(w, 0.9, a))
               - mc.state_eval(w, a)) < 1e-13


def test_kms_function_examples():
    w = mc.build_weights(LN2, 4)
    eye = np.eye(4)
    for z in (0.3, 1.0 + 0.5j):
        assert abs(mc.kms_function(w, eye, eye, z) - 1.0) < 1e-13
    x00 = matrix_unit(4, 0, 0)
    assert abs(mc.kms_function(w, x00, x00, 2.0 + 1.0j) - 8 / 15) < 1e-13
    x01, x10 = matrix_unit(4, 0, 1), matrix_unit(4, 1, 0)
    for t in (-2.0, 0.0, 1.5):
        assert abs(mc.kms_function(w, x01, x10, complex(t))
                   - w.alpha[0] * np.exp(1j * t)) < 1e-14
        assert abs(mc.kms_function(w, x01, x10, complex(t, w.beta))
                   - w.alpha[1] * np.exp(1j * t)) < 1e-14


def test_kms_function_overflow_guard():
    w = mc.build_weights(1.0, 16)
    a = np.eye(16)
    with pytest.raises(OverflowError):
        mc.kms_function(w, a, a, complex(0.0, 1e4))


def test_kms_boundary_deviation_small():
    w = mc.build_weights(0.7, 16)
    grid = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    assert mc.kms_boundary_deviation(w, np.eye(16), np.eye(16), grid) < 1e-14
    rng = SplitMix64(22)
    for _ in range(5):
        a = rng.complex_matrix(16)
        b = rng.complex_matrix(16)
        assert mc.kms_boundary_deviation(w, a, b, grid) < 1e-10


def test_centralizer_member_and_witness():
    w = mc.build_weights(0.7, 8)
    rng = SplitMix64(23)
    diag = np.diag(rng.complex_matrix(8).diagonal())
    member, witness = mc.centralizer_member(w, diag)
    assert member and witness is None
    member, witness = mc.centralizer_member(w, matrix_unit(8, 0, 1))
    assert not member and witness == (0, 1)


def test_centralizer_agrees_with_pairing_oracle():
    w = mc.build_weights(0.7, 4)
    rng = SplitMix64(24)
    for trial in range(8):
        b = rng.complex_matrix(4)
        if trial % 2 == 0:
            b = np.diag(np.diag(b))
        member, _ = mc.centralizer_member(w, b)
        pair_dev = max(
            abs(mc.state_eval(w, b @ matrix_unit(4, k, l)
                              - matrix_unit(4, k, l) @ b))
            for k in range(4) for l in range(4))
        assert member == (pair_dev <= 1e-10)
