import math

import numpy as np
import pytest

from landau_modular import cgauss_quad as quad
from landau_modular import complex_hermite as chp


def test_rule_invariants():
    rule = quad.build_rule(8, 12)
    assert np.all(rule.weights > 0)
    assert abs(rule.weights.sum() - 1.0) < 1e-13
    assert rule.nodes.shape == (8 * 12,)


def test_build_rule_rejects_bad_orders():
    with pytest.raises(ValueError):
        quad.build_rule(0, 8)
    with pytest.raises(ValueError):
        quad.build_rule(4, 1)


def test_basic_integrals():
    rule = quad.build_rule(10, 12)
    assert abs(quad.integrate(rule, lambda z: 1.0) - 1.0) < 1e-14
    assert abs(quad.integrate(rule, lambda z: z)) < 1e-14
    assert abs(quad.integrate(rule, lambda z: abs(z) ** 2) - 1.0) < 1e-13
    assert abs(quad.integrate(rule, lambda z: abs(z) ** 4) - 2.0) < 1e-12


def test_certificate_matches_observed_exactness():
    rule = quad.build_rule(5, 6)
    for m in range(12):
        for k in range(12):
            got = quad.integrate_values(
                rule, rule.nodes.conj() ** m * rule.nodes ** k)
            err = abs(got - quad.gauss_moment(m, k))
            scale = max(1.0, math.gamma((m + k) / 2.0 + 1.0))
            if quad.covers(rule, m, k):
                assert err / scale < 1e-13, (m, k)


def test_moment_sweep_at_default_orders():
    rule = quad.build_rule(40, 64)
    for m in range(13):
        for k in range(13):
            got = quad.integrate_values(
                rule, rule.nodes.conj() ** m * rule.nodes ** k)
            scale = max(1.0, math.gamma((m + k) / 2.0 + 1.0))
            assert abs(got - quad.gauss_moment(m, k)) / scale < 1e-12


def test_hermite_basis_norm_via_quadrature():
    rule = quad.build_rule(8, 9)
    b = chp.H_basis(2, 3)
    got = quad.integrate(
        rule, lambda z: abs(chp.eval_normalized(b, z)) ** 2)
    assert abs(got - 1.0) < 1e-12


def test_integrate_rejects_non_finite():
    rule = quad.build_rule(4, 4)
    with pytest.raises(ValueError, match="finite"):
        quad.integrate(rule, lambda z: float("nan"))


def test_monotone_convergence_on_kernel():
    w = 0.9 + 0.3j
    exact = math.exp(abs(w) ** 2)
    errs = []
    for r, k in ((4, 8), (8, 16), (16, 32)):
        rule = quad.build_rule(r, k)
        got = quad.integrate(
            rule, lambda z: np.exp(np.conj(z) * w + z * np.conj(w)))
        errs.append(abs(got - exact))
    assert errs[0] > errs[1] > errs[2]


def test_real_rule_normalizes_gaussian():
    x, w = quad.real_gauss_rule(40)
    total = float(np.sum(w * np.exp(-x ** 2)))
    assert abs(total - math.sqrt(math.pi)) < 1e-12


def test_export_csv(tmp_path):
    rule = quad.build_rule(3, 4)
    path = tmp_path / "rule.csv"
    quad.export_rule_csv(rule, str(path))
    lines = path.read_text().strip().splitlines()
    assert lines[0] == "index,re,im,weight"
    assert len(lines) == 1 + 12
