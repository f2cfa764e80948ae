import math
from fractions import Fraction

from landau_modular import complex_hermite as chp


def poly(d):
    return chp.BivarPoly.from_dict({mk: chp.QC(*c) for mk, c in d.items()})


def test_base_cases():
    assert chp.ch_recursion(0, 0) == chp.poly_const(1)
    assert chp.ch_recursion(1, 1) == poly({(1, 1): (1, 0), (0, 0): (-1, 0)})
    assert chp.ch_recursion(2, 1) == poly({(2, 1): (1, 0), (1, 0): (-2, 0)})


def test_pure_power_rows():
    for k in range(6):
        assert chp.ch_rodrigues(0, k) == poly({(0, k): (1, 0)})
        assert chp.ch_rodrigues(k, 0) == poly({(k, 0): (1, 0)})


def test_three_constructions_agree_exactly():
    for n in range(13):
        for k in range(13):
            r = chp.ch_recursion(n, k)
            assert r == chp.ch_rodrigues(n, k)
            assert r == chp.ch_explicit(n, k)


def test_literal_explicit_sum_disagrees():
    assert chp.ch_explicit(1, 1, literal=True) == poly({(1, 1): (1, 0),
                                                        (0, 0): (1, 0)})
    diff = chp.ch_explicit(1, 1, literal=True) - chp.ch_rodrigues(1, 1)
    assert diff == chp.poly_const(2)


def test_generating_function_coefficients():
    assert chp.generating_coeff(0, 0) == chp.poly_const(1)
    g11 = chp.generating_coeff(1, 1)
    assert g11 == poly({(1, 1): (1, 0), (0, 0): (-1, 0)})
    assert chp.generating_check(8)


def test_ladder_actions():
    zsq = poly({(0, 2): (1, 0)})
    assert chp.ladder_apply("a_minus", zsq) == poly({(0, 1): (2, 0)})
    # raising from the pure-power row generates the whole family
    for k in range(7):
        p = chp.ch_recursion(0, k)
        for n in range(7):
            assert p == chp.ch_recursion(n, k)
            p = chp.ladder_apply("a_plus_dag", p)


def test_ladder_commutator_is_identity():
    p = chp.ch_recursion(3, 2) + chp.ch_recursion(1, 4).scale(chp.QC(2, 1))
    lhs = chp.ladder_apply("a_minus", chp.ladder_apply("a_minus_dag", p)) \
        - chp.ladder_apply("a_minus_dag", chp.ladder_apply("a_minus", p))
    assert lhs == p


def test_number_operator_eigenvalues():
    zbar = poly({(1, 0): (1, 0)})
    assert chp.number_apply("n_plus", zbar) == zbar
    assert chp.number_apply("n_minus", zbar).is_zero()
    for n in range(7):
        for k in range(7):
            h = chp.ch_recursion(n, k)
            assert chp.number_apply("n_plus", h) == h.scale(n)
            assert chp.number_apply("n_minus", h) == h.scale(k)


def test_index_symmetry():
    for n in range(9):
        for k in range(9):
            a = chp.ch_recursion(n, k).as_dict()
            b = chp.ch_recursion(k, n).as_dict()
            assert {(j, m): c for (m, j), c in a.items()} == b


def test_contiguous_relations():
    for n in range(9):
        assert chp.mul_zbar(chp.ch_recursion(n, n + 1)) == \
            chp.mul_z(chp.ch_recursion(n + 1, n))
    for m in range(9):
        for k in range(9):
            lhs = chp.ch_recursion(m, k).scale(k - m)
            rhs = chp.mul_zbar(chp.ch_recursion(m, k + 1)) \
                - chp.mul_z(chp.ch_recursion(m + 1, k))
            assert lhs == rhs


def test_normalized_basis():
    b = chp.H_basis(3, 0)
    assert b.norm_sq == 6
    assert b.poly == poly({(3, 0): (1, 0)})
    assert abs(chp.eval_normalized(chp.H_basis(1, 1), 1 + 1j) - 1.0) < 1e-15


def test_level_operator_eigenvalues():
    half = Fraction(1, 2)
    for n in range(7):
        for l in range(7):
            h = chp.ch_recursion(n, l)
            up = chp.number_apply("n_minus", h) + h.scale(half)
            assert up == h.scale(Fraction(2 * l + 1, 2))
            down = chp.number_apply("n_plus", h) + h.scale(half)
            assert down == h.scale(Fraction(2 * n + 1, 2))


def test_real_hermite():
    assert chp.real_hermite(0) == [1]
    assert chp.real_hermite(1) == [0, 2]
    assert chp.real_hermite(3) == [0, -12, 0, 8]
    # x h_n = n h_(n-1) + h_(n+1)/2, exactly
    for n in range(1, 9):
        x_hn = [0] + chp.real_hermite(n)
        lower = chp.real_hermite(n - 1)
        upper = chp.real_hermite(n + 1)
        for j in range(n + 2):
            lo = n * lower[j] if j < len(lower) else 0
            up = upper[j] if j < len(upper) else 0
            val = x_hn[j] if j < len(x_hn) else 0
            assert up % 2 == 0
            assert val == lo + up // 2


def test_eval():
    assert chp.eval_poly(chp.ch_recursion(1, 1), 1.0) == 0.0
    z = 0.7 - 0.3j
    assert abs(chp.eval_poly(chp.ch_recursion(0, 3), z) - z**3) < 1e-15
