import pytest
import sympy as sp

from src.laurent import LOOP_WEIGHT, LaurentPoly


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({2: 1, -1: 0, 0: 3})
    assert p.terms == {0: 3, 2: 1}
    assert LaurentPoly({1: 2, 3: -2}) + LaurentPoly({1: -2, 3: 2}) == LaurentPoly.zero()


def test_arithmetic():
    a = LaurentPoly({1: 1, -1: 1})
    assert a * a == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert a - a == 0
    assert a * 3 == LaurentPoly({1: 3, -1: 3})
    assert 2 + LaurentPoly.one() == 3
    assert -a == LaurentPoly({1: -1, -1: -1})


def test_degree_and_valuation():
    p = LaurentPoly({-7: 1, -3: -1, 5: -1})
    assert p.degree() == 5
    assert p.valuation() == -7
    assert p.coefficient(-3) == -1
    assert p.coefficient(4) == 0
    with pytest.raises(ValueError):
        LaurentPoly.zero().degree()


def test_powers():
    assert LOOP_WEIGHT ** 2 == LaurentPoly({4: 1, 0: 2, -4: 1})
    assert LOOP_WEIGHT ** 0 == 1
    assert LaurentPoly.monomial(3, -1) ** -2 == LaurentPoly.monomial(-6)
    with pytest.raises(ValueError):
        LOOP_WEIGHT ** -1


def test_substitute_power():
    assert LaurentPoly({1: 1, -2: 3}).substitute_power(-4) == LaurentPoly({-4: 1, 8: 3})


def test_render():
    assert LaurentPoly({5: -1, -3: -1, -7: 1}).render() == "-A^5 - A^-3 + A^-7"
    assert LaurentPoly({0: 2, 1: 1}).render("t") == "t + 2"
    assert LaurentPoly({2: 3}).render() == "3*A^2"
    assert str(LaurentPoly.zero()) == "0"


def test_sympy_and_json_views():
    A = sp.Symbol("A")
    p = LaurentPoly({2: -1, -2: -1})
    assert sp.simplify(p.to_sympy(A) - (-A**2 - A**-2)) == 0
    assert p.to_json() == {"-2": -1, "2": -1}


def test_hash_is_value_based():
    assert len({LaurentPoly({1: 1}), LaurentPoly.monomial(1), LaurentPoly({1: 2, 0: 0}) - LaurentPoly({1: 1})}) == 1


def test_mixing_with_unsupported_types_fails():
    with pytest.raises(TypeError):
        LaurentPoly.one() + 1.5
