import math

import pytest
from hypothesis import given, strategies as st

from affine_qschur.laurent import (
    ONE,
    V,
    ZERO,
    LaurentPoly,
    bracket,
    get_bracket_convention,
    monomial,
    qbinom_entry,
    qint,
    set_bracket_convention,
)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def test_zero_coefficients_are_dropped():
    p = LaurentPoly({0: 0, 3: 2, -1: 0})
    assert p.coeffs == {3: 2}
    assert LaurentPoly({1: 0}) == ZERO
    assert not ZERO


def test_text_form():
    assert str(LaurentPoly({-2: 1, 0: 1, 4: -3})) == "v^-2 + 1 - 3*v^4"
    assert str(LaurentPoly({1: 1, 0: -1})) == "-1 + v"
    assert str(ZERO) == "0"
    assert str(LaurentPoly({1: -2})) == "-2*v"


def test_json_round_trip():
    p = LaurentPoly({-3: 4, 0: -1, 7: 2})
    assert p.to_json() == {"-3": 4, "0": -1, "7": 2}
    assert LaurentPoly.from_json(p.to_json()) == p


def test_integer_coercion_and_equality():
    assert ONE + 1 == LaurentPoly({0: 2})
    assert 3 - ONE == LaurentPoly({0: 2})
    assert V * 2 == LaurentPoly({1: 2})
    assert ONE == 1


def test_negative_power_only_for_unit_monomials():
    assert V ** -3 == monomial(-3)
    assert LaurentPoly({2: -1}) ** -1 == LaurentPoly({-2: -1})
    with pytest.raises((ValueError, ZeroDivisionError)):
        (ONE + V) ** -1


def test_bar_reverses_exponents():
    assert LaurentPoly({-1: 2, 3: 1}).bar() == LaurentPoly({1: 2, -3: 1})


def test_exact_division():
    a = LaurentPoly({0: 1, 2: 1})
    b = LaurentPoly({-1: 1, 5: -2})
    assert (a * b).exact_div(a) == b
    with pytest.raises(ArithmeticError):
        (a + V).exact_div(a)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


@given(polys, polys)
def test_bar_is_a_ring_involution(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert a.bar().bar() == a


@given(polys, st.integers(-4, 4))
def test_shift_is_monomial_multiplication(a, k):
    assert a.shift(k) == a * monomial(k)


@given(polys, polys.filter(bool))
def test_divmod_reconstructs(a, b):
    if not all(abs(x) == 1 for x in (b.coeffs[b.degree()], b.coeffs[b.valuation()])):
        return
    q, r = a.divmod(b)
    assert q * b + r == a


def test_qint():
    assert qint(0) == ZERO
    assert qint(3) == LaurentPoly({0: 1, 2: 1, 4: 1})
    with pytest.raises(ValueError):
        qint(-1)


def test_balanced_bracket_is_symmetric():
    for m in range(6):
        assert bracket(m, "balanced").bar() == bracket(m, "balanced")
        assert bracket(m, "balanced") * monomial(m - 1) == qint(m)


@pytest.mark.parametrize("a,b", [(0, 0), (1, 0), (2, 3), (4, 2), (3, 3)])
@pytest.mark.parametrize("conv", ["unbalanced", "balanced"])
def test_qbinom_specialises_to_binomial(a, b, conv):
    p = qbinom_entry(a, b, conv)
    assert p.evaluate(1) == math.comb(a + b, a)
    assert all(c > 0 for _, c in p.items())


def test_qbinom_small_values():
    assert qbinom_entry(1, 1) == LaurentPoly({0: 1, 2: 1})
    assert qbinom_entry(1, 1, "balanced") == LaurentPoly({-1: 1, 1: 1})
    assert qbinom_entry(0, 5) == ONE
    with pytest.raises(ValueError):
        qbinom_entry(-1, 2)


def test_convention_switch():
    assert get_bracket_convention() == "unbalanced"
    set_bracket_convention("balanced")
    try:
        assert qbinom_entry(1, 1) == LaurentPoly({-1: 1, 1: 1})
    finally:
        set_bracket_convention("unbalanced")
    with pytest.raises(ValueError):
        set_bracket_convention("other")
