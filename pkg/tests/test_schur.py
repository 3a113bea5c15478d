import json

import pytest

from affine_qschur.hecke import oracle_product
from affine_qschur.laurent import ONE, LaurentPoly, set_bracket_convention
from affine_qschur.schur import (
    SchurElement,
    admissible_product,
    highest_term,
    highest_term_data,
    identity_element,
    is_unitriangular,
    leading_term,
    mult_bidiag,
    mult_general,
    off_diagonal,
    standard,
)
from affine_qschur.theta import diag_matrix, e_matrix, enumerate_theta, from_entries

X = from_entries(2, [(1, 2, 1), (2, 1, 1)])
LOW = diag_matrix((1, 1))


def test_element_arithmetic():
    a = standard(X)
    b = SchurElement(2, 2, {LOW: LaurentPoly({1: 1})})
    s = a + b
    assert s[X] == ONE and s[LOW] == LaurentPoly({1: 1})
    assert s - b == a
    assert (a - a).terms == {}
    assert 3 * a == a.scale(3)
    assert len(s) == 2 and s.support() == sorted([X, LOW])
    assert s.bar_coefficients()[LOW] == LaurentPoly({-1: 1})
    with pytest.raises(ValueError):
        SchurElement(2, 3, {X: ONE})
    with pytest.raises(ValueError):
        a + SchurElement(2, 3)


def test_json_round_trip():
    x = SchurElement(2, 2, {X: LaurentPoly({0: 1}), LOW: LaurentPoly({-1: 1, 2: -3})})
    doc = json.loads(json.dumps(x.to_json()))
    assert doc["terms"][0]["coeff"] in ({"0": 1}, {"-1": 1, "2": -3})
    assert SchurElement.from_json(doc) == x


def test_off_diagonal():
    assert off_diagonal(from_entries(2, [(1, 1, 1), (1, 2, 2), (2, 3, 3)])) == ("upper", (3, 2))
    assert off_diagonal(from_entries(2, [(2, 1, 4), (1, 1, 1)])) == ("lower", (4, 0))
    assert off_diagonal(LOW) == ("both", (0, 0))
    with pytest.raises(ValueError):
        off_diagonal(X)


def test_diagonal_factors_act_as_local_identities():
    for A in enumerate_theta(2, 3, 2):
        assert mult_bidiag(diag_matrix(A.ro()), standard(A)) == standard(A)
        for lam in [(3, 0), (2, 1), (1, 2), (0, 3)]:
            if lam != A.ro():
                assert not mult_bidiag(diag_matrix(lam), standard(A))


def test_mismatched_product_is_zero():
    assert mult_bidiag(e_matrix(2, 1, 2), standard(e_matrix(2, 1, 2))) == SchurElement(2, 1)
    assert mult_general(standard(e_matrix(2, 1, 2)), standard(e_matrix(2, 1, 2))) == SchurElement(2, 1)


def test_small_products():
    up, down = e_matrix(2, 1, 2), e_matrix(2, 2, 1)
    assert mult_bidiag(up, standard(down)) == standard(e_matrix(2, 1, 1))
    B = from_entries(2, [(1, 2, 1), (2, 2, 1)])
    got = mult_bidiag(B, standard(e_matrix(2, 2, 1) + e_matrix(2, 2, 2)))
    assert got == oracle_product(B, e_matrix(2, 2, 1) + e_matrix(2, 2, 2))


def test_highest_term_worked_example():
    B = from_entries(2, [(1, 1, 1), (1, 2, 2), (2, 2, 3), (2, 3, 1)])
    A = from_entries(2, [(1, 2, 2), (2, 1, 3), (2, 2, 1), (2, 3, 1)])
    Tp, M = highest_term_data(B, A)
    assert Tp == from_entries(2, [(1, 2, 1), (2, 2, 1), (2, 3, 1)])
    assert M == from_entries(2, [(0, 2, 1), (1, 2, 2), (1, 3, 1), (2, 1, 3)])
    top, c = leading_term(mult_bidiag(B, standard(A)))
    assert top == M
    assert c == LaurentPoly({-1: 1, 1: 1})


def test_highest_term_lower():
    B = from_entries(2, [(1, 1, 1), (2, 1, 1), (2, 2, 1)])
    A = from_entries(2, [(1, 0, 1), (1, 1, 1), (2, 2, 1)])
    M = highest_term(B, A)
    assert M == from_entries(2, [(1, 1, 1), (2, 0, 1), (2, 2, 1)])
    assert leading_term(mult_bidiag(B, standard(A)))[0] == M


def test_highest_term_requires_compatible_shapes():
    with pytest.raises(ValueError):
        highest_term(e_matrix(2, 1, 2), e_matrix(2, 1, 2))


def test_admissible_product():
    A = from_entries(2, [(1, 1, 1), (2, 3, 1)])
    B = from_entries(2, [(1, 1, 1), (1, 2, 1)])
    x = admissible_product(B, A)
    assert is_unitriangular(x, highest_term(B, A))
    with pytest.raises(ValueError):
        admissible_product(B, from_entries(2, [(1, 2, 1), (2, 2, 1)]))


def test_leading_term_needs_unique_maximum():
    a = standard(diag_matrix((2, 0))) + standard(diag_matrix((0, 2)))
    with pytest.raises(ValueError):
        leading_term(a)


def test_identity_element():
    one = identity_element(2, 2)
    assert len(one) == 3
    x = standard(X) + standard(LOW).scale(LaurentPoly({3: 1}))
    assert mult_general(one, x) == x
    assert mult_general(x, one) == x


def test_wrong_bracket_convention_disagrees_with_oracle():
    B = from_entries(2, [(1, 1, 1), (1, 2, 1)])
    A = from_entries(2, [(1, 1, 1), (2, 2, 1)])
    mats = [(B, A)] + [
        (P, Q) for P in enumerate_theta(2, 2, 1) if P.is_bidiagonal()
        for Q in enumerate_theta(2, 2, 2) if Q.ro() == P.co()
    ]
    set_bracket_convention("balanced")
    try:
        bad = [pq for pq in mats if mult_bidiag(pq[0], standard(pq[1])) != oracle_product(*pq)]
    finally:
        set_bracket_convention("unbalanced")
    assert bad
    assert all(mult_bidiag(P, standard(Q)) == oracle_product(P, Q) for P, Q in mats)


def test_worked_pair_agrees_with_oracle_beyond_default_cap(monkeypatch):
    from affine_qschur import hecke

    monkeypatch.setattr(hecke, "MAX_D", 7)
    B = from_entries(2, [(1, 1, 1), (1, 2, 2), (2, 2, 3), (2, 3, 1)])
    A = from_entries(2, [(1, 2, 2), (2, 1, 3), (2, 2, 1), (2, 3, 1)])
    assert mult_bidiag(B, standard(A)) == oracle_product(B, A)


def test_highest_term_strictly_increases_with_column():
    from affine_qschur.theta import Order, leq_a

    A = from_entries(2, [(1, 0, 1), (1, 1, 1), (1, 3, 1), (2, 1, 2), (2, 2, 1), (2, 4, 1)])
    for i in (1, 2):
        cols = sorted(A.row(i))
        moved = [A - e_matrix(2, i, j) + e_matrix(2, i, j).shift_up() for j in cols]
        assert all(leq_a(x, y) is Order.LT for x, y in zip(moved, moved[1:]))
