import pytest

from affine_qschur.bases import BasisContext, factor_bidiagonal, transition_tables
from affine_qschur.laurent import ONE, ZERO, LaurentPoly
from affine_qschur.schur import SchurElement, is_unitriangular, mult_bidiag, standard
from affine_qschur.theta import Order, diag_matrix, enumerate_theta, from_entries, leq_a

X = from_entries(2, [(1, 2, 1), (2, 1, 1)])
LOW = diag_matrix((1, 1))


def test_diagonal_chain_is_itself():
    D = diag_matrix((2, 1))
    ch = factor_bidiagonal(D)
    assert ch.factors == (D,)
    assert ch.upper == ()


def test_upper_bidiagonal_chain():
    A = from_entries(2, [(1, 1, 1), (1, 2, 2), (2, 3, 1)])
    ch = factor_bidiagonal(A)
    assert ch.factors == (A, diag_matrix(A.co()))


def test_lower_bidiagonal_chain():
    A = from_entries(2, [(2, 1, 2), (1, 0, 1), (2, 2, 1)])
    assert factor_bidiagonal(A).factors == (A,)


@pytest.mark.parametrize("n,d,w", [(2, 3, 3), (3, 3, 3), (2, 4, 2)])
def test_chain_invariants(n, d, w):
    for A in enumerate_theta(n, d, w):
        ch = factor_bidiagonal(A)
        fs = ch.factors
        assert all(B.is_bidiagonal() for B in fs)
        assert all(fs[k].co() == fs[k + 1].ro() for k in range(len(fs) - 1))
        assert fs[0].ro() == A.ro() and fs[-1].co() == A.co()
        assert all(B.is_upper_triangular() for B in ch.upper)
        assert all(B.is_lower_triangular() for B in ch.lower)
        assert ch.u_steps[0] == A and ch.l_steps[0] == ch.u_steps[-1]
        assert ch.l_steps[-1] == fs[-1]


def test_chain_json():
    A = from_entries(2, [(1, 3, 1), (2, 1, 1)])
    doc = factor_bidiagonal(A).to_json(show_chain=True)
    assert set(doc) == {"source", "upper", "lower", "U", "L"}
    assert "U" not in factor_bidiagonal(A).to_json()


def test_monomial_of_bidiagonal_is_standard():
    ctx = BasisContext(2, 3)
    bidiagonal = [A for A in enumerate_theta(2, 3, 1) if A.is_bidiagonal()]
    assert len(bidiagonal) > 10
    for A in bidiagonal:
        assert ctx.monomial(A) == standard(A)


def test_small_monomial():
    ctx = BasisContext(2, 2)
    m = ctx.monomial(X)
    assert set(m.terms) == {X, LOW}
    assert m[X] == ONE
    assert m[LOW] == LaurentPoly({-1: 1})


def test_stagewise_telescoping():
    A = from_entries(3, [(1, 3, 1), (2, 1, 1), (3, 2, 1)])
    ctx = BasisContext(3, 3)
    ch = ctx.chain(A)
    x = standard(ch.factors[-1])
    for B, target in zip(reversed(ch.factors[:-1]), ch.stage_targets()[1:]):
        x = mult_bidiag(B, x)
        assert is_unitriangular(x, target)
    assert x == ctx.monomial(A)


def test_small_bar():
    ctx = BasisContext(2, 2)
    assert ctx.bar_standard(X) == SchurElement(2, 2, {X: ONE, LOW: LaurentPoly({-1: 1, 1: -1})})
    assert ctx.bar_standard(LOW) == standard(LOW)
    assert ctx.bar(ctx.bar_standard(X)) == standard(X)


def test_bar_is_semilinear():
    ctx = BasisContext(2, 2)
    c = LaurentPoly({2: 1, -1: 3})
    assert ctx.bar(standard(X).scale(c)) == ctx.bar_standard(X).scale(c.bar())


def test_small_canonical():
    ctx = BasisContext(2, 2)
    assert ctx.canonical(X) == SchurElement(2, 2, {X: ONE, LOW: LaurentPoly({-1: 1})})
    assert ctx.canonical(LOW) == standard(LOW)


def test_canonical_is_unique_at_small_scale():
    # adding any nonzero v^-1 Z[v^-1] correction at a lower matrix breaks bar invariance
    ctx = BasisContext(2, 2)
    for A in enumerate_theta(2, 2, 2):
        c = ctx.canonical(A)
        lower = [B for B in enumerate_theta(2, 2, 2) if leq_a(B, A) is Order.LT]
        for B in lower:
            for p in (LaurentPoly({-1: 1}), LaurentPoly({-2: 1, -1: -1})):
                y = c + standard(B).scale(p)
                assert ctx.bar(y) != y


def test_canonical_elements_are_unitriangular():
    ctx = BasisContext(2, 3)
    for A in enumerate_theta(2, 3, 2):
        c = ctx.canonical(A)
        assert is_unitriangular(c, A)
        assert all(p.degree() < 0 for B, p in c.terms.items() if B != A)


def test_context_rejects_foreign_matrices():
    ctx = BasisContext(2, 2)
    with pytest.raises(ValueError):
        ctx.monomial(diag_matrix((1, 2)))
    with pytest.raises(ValueError):
        ctx.canonical(diag_matrix((1, 1, 0)))


def test_transition_tables():
    mono, canon = transition_tables(2, 1, 1)
    assert len(mono) == 6
    assert all(x == standard(A) for A, x in mono.items())
    mono, canon = transition_tables(2, 2, 2)
    assert mono[X][LOW] == LaurentPoly({-1: 1})
    assert canon[X][LOW] == LaurentPoly({-1: 1})
    for table in (mono, canon):
        assert all(is_unitriangular(x, A) for A, x in table.items())


def test_left_multiply_matches_bidiagonal_formula():
    ctx = BasisContext(2, 3)
    mats = enumerate_theta(2, 3, 2)
    for B in mats:
        if not B.is_bidiagonal():
            continue
        for A in mats:
            if A.ro() == B.co():
                assert ctx.left_multiply(B, standard(A)) == mult_bidiag(B, standard(A))


def test_lower_highest_term_on_worked_chain():
    from affine_qschur.schur import highest_term

    A = from_entries(2, [(0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 4), (2, 1, 5), (2, 0, 6)])
    ch = factor_bidiagonal(A)
    B1, L1 = ch.lower
    U3 = ch.u_steps[-1]
    assert highest_term(B1, L1) == U3
    assert U3 == L1 - from_entries(2, [(1, 0, 6)]) + from_entries(2, [(2, 0, 6)])
