"""
Bidiagonal factorisation, the monomial basis, the bar involution on the
standard basis and the canonical basis.

All memoisation lives in an explicit :class:`BasisContext` for one shape
``(n, d)``.  A context is not thread safe; use one per thread.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .laurent import ONE, ZERO, LaurentPoly
from .schur import (
    SchurElement,
    is_unitriangular,
    mult_bidiag,
    standard,
)
from .theta import (
    Order,
    ThetaMatrix,
    enumerate_theta,
    is_admissible,
    leq_a,
    sort_key,
)

__all__ = [
    "BidiagonalChain",
    "BasisContext",
    "factor_bidiagonal",
    "monomial",
    "bar_standard",
    "canonical",
    "transition_tables",
]


@dataclass(frozen=True)
class BidiagonalChain:
    """Factors of ``m_A`` in multiplication order: ``upper`` then ``lower``.

    ``lower`` ends with the final lower-bidiagonal remainder.  ``u_steps``
    and ``l_steps`` hold ``U^(0) = A, U^(1), ...`` and ``L^(0), L^(1), ...``.
    """

    source: ThetaMatrix
    upper: Tuple[ThetaMatrix, ...]
    lower: Tuple[ThetaMatrix, ...]
    u_steps: Tuple[ThetaMatrix, ...] = field(default=())
    l_steps: Tuple[ThetaMatrix, ...] = field(default=())

    @property
    def factors(self) -> Tuple[ThetaMatrix, ...]:
        return self.upper + self.lower

    def stage_targets(self) -> List[ThetaMatrix]:
        """Expected leading matrix after multiplying the last ``k`` factors, ``k = 1, 2, ...``."""
        return list(reversed(self.l_steps)) + list(reversed(self.u_steps[:-1]))

    def to_json(self, show_chain: bool = False) -> dict:
        out = {
            "source": self.source.to_json(),
            "upper": [B.to_json() for B in self.upper],
            "lower": [B.to_json() for B in self.lower],
        }
        if show_chain:
            out["U"] = [U.to_json() for U in self.u_steps]
            out["L"] = [L.to_json() for L in self.l_steps]
        return out


def _with_row_sums(off: Dict[Tuple[int, int], int], n: int, ro: Sequence[int]) -> ThetaMatrix:
    """Complete an off-diagonal part by the diagonal forced by the row sums."""
    used = [0] * n
    for (i, _), a in off.items():
        used[i - 1] += a
    diag = {}
    for i in range(1, n + 1):
        b = ro[i - 1] - used[i - 1]
        assert b >= 0, f"negative diagonal entry {b} in row {i}"
        if b:
            diag[(i, i)] = b
    return ThetaMatrix(n, {**off, **diag})


def factor_bidiagonal(A: ThetaMatrix) -> BidiagonalChain:
    """Strip outer diagonals one at a time, upper ones first.

    An upper strip at distance ``k`` moves each ``u_{i,i+k}`` one row down and
    records ``u_{i,i+k} E_{i,i+1}``; a lower strip at distance ``k`` moves each
    ``l_{i+k,i}`` one row up and records ``l_{i+k,i} E_{i+k,i+k-1}``.
    """
    n = A.n
    U = A
    upper, us = [], [A]
    while not U.is_lower_triangular():
        k = max(j - i for (i, j), _ in U.items())
        T = {(i, j): a for (i, j), a in U.items() if j - i == k}
        off = {(i, i + 1): a for (i, _), a in T.items()}
        B = _with_row_sums(off, n, U.ro())
        Tm = ThetaMatrix(n, T)
        U = U - Tm + Tm.shift_down()
        assert B.co() == U.ro()
        assert is_admissible(B, U), f"non-admissible upper pair ({B}, {U})"
        upper.append(B)
        us.append(U)
    L = U
    lower, ls = [], [L]
    while True:
        k = max(i - j for (i, j), _ in L.items())
        if k <= 1:
            break
        T = {(i, j): a for (i, j), a in L.items() if i - j == k}
        off = {(i, i - 1): a for (i, _), a in T.items()}
        B = _with_row_sums(off, n, L.ro())
        Tm = ThetaMatrix(n, T)
        L = L - Tm + Tm.shift_up()
        assert B.co() == L.ro()
        assert is_admissible(B, L), f"non-admissible lower pair ({B}, {L})"
        lower.append(B)
        ls.append(L)
    lower.append(L)
    return BidiagonalChain(A, tuple(upper), tuple(lower), tuple(us), tuple(ls))


class BasisContext:
    """Memo tables for one algebra ``S(n, d)``."""

    def __init__(self, n: int, d: int):
        self.n = n
        self.d = d
        self._chains: Dict[ThetaMatrix, BidiagonalChain] = {}
        self._mono: Dict[ThetaMatrix, SchurElement] = {}
        self._bar: Dict[ThetaMatrix, SchurElement] = {}
        self._canon: Dict[ThetaMatrix, SchurElement] = {}
        self._inv: Dict[ThetaMatrix, Dict[ThetaMatrix, LaurentPoly]] = {}

    def _own(self, A: ThetaMatrix):
        if (A.n, A.d) != (self.n, self.d):
            raise ValueError(f"{A} does not belong to S({self.n}, {self.d})")

    def chain(self, A: ThetaMatrix) -> BidiagonalChain:
        self._own(A)
        c = self._chains.get(A)
        if c is None:
            c = self._chains[A] = factor_bidiagonal(A)
        return c

    def apply_chain(self, A: ThetaMatrix, y: SchurElement) -> SchurElement:
        """``m_A * y``, multiplying the factors into ``y`` from the right end."""
        for B in reversed(self.chain(A).factors):
            y = mult_bidiag(B, y)
        return y

    def monomial(self, A: ThetaMatrix) -> SchurElement:
        """``m_A``, asserted to be ``[A]`` plus strictly lower terms at every stage."""
        self._own(A)
        m = self._mono.get(A)
        if m is not None:
            return m
        ch = self.chain(A)
        factors = ch.factors
        x = standard(factors[-1])
        targets = ch.stage_targets()
        assert targets[0] == factors[-1]
        for B, target in zip(reversed(factors[:-1]), targets[1:]):
            x = mult_bidiag(B, x)
            assert is_unitriangular(x, target), f"stage leading term is not [{target}]"
        assert is_unitriangular(x, A), f"m_A is not [A] + lower terms for A = {A}"
        self._mono[A] = x
        return x

    def bar_standard(self, A: ThetaMatrix) -> SchurElement:
        """``bar([A]) = m_A - sum bar(c_B) bar([B])`` where ``m_A = [A] + sum c_B [B]``."""
        self._own(A)
        r = self._bar.get(A)
        if r is not None:
            return r
        m = self.monomial(A)
        r = m
        for B, c in m.terms.items():
            if B != A:
                r = r - self.bar_standard(B).scale(c.bar())
        self._bar[A] = r
        return r

    def bar(self, x: SchurElement) -> SchurElement:
        """Semilinear extension of the bar involution."""
        out = SchurElement(x.n, x.d)
        for A, c in x.terms.items():
            out = out + self.bar_standard(A).scale(c.bar())
        return out

    def standard_in_monomial(self, A: ThetaMatrix) -> Dict[ThetaMatrix, LaurentPoly]:
        """Coefficients ``e_D`` with ``[A] = sum e_D m_D``."""
        self._own(A)
        r = self._inv.get(A)
        if r is not None:
            return r
        out: Dict[ThetaMatrix, LaurentPoly] = {A: ONE}
        for C, c in self.monomial(A).terms.items():
            if C == A:
                continue
            for D, e in self.standard_in_monomial(C).items():
                s = out.get(D, ZERO) - c * e
                if s:
                    out[D] = s
                else:
                    out.pop(D, None)
        self._inv[A] = out
        return out

    def left_multiply(self, A: ThetaMatrix, y: SchurElement) -> SchurElement:
        """``[A] * y`` through ``[A] = sum e_D m_D``."""
        out = SchurElement(self.n, self.d)
        if A.co() not in {B.ro() for B in y.terms}:
            return out
        for D, e in self.standard_in_monomial(A).items():
            out = out + self.apply_chain(D, y).scale(e)
        return out

    def _universe(self, A: ThetaMatrix) -> List[ThetaMatrix]:
        seen: Set[ThetaMatrix] = {A}
        stack = [A]
        while stack:
            B = stack.pop()
            for C in self.bar_standard(B).terms:
                if C not in seen:
                    seen.add(C)
                    stack.append(C)
        return list(seen)

    def canonical(self, A: ThetaMatrix) -> SchurElement:
        """The bar-invariant ``[A] + sum_{B < A} P_B [B]`` with ``P_B`` in ``v^-1 Z[v^-1]``."""
        self._own(A)
        r = self._canon.get(A)
        if r is not None:
            return r
        universe = self._universe(A)
        w = max(B.bandwidth() for B in universe)
        order = sorted(universe, key=lambda B: sort_key(B, w), reverse=True)
        assert order[0] == A
        bars = {B: self.bar_standard(B) for B in universe}
        p: Dict[ThetaMatrix, LaurentPoly] = {A: ONE}
        for C in order[1:]:
            # p_C - bar(p_C) = sum_{B > C} bar(p_B) * (coefficient of [C] in bar([B]))
            q = ZERO
            for B, pb in p.items():
                q = q + pb.bar() * bars[B][C]
            if not q:
                continue
            if q.bar() != -q:
                raise ArithmeticError(
                    f"no bar-invariant correction at {C} below {A}; ideal = {[str(B) for B in universe]}"
                )
            neg = LaurentPoly({e: a for e, a in q.items() if e < 0})
            if neg:
                p[C] = neg
        r = SchurElement(self.n, self.d, p)
        self._canon[A] = r
        return r


def monomial(A: ThetaMatrix, ctx: Optional[BasisContext] = None) -> SchurElement:
    return (ctx or BasisContext(A.n, A.d)).monomial(A)


def bar_standard(A: ThetaMatrix, ctx: Optional[BasisContext] = None) -> SchurElement:
    return (ctx or BasisContext(A.n, A.d)).bar_standard(A)


def canonical(A: ThetaMatrix, ctx: Optional[BasisContext] = None) -> SchurElement:
    return (ctx or BasisContext(A.n, A.d)).canonical(A)


def transition_tables(
    n: int, d: int, w: int, ctx: Optional[BasisContext] = None
) -> Tuple[Dict[ThetaMatrix, SchurElement], Dict[ThetaMatrix, SchurElement]]:
    """Monomial and canonical elements of every matrix in the bandwidth-``w`` enumeration."""
    ctx = ctx or BasisContext(n, d)
    mono, canon = {}, {}
    for A in enumerate_theta(n, d, w):
        mono[A] = ctx.monomial(A)
        canon[A] = ctx.canonical(A)
    return mono, canon
