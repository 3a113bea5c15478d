"""
Elements of the affine q-Schur algebra in the standard basis ``{[A]}`` and
products with bidiagonal left factors.

For bidiagonal ``B`` with ``co(B) = ro(A)`` the product ``[B] * [A]`` is an
explicit sum over matrices ``T`` with ``ro(T)`` equal to the off-diagonal of
``B`` and ``0 <= t_ij <= a_ij``: entries of ``T`` move one row up (upper
``B``) or down (lower ``B``), weighted by a power of ``v`` and a barred
product of quantum binomials.  General products go through the monomial
basis (see :mod:`.bases`), so this module never needs the Hecke oracle.
"""
from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .affine_weyl import compositions
from .laurent import ONE, ZERO, LaurentPoly, get_bracket_convention, qbinom_entry
from .theta import Order, ThetaMatrix, diag_matrix, is_admissible, leq_a

__all__ = [
    "SchurElement",
    "standard",
    "identity_element",
    "leading_term",
    "is_unitriangular",
    "off_diagonal",
    "mult_bidiag",
    "highest_term",
    "highest_term_data",
    "admissible_product",
    "mult_general",
]


class SchurElement:
    """A finite sum ``sum c_A [A]`` with all ``A`` of period ``n`` and total ``d``."""

    __slots__ = ("n", "d", "terms")

    def __init__(self, n: int, d: int, terms: Optional[Mapping[ThetaMatrix, LaurentPoly]] = None):
        self.n = n
        self.d = d
        self.terms: Dict[ThetaMatrix, LaurentPoly] = {}
        for A, c in (terms or {}).items():
            if A.n != n or A.d != d:
                raise ValueError(f"{A} does not have shape (n={n}, d={d})")
            c = LaurentPoly._coerce(c)
            if c:
                self.terms[A] = c

    @classmethod
    def _raw(cls, n, d, terms):
        x = object.__new__(cls)
        x.n, x.d, x.terms = n, d, terms
        return x

    def _check(self, other: "SchurElement"):
        if (self.n, self.d) != (other.n, other.d):
            raise ValueError(f"shape mismatch: {(self.n, self.d)} vs {(other.n, other.d)}")

    def __add__(self, other: "SchurElement") -> "SchurElement":
        self._check(other)
        out = dict(self.terms)
        for A, c in other.terms.items():
            s = out.get(A, ZERO) + c
            if s:
                out[A] = s
            else:
                out.pop(A, None)
        return SchurElement._raw(self.n, self.d, out)

    def __neg__(self):
        return SchurElement._raw(self.n, self.d, {A: -c for A, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SchurElement":
        c = LaurentPoly._coerce(c)
        if not c:
            return SchurElement(self.n, self.d)
        return SchurElement._raw(self.n, self.d, {A: c * x for A, x in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (LaurentPoly, int)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, SchurElement):
            return mult_general(self, other)
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __getitem__(self, A: ThetaMatrix) -> LaurentPoly:
        return self.terms.get(A, ZERO)

    def __eq__(self, other):
        return (
            isinstance(other, SchurElement)
            and (self.n, self.d) == (other.n, other.d)
            and self.terms == other.terms
        )

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def support(self) -> List[ThetaMatrix]:
        return sorted(self.terms)

    def bar_coefficients(self) -> "SchurElement":
        return SchurElement._raw(self.n, self.d, {A: c.bar() for A, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*[{A}]" for A, c in sorted(self.terms.items()))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "terms": [
                {"matrix": A.to_json(), "coeff": c.to_json()} for A, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "SchurElement":
        terms: Dict[ThetaMatrix, LaurentPoly] = {}
        for t in data.get("terms", []):
            A = ThetaMatrix.from_json(t["matrix"])
            terms[A] = terms.get(A, ZERO) + LaurentPoly.from_json(t["coeff"])
        return cls(int(data["n"]), int(data["d"]), terms)


def standard(A: ThetaMatrix) -> SchurElement:
    return SchurElement._raw(A.n, A.d, {A: ONE})


def identity_element(n: int, d: int) -> SchurElement:
    """``sum_lam [diag(lam)]``, the unit of the algebra."""
    return SchurElement(n, d, {diag_matrix(lam): ONE for lam in compositions(n, d)})


def leading_term(x: SchurElement) -> Tuple[ThetaMatrix, LaurentPoly]:
    """The unique maximal key of ``x`` under the quadrant order, with its coefficient."""
    keys = list(x.terms)
    maxima = [A for A in keys if not any(leq_a(A, B) is Order.LT for B in keys)]
    if len(maxima) != 1:
        raise ValueError(f"no unique leading term; maximal keys: {[str(A) for A in maxima]}")
    return maxima[0], x.terms[maxima[0]]


def is_unitriangular(x: SchurElement, A: ThetaMatrix) -> bool:
    """``x = [A] + (terms strictly below A)``."""
    if x[A] != ONE:
        return False
    return all(leq_a(B, A) is Order.LT for B in x.terms if B != A)


# -- bidiagonal products ------------------------------------------------------


def off_diagonal(B: ThetaMatrix) -> Tuple[str, Tuple[int, ...]]:
    """``(kind, alpha)`` with ``alpha_i = b_{i-1,i}`` (upper) or ``b_{i+1,i}`` (lower)."""
    kind = B.triangular_kind()
    if kind == "neither":
        raise ValueError(f"{B} is not bidiagonal")
    if kind == "both":
        return "both", (0,) * B.n
    off = 1 if kind == "upper" else -1
    return kind, tuple(B[(i - off, i)] for i in range(1, B.n + 1))


def _row_choices(row: List[Tuple[int, int]], total: int) -> Iterator[Tuple[int, ...]]:
    """All ``(t_1, ..., t_k)`` with ``0 <= t_m <= a_m`` summing to ``total``."""
    if not row:
        if total == 0:
            yield ()
        return
    (_, a), rest = row[0], row[1:]
    cap = sum(x for _, x in rest)
    for t in range(max(0, total - cap), min(a, total) + 1):
        for tail in _row_choices(rest, total - t):
            yield (t,) + tail


def _rows(A: ThetaMatrix) -> List[List[Tuple[int, int]]]:
    rows: List[List[Tuple[int, int]]] = [[] for _ in range(A.n)]
    for (i, j), a in A.items():
        rows[i - 1].append((j, a))
    return rows


def _bidiag_terms(A: ThetaMatrix, alpha: Sequence[int], up: bool) -> Dict[ThetaMatrix, LaurentPoly]:
    n = A.n
    rows = _rows(A)
    out: Dict[ThetaMatrix, LaurentPoly] = {}
    per_row = [list(_row_choices(rows[i], alpha[i])) for i in range(n)]

    def rec(i: int, chosen: List[Tuple[int, ...]]):
        if i == n:
            _one_term(chosen)
            return
        for c in per_row[i]:
            chosen.append(c)
            rec(i + 1, chosen)
            chosen.pop()

    def _one_term(chosen):
        # rem[i], moved[i]: row i (1..n, stored 0-based) of A - T and of the shifted T
        rem = [dict() for _ in range(n)]
        tt = [dict() for _ in range(n)]
        for i in range(n):
            for (j, a), t in zip(rows[i], chosen[i]):
                if a - t:
                    rem[i][j] = a - t
                if t:
                    tt[i][j] = t
        moved = [dict() for _ in range(n)]
        for i in range(n):
            for j, t in tt[i].items():
                if up:
                    # row i+1 of T becomes row i; row 1 wraps to row n, columns + n
                    r, c = (i - 1, j) if i > 0 else (n - 1, j + n)
                else:
                    r, c = (i + 1, j) if i < n - 1 else (0, j - n)
                moved[r][c] = t
        beta = 0
        coeff = ONE
        M: Dict[Tuple[int, int], int] = {}
        for i in range(n):
            ri, mi, ti = rem[i], moved[i], tt[i]
            for j, s in mi.items():
                if up:
                    beta += s * sum(a for y, a in ri.items() if y >= j)
                else:
                    beta += s * sum(a for y, a in ri.items() if y <= j)
            for j, t in ti.items():
                if up:
                    beta -= t * sum(a for y, a in ri.items() if y > j)
                else:
                    beta -= t * sum(a for y, a in ri.items() if y < j)
            for j, a in ri.items():
                M[(i + 1, j)] = a
            for j, s in mi.items():
                a = ri.get(j, 0)
                if a:
                    coeff = coeff * qbinom_entry(a, s).bar()
                M[(i + 1, j)] = a + s
        key = ThetaMatrix._raw(n, M)
        c = coeff.shift(beta)
        prev = out.get(key)
        out[key] = c if prev is None else prev + c

    rec(0, [])
    return {k: c for k, c in out.items() if c}


_CACHE_LIMIT = 200000
_bidiag_cache: Dict[Tuple[ThetaMatrix, Tuple[int, ...], bool, str], Dict[ThetaMatrix, LaurentPoly]] = {}


def _bidiag_basis_product(A: ThetaMatrix, alpha: Tuple[int, ...], up: bool) -> Dict[ThetaMatrix, LaurentPoly]:
    key = (A, alpha, up, get_bracket_convention())
    hit = _bidiag_cache.get(key)
    if hit is None:
        if len(_bidiag_cache) > _CACHE_LIMIT:
            _bidiag_cache.clear()
        hit = _bidiag_terms(A, alpha, up)
        _bidiag_cache[key] = hit
    return hit


def mult_bidiag(B: ThetaMatrix, x: SchurElement) -> SchurElement:
    """``[B] * x`` for bidiagonal ``B`` via the explicit row-shift formula."""
    if (B.n, B.d) != (x.n, x.d):
        raise ValueError("shape mismatch")
    kind, alpha = off_diagonal(B)
    co = B.co()
    out: Dict[ThetaMatrix, LaurentPoly] = {}
    for A, c in x.terms.items():
        if A.ro() != co:
            continue
        if kind == "both":
            prod = {A: ONE}
        else:
            prod = _bidiag_basis_product(A, alpha, kind == "upper")
        for M, m in prod.items():
            s = out.get(M, ZERO) + m * c
            if s:
                out[M] = s
            else:
                out.pop(M, None)
    return SchurElement._raw(x.n, x.d, out)


def highest_term_data(B: ThetaMatrix, A: ThetaMatrix) -> Tuple[ThetaMatrix, ThetaMatrix]:
    """``(T_plus, M)``: shift ``alpha_i`` units of row ``i`` starting from its outermost entries."""
    if B.co() != A.ro():
        raise ValueError("highest_term needs co(B) = ro(A)")
    kind, alpha = off_diagonal(B)
    if kind == "both":
        return ThetaMatrix(A.n), A
    up = kind == "upper"
    T: Dict[Tuple[int, int], int] = {}
    for i in range(1, A.n + 1):
        need = alpha[i - 1]
        row = sorted(A.row(i).items(), reverse=up)
        assert need <= sum(a for _, a in row), "alpha exceeds the row sum"
        for j, a in row:
            if not need:
                break
            t = min(a, need)
            T[(i, j)] = t
            need -= t
    Tp = ThetaMatrix(A.n, T)
    moved = Tp.shift_up() if up else Tp.shift_down()
    return Tp, A - Tp + moved


def highest_term(B: ThetaMatrix, A: ThetaMatrix) -> ThetaMatrix:
    return highest_term_data(B, A)[1]


def admissible_product(B: ThetaMatrix, A: ThetaMatrix) -> SchurElement:
    """``[B] * [A]`` for an admissible pair, checked to be ``[M] + lower terms``."""
    if not is_admissible(B, A):
        raise ValueError(f"({B}, {A}) is not an admissible pair")
    x = mult_bidiag(B, standard(A))
    M = highest_term(B, A)
    assert is_unitriangular(x, M), f"product is not [M] + lower terms for M = {M}"
    return x


def mult_general(x: SchurElement, y: SchurElement, ctx=None) -> SchurElement:
    """Product of arbitrary elements, expanding the left factor in the monomial basis."""
    from .bases import BasisContext

    x._check(y)
    if ctx is None:
        ctx = BasisContext(x.n, x.d)
    out = SchurElement(x.n, x.d)
    for A, c in x.terms.items():
        out = out + ctx.left_multiply(A, y).scale(c)
    return out
