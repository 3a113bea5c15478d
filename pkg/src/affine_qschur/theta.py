"""
Periodic Z x Z matrices over the naturals (the index set of the standard basis).

A :class:`ThetaMatrix` stores the entries of rows ``1..n`` sparsely; every
other row is a translate, ``a_{i+n, j+n} = a_{ij}``.
"""
from __future__ import annotations

import enum
import itertools
import math
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .affine_weyl import Composition

__all__ = [
    "ThetaMatrix",
    "Order",
    "e_matrix",
    "from_entries",
    "diag_matrix",
    "sigma",
    "leq_a",
    "enumerate_theta",
    "downset",
    "is_admissible",
    "sort_key",
]


def _norm(n: int, i: int, j: int) -> Tuple[int, int]:
    q, r = divmod(i - 1, n)
    return r + 1, j - q * n


class ThetaMatrix:
    """An ``n``-periodic matrix with finitely many nonzero entries per period."""

    __slots__ = ("n", "_entries", "_key", "_hash", "_d")

    def __init__(self, n: int, entries: Mapping[Tuple[int, int], int] | Iterable = ()):
        if n <= 0:
            raise ValueError("period n must be positive")
        acc: Dict[Tuple[int, int], int] = {}
        items = entries.items() if isinstance(entries, Mapping) else (((i, j), a) for i, j, a in entries)
        for (i, j), a in items:
            a = int(a)
            if a < 0:
                raise ValueError(f"negative entry {a} at ({i}, {j})")
            if a:
                key = _norm(n, int(i), int(j))
                acc[key] = acc.get(key, 0) + a
        self.n = n
        self._entries = acc
        self._key = tuple(sorted(acc.items()))
        self._hash = hash((n, self._key))
        self._d = sum(acc.values())

    @classmethod
    def _raw(cls, n: int, acc: Dict[Tuple[int, int], int]) -> "ThetaMatrix":
        A = object.__new__(cls)
        A.n = n
        A._entries = acc
        A._key = tuple(sorted(acc.items()))
        A._hash = hash((n, A._key))
        A._d = sum(acc.values())
        return A

    # -- access -----------------------------------------------------------

    @property
    def d(self) -> int:
        return self._d

    @property
    def entries(self) -> Dict[Tuple[int, int], int]:
        """Nonzero entries ``{(i, j): a}`` with ``1 <= i <= n``."""
        return dict(self._entries)

    def items(self):
        return self._key

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        return self._entries.get(_norm(self.n, *ij), 0)

    def row(self, i: int) -> Dict[int, int]:
        """Row ``i`` (any integer) as ``{column: entry}``."""
        q, r = divmod(i - 1, self.n)
        shift = q * self.n
        return {j + shift: a for (x, j), a in self._key if x == r + 1}

    def column(self, j: int) -> Dict[int, int]:
        """Column ``j`` (any integer) as ``{row: entry}``, rows ranging over Z."""
        n = self.n
        out = {}
        for (i, y), a in self._key:
            if (j - y) % n == 0:
                out[i + (j - y)] = a
        return out

    def ro(self) -> Composition:
        r = [0] * self.n
        for (i, _), a in self._key:
            r[i - 1] += a
        return tuple(r)

    def co(self) -> Composition:
        c = [0] * self.n
        for (_, j), a in self._key:
            c[(j - 1) % self.n] += a
        return tuple(c)

    def bandwidth(self) -> int:
        return max((abs(i - j) for (i, j), _ in self._key), default=0)

    def diagonals(self) -> Dict[int, int]:
        """Total of each diagonal ``k = j - i`` over one period."""
        out: Dict[int, int] = {}
        for (i, j), a in self._key:
            out[j - i] = out.get(j - i, 0) + a
        return out

    def is_zero(self) -> bool:
        return not self._key

    # -- algebra of matrices ----------------------------------------------

    def __add__(self, other: "ThetaMatrix") -> "ThetaMatrix":
        self._check_n(other)
        acc = dict(self._entries)
        for k, a in other._key:
            acc[k] = acc.get(k, 0) + a
        return ThetaMatrix._raw(self.n, acc)

    def __sub__(self, other: "ThetaMatrix") -> "ThetaMatrix":
        self._check_n(other)
        acc = dict(self._entries)
        for k, a in other._key:
            s = acc.get(k, 0) - a
            if s < 0:
                raise ValueError(f"subtraction leaves negative entry at {k}")
            if s:
                acc[k] = s
            else:
                del acc[k]
        return ThetaMatrix._raw(self.n, acc)

    def scale(self, c: int) -> "ThetaMatrix":
        if c < 0:
            raise ValueError("negative scale")
        return ThetaMatrix._raw(self.n, {k: a * c for k, a in self._key if c})

    def _check_n(self, other):
        if self.n != other.n:
            raise ValueError(f"period mismatch: {self.n} vs {other.n}")

    def split(self) -> Tuple["ThetaMatrix", "ThetaMatrix"]:
        """``(diag(A), A^pm)`` with ``A = diag(A) + A^pm``."""
        dg = {k: a for k, a in self._key if k[0] == k[1]}
        off = {k: a for k, a in self._key if k[0] != k[1]}
        return ThetaMatrix._raw(self.n, dg), ThetaMatrix._raw(self.n, off)

    def shift_up(self) -> "ThetaMatrix":
        """Entry ``(i, j)`` of the result is entry ``(i+1, j)`` of ``self``."""
        return ThetaMatrix(self.n, {(i - 1, j): a for (i, j), a in self._key})

    def shift_down(self) -> "ThetaMatrix":
        """Entry ``(i, j)`` of the result is entry ``(i-1, j)`` of ``self``."""
        return ThetaMatrix(self.n, {(i + 1, j): a for (i, j), a in self._key})

    def negate_indices(self) -> "ThetaMatrix":
        """The matrix ``(a_{-i,-j})_{ij}``."""
        return ThetaMatrix(self.n, {(-i, -j): a for (i, j), a in self._key})

    def transpose(self) -> "ThetaMatrix":
        return ThetaMatrix(self.n, {(j, i): a for (i, j), a in self._key})

    # -- statistics -------------------------------------------------------

    def _pairs(self, cond) -> int:
        """``sum a_ij a_xy`` over ``1 <= i <= n``, ``j`` in Z and all ``(x, y)`` with ``cond(i, j, x, y)``."""
        n, bw = self.n, self.bandwidth()
        total = 0
        for (i, j), a in self._key:
            # any partner within reach of the quadrant conditions has |x - i| <= 2*bw + n
            lo, hi = i - 2 * bw - n, i + 2 * bw + n
            for (x0, y0), b in self._key:
                for q in range((lo - x0) // n, (hi - x0) // n + 1):
                    x, y = x0 + q * n, y0 + q * n
                    if cond(i, j, x, y):
                        total += a * b
        return total

    def ell(self) -> int:
        """Length of the minimal double coset representative (pair-count formula)."""
        return self._pairs(lambda i, j, x, y: x > i and y < j)

    def ell_columnwise(self) -> int:
        """The same length via the column-indexed double sum."""
        return self.transpose()._pairs(lambda i, j, x, y: x > i and y < j)

    def d_of(self) -> int:
        """The exponent ``d_A`` with ``[A] = v^{-d_A} e_A``."""
        return self._pairs(lambda i, j, x, y: x <= i and y > j)

    def delta_seq(self) -> Composition:
        """Column-by-column list of nonzero entries, top to bottom."""
        out: List[int] = []
        for j in range(1, self.n + 1):
            col = self.column(j)
            out.extend(col[i] for i in sorted(col))
        return tuple(out)

    # -- shape predicates -------------------------------------------------

    def triangular_kind(self) -> str:
        """``both``, ``upper``, ``lower`` or ``neither`` for bidiagonal shapes."""
        ks = {j - i for (i, j), _ in self._key}
        upper = ks <= {0, 1}
        lower = ks <= {0, -1}
        if upper and lower:
            return "both"
        if upper:
            return "upper"
        if lower:
            return "lower"
        return "neither"

    def is_bidiagonal(self) -> bool:
        return self.triangular_kind() != "neither"

    def is_diagonal(self) -> bool:
        return all(i == j for (i, j), _ in self._key)

    def is_upper_triangular(self) -> bool:
        return all(j >= i for (i, j), _ in self._key)

    def is_lower_triangular(self) -> bool:
        return all(j <= i for (i, j), _ in self._key)

    # -- identity / rendering ---------------------------------------------

    def __eq__(self, other):
        return isinstance(other, ThetaMatrix) and self.n == other.n and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return (self.n, self._key) < (other.n, other._key)

    def __repr__(self):
        return f"ThetaMatrix({self.n}, {dict(self._key)})"

    def __str__(self):
        if not self._key:
            return "0"
        return " + ".join(
            (f"{a}*" if a != 1 else "") + f"E({i},{j})" for (i, j), a in self._key
        )

    def pretty(self) -> str:
        """Rows ``1-n .. 2n`` over the columns that meet the support, period rows ruled off."""
        n = self.n
        rows = range(1 - n, 2 * n + 1)
        cells = {}
        for r in rows:
            cells.update({(r, c): a for c, a in self.row(r).items()})
        cols = [c for _, c in cells] or [1]
        c_lo, c_hi = min(min(cols), 1 - n), max(max(cols), 2 * n)
        width = max(len(str(a)) for a in list(cells.values()) + [0])
        lines = []
        for r in rows:
            if r in (1, n + 1):
                lines.append("-" * ((width + 1) * (c_hi - c_lo + 1)))
            lines.append(" ".join(str(cells.get((r, c), 0)).rjust(width) for c in range(c_lo, c_hi + 1)))
        header = f"columns {c_lo}..{c_hi}, rows {1 - n}..{2 * n}"
        return header + "\n" + "\n".join(lines)

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "entries": [[i, j, a] for (i, j), a in self._key]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ThetaMatrix":
        n = int(data["n"])
        entries = data.get("entries", [])
        for e in entries:
            if len(e) != 3:
                raise ValueError(f"entry {e} is not [i, j, a]")
            if not 1 <= int(e[0]) <= n:
                raise ValueError(f"row index {e[0]} outside 1..{n}")
            if int(e[2]) <= 0:
                raise ValueError(f"entry {e} must be positive")
        A = cls(n, [tuple(e) for e in entries])
        if "d" in data and int(data["d"]) != A.d:
            raise ValueError(f"declared d={data['d']} but entries sum to {A.d}")
        return A


def e_matrix(n: int, i: int, j: int) -> ThetaMatrix:
    return ThetaMatrix(n, {(i, j): 1})


def from_entries(n: int, entries: Iterable[Tuple[int, int, int]]) -> ThetaMatrix:
    """Build from ``(i, j, a)`` triples; rows are folded into ``1..n`` and duplicates add."""
    return ThetaMatrix(n, list(entries))


def diag_matrix(lam: Sequence[int]) -> ThetaMatrix:
    return ThetaMatrix(len(lam), {(i, i): a for i, a in enumerate(lam, start=1)})


# -- the partial order ------------------------------------------------------


def sigma(A: ThetaMatrix, i: int, j: int) -> int:
    """Quadrant sum: ``sum_{x<=i, y>=j} a_xy`` if ``i < j``, ``sum_{x>=i, y<=j} a_xy`` if ``i > j``."""
    if i == j:
        raise ValueError("sigma needs i != j")
    n = A.n
    total = 0
    for (x0, y0), a in A.items():
        # translates (x0 + qn, y0 + qn) inside the quadrant
        if i < j:
            lo, hi = -((y0 - j) // n), (i - x0) // n
        else:
            lo, hi = -((x0 - i) // n), (j - y0) // n
        if hi >= lo:
            total += a * (hi - lo + 1)
    return total


class Order(str, enum.Enum):
    LT = "LT"
    EQ = "EQ"
    GT = "GT"
    INCOMPARABLE = "INCOMPARABLE"


def _sigma_vector(A: ThetaMatrix, w: int) -> Tuple[int, ...]:
    return tuple(
        sigma(A, i, j) for i in range(1, A.n + 1) for j in range(i - w, i + w + 1) if j != i
    )


def leq_a(A: ThetaMatrix, B: ThetaMatrix) -> Order:
    """Compare under the order by row sums, column sums and quadrant sums."""
    if A.n != B.n or A.ro() != B.ro() or A.co() != B.co():
        return Order.INCOMPARABLE
    if A == B:
        return Order.EQ
    w = max(A.bandwidth(), B.bandwidth())
    sa, sb = _sigma_vector(A, w), _sigma_vector(B, w)
    le = all(x <= y for x, y in zip(sa, sb))
    ge = all(x >= y for x, y in zip(sa, sb))
    if le and not ge:
        return Order.LT
    if ge and not le:
        return Order.GT
    if le and ge:
        raise AssertionError(f"distinct matrices with equal quadrant sums: {A} vs {B}")
    return Order.INCOMPARABLE


def sort_key(A: ThetaMatrix, w: Optional[int] = None) -> int:
    """A number strictly increasing along the order (sum of all quadrant sums in the window)."""
    w = A.bandwidth() if w is None else w
    return sum(_sigma_vector(A, w))


# -- enumeration ------------------------------------------------------------


def enumerate_theta(n: int, d: int, w: int) -> List[ThetaMatrix]:
    """Every matrix of total ``d`` supported on ``|i - j| <= w``."""
    cells = [(i, j) for i in range(1, n + 1) for j in range(i - w, i + w + 1)]
    out = []
    for combo in itertools.combinations_with_replacement(range(len(cells)), d):
        acc: Dict[Tuple[int, int], int] = {}
        for c in combo:
            acc[cells[c]] = acc.get(cells[c], 0) + 1
        out.append(ThetaMatrix._raw(n, acc))
    return out


def downset(A: ThetaMatrix, w: Optional[int] = None) -> List[ThetaMatrix]:
    """``{B : B <=_a A}`` inside the bandwidth-``w`` enumeration (``w`` defaults to ``A``'s)."""
    w = A.bandwidth() if w is None else w
    if w < A.bandwidth():
        raise ValueError("window narrower than the matrix")
    ro, co = A.ro(), A.co()
    return [
        B
        for B in enumerate_theta(A.n, A.d, w)
        if B.ro() == ro and B.co() == co and leq_a(B, A) in (Order.LT, Order.EQ)
    ]


# -- admissible pairs -------------------------------------------------------


def _off_diagonal_weights(B: ThetaMatrix, upper: bool) -> Tuple[int, ...]:
    """Column-indexed off-diagonal of a bidiagonal matrix: ``alpha_i = b_{i-1,i}`` (upper) or ``b_{i+1,i}`` (lower)."""
    n = B.n
    off = 1 if upper else -1
    return tuple(B[(i - off, i)] for i in range(1, n + 1))


def _admissible_upper(B: ThetaMatrix, A: ThetaMatrix) -> bool:
    alpha = _off_diagonal_weights(B, upper=True)
    if not any(alpha):
        return True
    if A.is_zero():
        return False
    k = max(j - i for (i, j), _ in A.items())
    return all(A[(i, i + k)] >= alpha[i - 1] for i in range(1, A.n + 1))


def is_admissible(B: ThetaMatrix, A: ThetaMatrix) -> bool:
    """Admissibility of ``(B, A)``: ``B`` bidiagonal with off-diagonal dominated by ``A``'s outermost diagonal.

    Upper ``B``: with ``k`` the top nonzero diagonal of ``A``, require
    ``a_{i,i+k} >= b_{i-1,i}`` for every row ``i``.  Lower ``B`` is the
    index-negated mirror.
    """
    kind = B.triangular_kind()
    if kind == "neither":
        return False
    if kind == "both":
        return True
    if kind == "upper":
        return _admissible_upper(B, A)
    return _admissible_upper(B.negate_indices(), A.negate_indices())
