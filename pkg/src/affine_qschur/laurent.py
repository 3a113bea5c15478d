"""
Exact Laurent polynomials in one variable ``v`` over the integers.

A polynomial is stored sparsely as ``{exponent: coefficient}`` with no zero
coefficients, so structural equality is mathematical equality.

>>> p = LaurentPoly({0: 1, 2: 1})
>>> str(p * p)
'1 + 2*v^2 + v^4'
>>> str(p.bar())
'v^-2 + 1'
>>> str(qint(3))
'1 + v^2 + v^4'
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "V",
    "monomial",
    "qint",
    "bracket",
    "qbinom_entry",
    "BRACKET_CONVENTIONS",
    "get_bracket_convention",
    "set_bracket_convention",
]


class LaurentPoly:
    """An element of Z[v, v^-1]. Immutable by convention."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c: Dict[int, int] = {}
        if coeffs:
            for e, a in coeffs.items():
                if a:
                    c[int(e)] = int(a)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: Dict[int, int]) -> "LaurentPoly":
        # caller guarantees canonical form
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def const(cls, a: int) -> "LaurentPoly":
        return cls._raw({0: a} if a else {})

    # -- inspection -----------------------------------------------------

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    def items(self) -> Iterable[Tuple[int, int]]:
        return self._c.items()

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("degree of the zero polynomial")
        return max(self._c)

    def valuation(self) -> int:
        if not self._c:
            raise ValueError("valuation of the zero polynomial")
        return min(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def evaluate(self, x):
        return sum(a * x**e for e, a in self._c.items())

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((f, y),) = b.items()
            return LaurentPoly._raw({e + f: x * y for e, x in a.items()})
        c: Dict[int, int] = {}
        for e, x in a.items():
            for f, y in b.items():
                k = e + f
                c[k] = c.get(k, 0) + x * y
        return LaurentPoly._raw({k: s for k, s in c.items() if s})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if self.is_monomial():
                ((e, a),) = self._c.items()
                if a in (1, -1):
                    return LaurentPoly._raw({-e * -k: a ** (-k)})
            raise ValueError("only unit monomials are invertible")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``v**k``."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: a for e, a in self._c.items()})

    scale_by_monomial = shift

    def bar(self) -> "LaurentPoly":
        """The involution ``v -> v^-1``."""
        return LaurentPoly._raw({-e: a for e, a in self._c.items()})

    def divmod(self, divisor: "LaurentPoly") -> Tuple["LaurentPoly", "LaurentPoly"]:
        """Long division after clearing negative exponents.

        Both operands are shifted to ordinary polynomials; the quotient is
        exact iff the returned remainder is zero.
        """
        if not divisor._c:
            raise ZeroDivisionError("division by zero polynomial")
        if not self._c:
            return ZERO, ZERO
        s0, d0 = min(self._c), min(divisor._c)
        den = {e - d0: a for e, a in divisor._c.items()}
        dtop = max(den)
        dlead = den[dtop]
        rem = {e - s0: a for e, a in self._c.items()}
        quo: Dict[int, int] = {}
        while rem:
            top = max(rem)
            if top < dtop or rem[top] % dlead:
                break
            q = rem[top] // dlead
            k = top - dtop
            quo[k] = q
            for e, b in den.items():
                s = rem.get(e + k, 0) - q * b
                if s:
                    rem[e + k] = s
                else:
                    rem.pop(e + k, None)
        return (
            LaurentPoly({e + s0 - d0: a for e, a in quo.items()}),
            LaurentPoly({e + s0: a for e, a in rem.items()}),
        )

    def exact_div(self, divisor: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return q

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- rendering / serialization --------------------------------------

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            a = self._c[e]
            if e == 0:
                body = str(abs(a))
            else:
                var = "v" if e == 1 else f"v^{e}"
                body = var if abs(a) == 1 else f"{abs(a)}*{var}"
            if not parts:
                parts.append(("-" if a < 0 else "") + body)
            else:
                parts.append(("- " if a < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self) -> Dict[str, int]:
        return {str(e): a for e, a in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "LaurentPoly":
        return cls({int(e): int(a) for e, a in data.items()})


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
V = LaurentPoly._raw({1: 1})


def monomial(e: int, a: int = 1) -> LaurentPoly:
    return LaurentPoly._raw({e: a} if a else {})


def qint(a: int) -> LaurentPoly:
    """``<a> = (v^{2a} - 1)/(v^2 - 1) = 1 + v^2 + ... + v^{2(a-1)}``."""
    if a < 0:
        raise ValueError(f"qint needs a >= 0, got {a}")
    return LaurentPoly._raw({2 * k: 1 for k in range(a)})


# The quantum integer [m] used inside the entrywise binomial product.
#   unbalanced: [m] = <m> = 1 + v^2 + ... + v^{2(m-1)}
#   balanced:   [m] = (v^m - v^-m)/(v - v^-1) = v^{-(m-1)} <m>
BRACKET_CONVENTIONS = ("unbalanced", "balanced")
_bracket = ["unbalanced"]


def get_bracket_convention() -> str:
    return _bracket[0]


def set_bracket_convention(name: str) -> None:
    if name not in BRACKET_CONVENTIONS:
        raise ValueError(f"unknown bracket convention {name!r}")
    _bracket[0] = name


def bracket(m: int, convention: str | None = None) -> LaurentPoly:
    convention = convention or _bracket[0]
    if convention == "unbalanced":
        return qint(m)
    if convention == "balanced":
        return LaurentPoly._raw({2 * k - (m - 1): 1 for k in range(m)})
    raise ValueError(f"unknown bracket convention {convention!r}")


@lru_cache(maxsize=None)
def _qbinom(a: int, b: int, convention: str) -> LaurentPoly:
    num = ONE
    for m in range(b + 1, a + b + 1):
        num = num * bracket(m, convention)
    den = ONE
    for m in range(1, a + 1):
        den = den * bracket(m, convention)
    q, r = num.divmod(den)
    assert not r, f"inexact quantum binomial ({a}, {b})"
    return q


def qbinom_entry(a: int, b: int, convention: str | None = None) -> LaurentPoly:
    """``([a+b][a+b-1]...[b+1]) / ([a][a-1]...[1])`` in the configured bracket."""
    if a < 0 or b < 0:
        raise ValueError(f"qbinom_entry needs a, b >= 0, got ({a}, {b})")
    return _qbinom(a, b, convention or _bracket[0])
