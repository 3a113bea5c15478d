"""
Brute-force oracle: the extended affine Hecke algebra and the Schur algebra
realised as homomorphisms between the right ideals ``x_lam H``.

Normalisation: ``(T_s + 1)(T_s - v^2) = 0`` and ``T_g T_h = T_{gh}`` when
lengths add.  A Schur-algebra element ``f`` from ``x_mu H`` to ``x_lam H`` is
determined by ``f(x_mu)``, which is a combination of double coset sums
``T_{W_lam g W_mu}``; reading those coefficients back gives the standard
basis expansion.  Everything here is exponential in ``d`` and refuses
``d > MAX_D``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple

from . import affine_weyl as aw
from .affine_weyl import AffinePerm
from .laurent import ONE, ZERO, LaurentPoly, monomial
from .schur import SchurElement
from .theta import ThetaMatrix

__all__ = [
    "MAX_D",
    "OracleScaleError",
    "HeckeElement",
    "T",
    "hecke_mul",
    "hecke_bar",
    "x_of",
    "coset_sum",
    "standard_action",
    "expand_in_standard",
    "oracle_product",
    "oracle_bar",
]

MAX_D = 4

_Q = monomial(2)          # v^2
_QM1 = monomial(2) - ONE  # v^2 - 1
_BAR_S = monomial(-2)     # v^-2
_BAR_C = monomial(-2) - ONE


class OracleScaleError(ValueError):
    """The oracle was asked to work beyond its supported size."""


def _check_scale(d: int) -> None:
    if d > MAX_D:
        raise OracleScaleError(f"the Hecke oracle supports d <= {MAX_D}, got d = {d}")


class HeckeElement:
    """A finite combination ``sum c_g T_g``."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: Optional[Mapping[AffinePerm, LaurentPoly]] = None):
        self.d = d
        self.terms: Dict[AffinePerm, LaurentPoly] = {}
        for g, c in (terms or {}).items():
            if g.d != d:
                raise ValueError("period mismatch")
            if c:
                self.terms[g] = c

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.terms)
        for g, c in other.terms.items():
            s = out.get(g, ZERO) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return _raw(self.d, out)

    def __neg__(self):
        return _raw(self.d, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: LaurentPoly) -> "HeckeElement":
        if not c:
            return _raw(self.d, {})
        return _raw(self.d, {g: c * x for g, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(LaurentPoly._coerce(other))
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.d == other.d and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, g: AffinePerm) -> LaurentPoly:
        return self.terms.get(g, ZERO)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [
            f"({c})·T[{','.join(map(str, g.window))};{g.pi_power}]"
            for g, c in sorted(self.terms.items(), key=lambda t: (t[0].length(), t[0].window))
        ]
        return " + ".join(parts)


def _raw(d: int, terms: Dict[AffinePerm, LaurentPoly]) -> HeckeElement:
    h = object.__new__(HeckeElement)
    h.d = d
    h.terms = terms
    return h


def T(g: AffinePerm, c: LaurentPoly = ONE) -> HeckeElement:
    return _raw(g.d, {g: c} if c else {})


def _acc(out: Dict[AffinePerm, LaurentPoly], g: AffinePerm, c: LaurentPoly) -> None:
    s = out.get(g)
    if s is None:
        out[g] = c
    else:
        s = s + c
        if s:
            out[g] = s
        else:
            del out[g]


def _rmul_T_s(terms: Dict[AffinePerm, LaurentPoly], s: int) -> Dict[AffinePerm, LaurentPoly]:
    out: Dict[AffinePerm, LaurentPoly] = {}
    for x, c in terms.items():
        xs = x.right_mult_simple(s)
        if x.has_right_descent(s):
            _acc(out, x, _QM1 * c)
            _acc(out, xs, _Q * c)
        else:
            _acc(out, xs, c)
    return out


def _rmul_pi(terms: Dict[AffinePerm, LaurentPoly], z: int) -> Dict[AffinePerm, LaurentPoly]:
    if not z:
        return terms
    out = {}
    for x, c in terms.items():
        out[AffinePerm._raw(tuple(x(t + z) for t in range(1, x.d + 1)))] = c
    return out


def _rmul_T(terms: Dict[AffinePerm, LaurentPoly], h: AffinePerm) -> Dict[AffinePerm, LaurentPoly]:
    word, z = h.reduced_word()
    terms = _rmul_pi(terms, z)
    for s in word:
        terms = _rmul_T_s(terms, s)
    return terms


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Bilinear product, peeling a reduced word off each right-hand basis element."""
    if a.d != b.d:
        raise ValueError("period mismatch")
    out: Dict[AffinePerm, LaurentPoly] = {}
    for h, c in b.terms.items():
        part = _rmul_T(a.terms, h)
        for g, x in part.items():
            _acc(out, g, x * c)
    return _raw(a.d, out)


@lru_cache(maxsize=100000)
def _bar_T(g: AffinePerm) -> Dict[AffinePerm, LaurentPoly]:
    # bar(T_pi) = T_pi and bar(T_s) = v^-2 T_s + (v^-2 - 1)
    word, z = g.reduced_word()
    terms = {aw.pi(g.d, z): ONE}
    for s in word:
        with_s = _rmul_T_s(terms, s)
        out: Dict[AffinePerm, LaurentPoly] = {}
        for x, c in with_s.items():
            _acc(out, x, _BAR_S * c)
        for x, c in terms.items():
            _acc(out, x, _BAR_C * c)
        terms = out
    return terms


def hecke_bar(a: HeckeElement) -> HeckeElement:
    """``v -> v^-1``, ``T_g -> T_{g^-1}^{-1}``."""
    out: Dict[AffinePerm, LaurentPoly] = {}
    for g, c in a.terms.items():
        cb = c.bar()
        for x, y in _bar_T(g).items():
            _acc(out, x, y * cb)
    return _raw(a.d, out)


# -- parabolic sums ---------------------------------------------------------


def x_of(lam: Sequence[int]) -> HeckeElement:
    d = sum(lam)
    return _raw(d, {w: ONE for w in aw.parabolic_elements(lam)})


def _d_delta_cap(delta: Sequence[int], mu: Sequence[int]) -> Tuple[AffinePerm, ...]:
    """Minimal representatives of the cosets ``W_delta y`` inside ``W_mu``."""
    gens = aw.parabolic(delta)
    return tuple(y for y in aw.parabolic_elements(mu) if not any(y.has_left_descent(s) for s in gens))


@lru_cache(maxsize=100000)
def _coset_sum(lam: Tuple[int, ...], g: AffinePerm, mu: Tuple[int, ...]) -> HeckeElement:
    _check_scale(g.d)
    if not aw.is_distinguished(g, lam, aw.Side.DOUBLE, mu):
        raise ValueError(f"{g} is not minimal in its double coset")
    delta = aw.delta_of(lam, g, mu)
    tail = _raw(g.d, {y: ONE for y in _d_delta_cap(delta, mu)})
    h = hecke_mul(hecke_mul(x_of(lam), T(g)), tail)
    assert all(c == ONE for c in h.terms.values()), "double coset sum has a non-unit coefficient"
    assert len(h.terms) == len(aw.parabolic_elements(lam)) * len(tail.terms)
    return h


def coset_sum(lam: Sequence[int], g: AffinePerm, mu: Sequence[int]) -> HeckeElement:
    """``T_{W_lam g W_mu}`` computed as ``x_lam T_g T_{D_delta cap W_mu}``."""
    return _coset_sum(tuple(lam), g, tuple(mu))


@lru_cache(maxsize=100000)
def standard_action(A: ThetaMatrix) -> HeckeElement:
    """The image of ``x_mu`` under ``[A]``: ``v^{-d_A} T_{W_lam g W_mu}``."""
    _check_scale(A.d)
    lam, g, mu = aw.kappa_inv(A)
    return coset_sum(lam, g, mu).scale(monomial(-A.d_of()))


def expand_in_standard(h: HeckeElement, lam: Sequence[int], mu: Sequence[int]) -> SchurElement:
    """Write ``h = f(x_mu)`` and return ``f`` in the standard basis.

    Each double coset contains its minimal element exactly once, so the
    coefficient of ``T_g`` at a minimal ``g`` is the coefficient of the
    coset sum.
    """
    lam, mu = tuple(lam), tuple(mu)
    n = len(lam)
    rest = dict(h.terms)
    out: Dict[ThetaMatrix, LaurentPoly] = {}
    while rest:
        x = next(iter(rest))
        g = aw.min_double_coset_rep(lam, x, mu)
        c = rest.get(g)
        if not c:
            raise ArithmeticError(f"element is not a combination of double coset sums (at {x})")
        for y in coset_sum(lam, g, mu).terms:
            s = rest.get(y, ZERO) - c
            if s:
                rest[y] = s
            else:
                rest.pop(y, None)
        A = aw.kappa(lam, g, mu, check=False)
        out[A] = c.shift(A.d_of())
    return SchurElement(n, sum(lam), out)


def oracle_product(A: ThetaMatrix, B: ThetaMatrix) -> SchurElement:
    """``[A] * [B]`` by composing the homomorphisms on ``x_nu``."""
    if A.n != B.n or A.d != B.d:
        raise ValueError("shape mismatch")
    if A.co() != B.ro():
        return SchurElement(A.n, A.d)
    _check_scale(A.d)
    mu, h, nu = aw.kappa_inv(B)
    tail = _raw(B.d, {y: ONE for y in _d_delta_cap(B.delta_seq(), nu)})
    right = hecke_mul(T(h, monomial(-B.d_of())), tail)
    return expand_in_standard(hecke_mul(standard_action(A), right), A.ro(), nu)


def oracle_bar(A: ThetaMatrix) -> SchurElement:
    """Bar involution through ``f -> (x_mu H -> v^{2 l(w_mu)} bar(f(x_mu)) H)``."""
    _check_scale(A.d)
    lam, mu = A.ro(), A.co()
    _, lw = aw.longest_parabolic(mu)
    h = hecke_bar(standard_action(A)).scale(monomial(2 * lw))
    return expand_in_standard(h, lam, mu)
