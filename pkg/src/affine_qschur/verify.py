"""
Exhaustive and sampled consistency checks shared by the command line and
the test suite.

Each suite returns a :class:`SuiteResult` that counts checked cases and
keeps the first few counterexamples as printable dictionaries.  Nothing in
here raises on a mathematical failure; callers decide what a failure means.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import affine_weyl as aw
from .bases import BasisContext
from .hecke import MAX_D, oracle_bar, oracle_product
from .laurent import ONE
from .schur import (
    SchurElement,
    identity_element,
    is_unitriangular,
    leading_term,
    mult_bidiag,
    mult_general,
    highest_term,
    standard,
)
from .theta import Order, ThetaMatrix, enumerate_theta, is_admissible, leq_a

__all__ = [
    "SUITES",
    "SuiteResult",
    "run_suite",
    "run_suites",
    "oracle_suite",
    "unitriangular_suite",
    "bar_suite",
    "canonical_suite",
    "algebra_suite",
    "structure_suite",
]

KEEP = 3


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    counterexamples: List[dict] = field(default_factory=list)
    notes: Dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, passed: bool, **detail) -> None:
        self.checked += 1
        if not passed:
            self.failed += 1
            if len(self.counterexamples) < KEEP:
                self.counterexamples.append({k: _show(v) for k, v in detail.items()})

    def note(self, key: str, amount: int = 1) -> None:
        self.notes[key] = self.notes.get(key, 0) + amount

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "".join(f", {k}={v}" for k, v in sorted(self.notes.items()))
        return f"{self.name}: {status} ({self.checked - self.failed}/{self.checked} passed{extra})"

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "failed": self.failed,
            "counterexamples": self.counterexamples,
            "notes": dict(self.notes),
        }


def _show(v):
    if isinstance(v, (ThetaMatrix, SchurElement)):
        return v.to_json()
    if isinstance(v, (str, int, bool)) or v is None:
        return v
    return str(v)


def _by_row_sums(mats: Iterable[ThetaMatrix]) -> Dict[Tuple[int, ...], List[ThetaMatrix]]:
    out: Dict[Tuple[int, ...], List[ThetaMatrix]] = {}
    for A in mats:
        out.setdefault(A.ro(), []).append(A)
    return out


def _require_oracle(d: int) -> None:
    if d > MAX_D:
        raise ValueError(f"oracle-backed suites need d <= {MAX_D}")


# -- suites -----------------------------------------------------------------


def oracle_suite(n: int, d: int, w: int, ctx: Optional[BasisContext] = None, **_) -> SuiteResult:
    """Bidiagonal row-shift products against the Hecke-algebra oracle."""
    _require_oracle(d)
    res = SuiteResult("oracle")
    mats = enumerate_theta(n, d, w)
    rows = _by_row_sums(mats)
    for B in mats:
        if not B.is_bidiagonal():
            continue
        for A in rows.get(B.co(), ()):
            fast = mult_bidiag(B, standard(A))
            slow = oracle_product(B, A)
            res.record(fast == slow, left=B, right=A, formula=fast, oracle=slow)
    return res


def unitriangular_suite(n: int, d: int, w: int, ctx: Optional[BasisContext] = None, **_) -> SuiteResult:
    """Monomial elements, highest terms of bidiagonal products and admissible pairs."""
    ctx = ctx or BasisContext(n, d)
    res = SuiteResult("unitriangular")
    mats = enumerate_theta(n, d, w)
    for A in mats:
        try:
            m = ctx.monomial(A)
            ok = is_unitriangular(m, A)
        except AssertionError as exc:
            m, ok = str(exc), False
        res.record(ok, check="monomial", matrix=A, monomial=m)
    rows = _by_row_sums(mats)
    for B in mats:
        if not B.is_bidiagonal():
            continue
        for A in rows.get(B.co(), ()):
            x = mult_bidiag(B, standard(A))
            M = highest_term(B, A)
            try:
                top, c = leading_term(x)
                ok = top == M
            except ValueError:
                top, c, ok = None, None, False
            res.record(ok, check="highest term", left=B, right=A, expected=M, found=top)
            if is_admissible(B, A):
                res.note("admissible pairs")
                res.record(c == ONE, check="admissible unit coefficient", left=B, right=A, coefficient=c)
    return res


def bar_suite(n: int, d: int, w: int, ctx: Optional[BasisContext] = None, **_) -> SuiteResult:
    """Bar involution: oracle agreement, fixed points, involutivity, Bruhat triangularity."""
    ctx = ctx or BasisContext(n, d)
    res = SuiteResult("bar")
    use_oracle = d <= MAX_D
    for A in enumerate_theta(n, d, w):
        b = ctx.bar_standard(A)
        if use_oracle:
            o = oracle_bar(A)
            res.record(b == o, check="oracle bar", matrix=A, recursive=b, oracle=o)
        if A.is_bidiagonal():
            res.record(b == standard(A), check="bidiagonal fixed", matrix=A, bar=b)
        m = ctx.monomial(A)
        res.record(ctx.bar(m) == m, check="monomial fixed", matrix=A)
        res.record(ctx.bar(b) == standard(A), check="involution", matrix=A)
        res.record(is_unitriangular(b, A), check="triangular", matrix=A, bar=b)
        lam, g, mu = aw.kappa_inv(A)
        for B in b.terms:
            if B == A:
                continue
            _, h, _ = aw.kappa_inv(B)
            res.record(
                h != g and aw.bruhat_leq(h, g), check="Bruhat support", matrix=A, term=B
            )
    return res


def canonical_suite(n: int, d: int, w: int, ctx: Optional[BasisContext] = None, **_) -> SuiteResult:
    """Bar invariance and the degree condition; sign positivity is only counted in ``notes``."""
    ctx = ctx or BasisContext(n, d)
    res = SuiteResult("canonical")
    for A in enumerate_theta(n, d, w):
        try:
            c = ctx.canonical(A)
        except ArithmeticError as exc:
            res.record(False, check="construction", matrix=A, error=str(exc))
            continue
        res.record(ctx.bar(c) == c, check="bar invariant", matrix=A, canonical=c)
        res.record(c[A] == ONE, check="leading coefficient", matrix=A)
        for B, p in c.terms.items():
            if B == A:
                continue
            res.record(
                leq_a(B, A) is Order.LT and p.degree() < 0,
                check="lower term in v^-1 Z[v^-1]",
                matrix=A,
                term=B,
                coefficient=p,
            )
            if any(a < 0 for _, a in p.items()):
                res.note("negative coefficients")
    return res


def _random_chain(rng: random.Random, mats: Sequence[ThetaMatrix], rows, length: int) -> List[ThetaMatrix]:
    while True:
        out = [rng.choice(mats)]
        for _ in range(length - 1):
            nxt = rows.get(out[-1].co())
            if not nxt:
                break
            out.append(rng.choice(nxt))
        if len(out) == length:
            return out


def algebra_suite(
    n: int, d: int, w: int, ctx: Optional[BasisContext] = None, seed: int = 0, samples: int = 100, **_
) -> SuiteResult:
    """Two-sided identity, oracle agreement of general products and seeded associativity."""
    ctx = ctx or BasisContext(n, d)
    res = SuiteResult("algebra")
    one = identity_element(n, d)
    mats = enumerate_theta(n, d, w)
    for A in mats:
        x = standard(A)
        res.record(
            mult_general(one, x, ctx) == x and mult_general(x, one, ctx) == x,
            check="identity",
            matrix=A,
        )
    rows = _by_row_sums(mats)
    rng = random.Random(seed)
    use_oracle = d <= MAX_D
    for _ in range(samples):
        A, B, C = _random_chain(rng, mats, rows, 3)
        a, b, c = standard(A), standard(B), standard(C)
        ab = mult_general(a, b, ctx)
        if use_oracle:
            res.record(ab == oracle_product(A, B), check="oracle product", left=A, right=B)
        lhs = mult_general(ab, c, ctx)
        rhs = mult_general(a, mult_general(b, c, ctx), ctx)
        res.record(lhs == rhs, check="associativity", a=A, b=B, c=C)
    return res


def structure_suite(n: int, d: int, w: int, **_) -> SuiteResult:
    """Double coset combinatorics behind the matrix labelling."""
    res = SuiteResult("structure")
    mats = enumerate_theta(n, d, w)
    for A in mats:
        lam, g, mu = aw.kappa_inv(A)
        res.record(aw.kappa(lam, g, mu) == A, check="kappa round trip", matrix=A)
        res.record(A.ell() == g.length() == A.ell_columnwise(), check="length", matrix=A, g=g)
        gp = aw.g_plus(lam, g, mu)
        res.record(
            A.d_of() == gp.length() - aw.longest_parabolic(mu)[1], check="d_A", matrix=A
        )
        delta = A.delta_seq()
        ginv = g.inverse()
        conj = {y for y in aw.parabolic_elements(mu) if aw.in_parabolic(lam, g * y * ginv)}
        res.record(conj == set(aw.parabolic_elements(delta)), check="stabiliser", matrix=A)
        size = len(aw.parabolic_elements(lam)) * len(aw.parabolic_elements(mu)) // len(conj)
        res.record(len(aw.double_coset(lam, g, mu)) == size, check="double coset size", matrix=A)
    classes: Dict[Tuple, List[Tuple[ThetaMatrix, aw.AffinePerm]]] = {}
    for A in mats:
        lam, g, mu = aw.kappa_inv(A)
        classes.setdefault((lam, mu), []).append((A, g))
    for members in classes.values():
        for A, g in members:
            for B, h in members:
                if A != B and aw.bruhat_leq(h, g):
                    res.record(leq_a(B, A) is Order.LT, check="order monotone", lower=B, upper=A)
    return res


SUITES: Dict[str, Callable[..., SuiteResult]] = {
    "oracle": oracle_suite,
    "unitriangular": unitriangular_suite,
    "bar": bar_suite,
    "canonical": canonical_suite,
    "algebra": algebra_suite,
    "structure": structure_suite,
}


def run_suite(name: str, n: int, d: int, w: int = 3, seed: int = 0, ctx: Optional[BasisContext] = None) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return fn(n, d, w, ctx=ctx, seed=seed)


def run_suites(names: Sequence[str], n: int, d: int, w: int = 3, seed: int = 0) -> List[SuiteResult]:
    ctx = BasisContext(n, d)
    return [run_suite(name, n, d, w, seed, ctx) for name in names]
