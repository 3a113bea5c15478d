"""
The extended affine Weyl group of type A as periodic permutations of Z.

An element ``g`` is stored by its window ``(g(1), ..., g(d))``; the rest of
the permutation follows from ``g(t + d) = g(t) + d``.  The rotation ``pi``
is ``t -> t + 1`` and has length zero.  Simple reflections are indexed by
residues ``0 .. d-1`` where ``s_0 = s_d`` swaps ``d`` and ``d + 1``.

Compositions are plain tuples of naturals.  The parabolic subgroup of a
composition ``lam`` is the Young subgroup stabilising every block
``R_i = (lam_1 + ... + lam_{i-1} .. lam_1 + ... + lam_i]`` (and its
translates by multiples of ``d``).
"""
from __future__ import annotations

import enum
import itertools
from collections import deque
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

Composition = Tuple[int, ...]

__all__ = [
    "AffinePerm",
    "Composition",
    "identity",
    "pi",
    "simple",
    "from_word",
    "compositions",
    "partial_sums",
    "blocks",
    "block_of",
    "shift_composition",
    "parabolic",
    "parabolic_elements",
    "longest_parabolic",
    "in_parabolic",
    "Side",
    "is_distinguished",
    "min_double_coset_rep",
    "double_coset",
    "kappa",
    "kappa_inv",
    "delta_of",
    "g_plus",
    "bruhat_leq",
    "enumerate_elements",
]


class AffinePerm:
    """A periodic permutation of Z with period ``d``."""

    __slots__ = ("window", "_hash")

    def __init__(self, window: Sequence[int]):
        window = tuple(int(x) for x in window)
        d = len(window)
        if d == 0:
            raise ValueError("period must be positive")
        if len({x % d for x in window}) != d:
            raise ValueError(f"window {window} does not define a permutation of Z")
        if (sum(window) - d * (d + 1) // 2) % d:
            raise ValueError(f"window {window} is not periodic")
        self.window = window
        self._hash = hash(window)

    @classmethod
    def _raw(cls, window: Tuple[int, ...]) -> "AffinePerm":
        g = object.__new__(cls)
        g.window = window
        g._hash = hash(window)
        return g

    @property
    def d(self) -> int:
        return len(self.window)

    @property
    def pi_power(self) -> int:
        d = len(self.window)
        return (sum(self.window) - d * (d + 1) // 2) // d

    def __call__(self, t: int) -> int:
        d = len(self.window)
        q, r = divmod(t - 1, d)
        return self.window[r] + q * d

    apply = __call__

    def __mul__(self, other: "AffinePerm") -> "AffinePerm":
        if not isinstance(other, AffinePerm):
            return NotImplemented
        if other.d != self.d:
            raise ValueError(f"period mismatch: {self.d} vs {other.d}")
        return AffinePerm._raw(tuple(self(x) for x in other.window))

    def inverse(self) -> "AffinePerm":
        d = len(self.window)
        inv = [0] * d
        for i, x in enumerate(self.window, start=1):
            q, r = divmod(x - 1, d)
            inv[r] = i - q * d
        return AffinePerm._raw(tuple(inv))

    def __pow__(self, k: int) -> "AffinePerm":
        g = self if k >= 0 else self.inverse()
        out = identity(self.d)
        for _ in range(abs(k)):
            out = out * g
        return out

    def __eq__(self, other):
        return isinstance(other, AffinePerm) and self.window == other.window

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        # arbitrary total order, only used for deterministic sorting
        return self.window < other.window

    def __repr__(self):
        return f"AffinePerm({list(self.window)})"

    def to_json(self) -> dict:
        return {"d": self.d, "window": list(self.window)}

    @classmethod
    def from_json(cls, data: dict) -> "AffinePerm":
        g = cls(data["window"])
        if "d" in data and data["d"] != g.d:
            raise ValueError("window length does not match d")
        return g

    # -- Coxeter structure ------------------------------------------------

    def length(self) -> int:
        """Number of pairs ``(i, j)`` with ``1 <= i <= d``, ``i < j``, ``g(i) > g(j)``."""
        return _length(self.window)

    def has_right_descent(self, i: int) -> bool:
        """``l(g s_i) < l(g)``, i.e. ``g(i) > g(i+1)``."""
        w = self.window
        d = len(w)
        i %= d
        if i == 0:
            return w[-1] - d > w[0]
        return w[i - 1] > w[i]

    def has_left_descent(self, i: int) -> bool:
        return self.inverse().has_right_descent(i)

    def right_mult_simple(self, i: int) -> "AffinePerm":
        return AffinePerm._raw(_rmul_simple(self.window, i))

    def left_mult_simple(self, i: int) -> "AffinePerm":
        d = len(self.window)
        i %= d
        if d == 1:
            raise ValueError("no simple reflections when d = 1")
        s = simple(d, i)
        return AffinePerm._raw(tuple(s(x) for x in self.window))

    def reduced_word(self) -> Tuple[List[int], int]:
        """Return ``(word, z)`` with ``self = pi^z s_{word[0]} ... s_{word[-1]}``."""
        w = self.window
        word: List[int] = []
        while True:
            i = _first_descent(w)
            if i is None:
                break
            word.append(i)
            w = _rmul_simple(w, i)
        word.reverse()
        d = len(w)
        return word, (sum(w) - d * (d + 1) // 2) // d

    def w_part(self) -> "AffinePerm":
        """The element ``w`` of the affine Weyl group with ``self = pi^z w``."""
        return pi(self.d, -self.pi_power) * self


def _length(w: Tuple[int, ...]) -> int:
    d = len(w)
    offs = [w[k] - (k + 1) for k in range(d)]
    spread = max(offs) - min(offs)
    count = 0
    for i in range(1, d + 1):
        gi = w[i - 1]
        # an inversion (i, j) needs j < i + spread
        for j in range(i + 1, i + spread + 1):
            q, r = divmod(j - 1, d)
            if w[r] + q * d < gi:
                count += 1
    return count


def _rmul_simple(w: Tuple[int, ...], i: int) -> Tuple[int, ...]:
    d = len(w)
    i %= d
    if d == 1:
        raise ValueError("no simple reflections when d = 1")
    lst = list(w)
    if i == 0:
        lst[0], lst[-1] = w[-1] - d, w[0] + d
    else:
        lst[i - 1], lst[i] = w[i], w[i - 1]
    return tuple(lst)


def _first_descent(w: Tuple[int, ...]) -> Optional[int]:
    d = len(w)
    if d == 1:
        return None
    for i in range(1, d):
        if w[i - 1] > w[i]:
            return i
    if w[-1] - d > w[0]:
        return 0
    return None


def identity(d: int) -> AffinePerm:
    return AffinePerm._raw(tuple(range(1, d + 1)))


def pi(d: int, z: int = 1) -> AffinePerm:
    """``pi^z``, i.e. ``t -> t + z``."""
    return AffinePerm._raw(tuple(range(1 + z, d + 1 + z)))


def simple(d: int, i: int) -> AffinePerm:
    return identity(d).right_mult_simple(i)


def from_word(d: int, word: Iterable[int], z: int = 0) -> AffinePerm:
    w = pi(d, z).window
    for i in word:
        w = _rmul_simple(w, i)
    return AffinePerm._raw(w)


# -- compositions ---------------------------------------------------------


def compositions(n: int, d: int) -> Iterator[Composition]:
    """All weak compositions of ``d`` into ``n`` parts, in lexicographic order."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in compositions(n - 1, d - first):
            yield (first,) + rest


def partial_sums(lam: Sequence[int]) -> List[int]:
    return list(itertools.accumulate(lam))


def blocks(lam: Sequence[int]) -> List[range]:
    """The intervals ``R_1, ..., R_n`` inside ``[1..d]``."""
    out, start = [], 0
    for part in lam:
        out.append(range(start + 1, start + part + 1))
        start += part
    return out


def block_of(lam: Sequence[int], t: int) -> int:
    """The index ``i`` in Z with ``t`` in ``R_i`` (blocks are translated by ``d`` every ``n`` steps)."""
    n, d = len(lam), sum(lam)
    q, r = divmod(t - 1, d)
    acc = 0
    for i, part in enumerate(lam, start=1):
        acc += part
        if r < acc:
            return i + q * n
    raise AssertionError("unreachable")


def shift_composition(lam: Sequence[int], z: int) -> Composition:
    """The composition ``lam + z``.

    The internal cut points ``lam_1, lam_1 + lam_2, ...`` move cyclically by
    ``z`` and are read back as residues in ``[1..d]``.  Equivalently, the
    set of all simple reflections (``s_0`` included) minus the cuts is
    rotated by ``z``.
    """
    lam = tuple(lam)
    n, d = len(lam), sum(lam)
    if d == 0 or z % d == 0:
        return lam
    cuts = sorted((c + z - 1) % d + 1 for c in partial_sums(lam)[:-1])
    bounds = [0] + cuts + [d]
    return tuple(bounds[k + 1] - bounds[k] for k in range(n))


def parabolic(lam: Sequence[int]) -> FrozenSet[int]:
    """Simple-reflection residues generating the Young subgroup ``W_lam``."""
    d = sum(lam)
    cuts = {c % d for c in partial_sums(lam)} if d else set()
    return frozenset(k for k in range(d) if k not in cuts) if d > 1 else frozenset()


def in_parabolic(lam: Sequence[int], g: AffinePerm) -> bool:
    """Whether ``g`` maps every block ``R_i`` onto itself."""
    for i, R in enumerate(blocks(lam)):
        for t in R:
            x = g(t)
            if not (R.start <= x < R.stop):
                return False
    return True


@lru_cache(maxsize=None)
def _parabolic_elements(lam: Composition) -> Tuple[AffinePerm, ...]:
    d = sum(lam)
    e = identity(d)
    seen = {e}
    queue = deque([e])
    gens = sorted(parabolic(lam))
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g.right_mult_simple(s)
            if h not in seen:
                seen.add(h)
                queue.append(h)
    return tuple(sorted(seen, key=lambda g: (g.length(), g.window)))


def parabolic_elements(lam: Sequence[int]) -> Tuple[AffinePerm, ...]:
    return _parabolic_elements(tuple(lam))


def longest_parabolic(lam: Sequence[int]) -> Tuple[AffinePerm, int]:
    """The longest element of ``W_lam`` (each block reversed) and its length."""
    d = sum(lam)
    window = list(range(1, d + 1))
    for R in blocks(lam):
        for k, t in enumerate(R):
            window[t - 1] = R[-1 - k]
    g = AffinePerm._raw(tuple(window))
    return g, sum(p * (p - 1) // 2 for p in lam)


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    DOUBLE = "double"


def is_distinguished(
    g: AffinePerm,
    lam: Sequence[int],
    side: Side | str = Side.DOUBLE,
    mu: Optional[Sequence[int]] = None,
) -> bool:
    """Minimal-length tests against parabolic generators.

    ``right``: ``l(g s) > l(g)`` for all generators ``s`` of ``W_lam``.
    ``left``: ``l(s g) > l(g)`` for all generators ``s`` of ``W_lam``.
    ``double``: ``g`` is minimal in ``W_lam g W_mu`` (left test for ``lam``,
    right test for ``mu``).
    """
    side = Side(side)
    if side is Side.RIGHT:
        return not any(g.has_right_descent(s) for s in parabolic(lam))
    ginv = g.inverse()
    left_ok = not any(ginv.has_right_descent(s) for s in parabolic(lam))
    if side is Side.LEFT:
        return left_ok
    if mu is None:
        raise ValueError("double cosets need both lam and mu")
    return left_ok and not any(g.has_right_descent(s) for s in parabolic(mu))


def min_double_coset_rep(lam: Sequence[int], g: AffinePerm, mu: Sequence[int]) -> AffinePerm:
    """Descend to the unique minimal element of ``W_lam g W_mu``."""
    left, right = sorted(parabolic(lam)), sorted(parabolic(mu))
    while True:
        for s in right:
            if g.has_right_descent(s):
                g = g.right_mult_simple(s)
                break
        else:
            for s in left:
                if g.has_left_descent(s):
                    g = g.left_mult_simple(s)
                    break
            else:
                return g


def double_coset(lam: Sequence[int], g: AffinePerm, mu: Sequence[int]) -> FrozenSet[AffinePerm]:
    """The set ``W_lam g W_mu`` by closure under the generators."""
    seen = {g}
    queue = deque([g])
    left, right = sorted(parabolic(lam)), sorted(parabolic(mu))
    while queue:
        h = queue.popleft()
        for s in right:
            k = h.right_mult_simple(s)
            if k not in seen:
                seen.add(k)
                queue.append(k)
        for s in left:
            k = h.left_mult_simple(s)
            if k not in seen:
                seen.add(k)
                queue.append(k)
    return frozenset(seen)


# -- matrices of double cosets -------------------------------------------


def kappa(lam: Sequence[int], g: AffinePerm, mu: Sequence[int], check: bool = True):
    """The matrix ``a_ij = |R_i^lam  intersect  g R_j^mu|`` for ``i`` in ``[1..n]``, ``j`` in Z."""
    from .theta import ThetaMatrix

    lam, mu = tuple(lam), tuple(mu)
    n, d = len(lam), sum(lam)
    if len(mu) != n or sum(mu) != d or g.d != d:
        raise ValueError("shape mismatch between compositions and permutation")
    if check and not is_distinguished(g, lam, Side.DOUBLE, mu):
        raise ValueError(f"{g} is not a distinguished double coset representative")
    ginv = g.inverse()
    entries: Dict[Tuple[int, int], int] = {}
    for t in range(1, d + 1):
        key = (block_of(lam, t), block_of(mu, ginv(t)))
        entries[key] = entries.get(key, 0) + 1
    return ThetaMatrix(n, entries)


def kappa_inv(A) -> Tuple[Composition, AffinePerm, Composition]:
    """Recover ``(lam, g, mu)`` with ``g`` the minimal double coset representative.

    Each row block ``R_i^lam`` is cut into consecutive chunks of sizes
    ``a_ij`` (``j`` increasing); each column block ``R_j^mu`` is cut into
    chunks of sizes ``a_ij`` (``i`` increasing); ``g`` sends column chunks
    order-preservingly onto the matching row chunks.
    """
    lam, mu = A.ro(), A.co()
    n, d = A.n, A.d
    if d == 0:
        raise ValueError("empty matrix has no permutation")
    starts = [0] + partial_sums(lam)
    row_chunk: Dict[Tuple[int, int], int] = {}
    for i in range(1, n + 1):
        pos = starts[i - 1] + 1
        for j, a in sorted(A.row(i).items()):
            row_chunk[(i, j)] = pos
            pos += a
    cstarts = [0] + partial_sums(mu)
    window = [0] * d
    for j in range(1, n + 1):
        pos = cstarts[j - 1] + 1
        for i, a in sorted(A.column(j).items()):
            q, i0 = divmod(i - 1, n)
            target = row_chunk[(i0 + 1, j - q * n)] + q * d
            for k in range(a):
                window[pos + k - 1] = target + k
            pos += a
    g = AffinePerm(window)
    assert is_distinguished(g, lam, Side.DOUBLE, mu), "kappa_inv produced a non-minimal representative"
    assert kappa(lam, g, mu, check=False) == A, "kappa_inv does not round-trip"
    return lam, g, mu


def delta_of(lam: Sequence[int], g: AffinePerm, mu: Sequence[int]) -> Composition:
    return kappa(lam, g, mu).delta_seq()


def g_plus(lam: Sequence[int], g: AffinePerm, mu: Sequence[int]) -> AffinePerm:
    """The longest element ``w_lam g w_delta w_mu`` of ``W_lam g W_mu``."""
    delta = delta_of(lam, g, mu)
    wl, ll = longest_parabolic(lam)
    wd, ld = longest_parabolic(delta)
    wm, lm = longest_parabolic(mu)
    gp = wl * g * wd * wm
    assert gp.length() == ll + g.length() - ld + lm
    return gp


# -- Bruhat order ---------------------------------------------------------


def bruhat_leq(h: AffinePerm, g: AffinePerm) -> bool:
    """``h <= g``: equal pi-powers and Bruhat order on the affine Weyl parts.

    Uses the lifting property: if ``g s < g`` then ``h <= g`` iff
    ``min(h, h s) <= g s``.
    """
    if h.d != g.d:
        raise ValueError("period mismatch")
    if h.pi_power != g.pi_power:
        return False
    return _bruhat(h.window, g.window)


@lru_cache(maxsize=200000)
def _bruhat(h: Tuple[int, ...], g: Tuple[int, ...]) -> bool:
    if h == g:
        return True
    i = _first_descent(g)
    if i is None:
        return False
    gs = _rmul_simple(g, i)
    d = len(h)
    hs_desc = (h[-1] - d > h[0]) if i == 0 else (h[i - 1] > h[i])
    if hs_desc:
        h = _rmul_simple(h, i)
    return _bruhat(h, gs)


def enumerate_elements(d: int, max_length: int, z_range: Iterable[int] = (0,)) -> List[AffinePerm]:
    """All elements with pi-power in ``z_range`` and length at most ``max_length``."""
    out: List[AffinePerm] = []
    for z in z_range:
        start = pi(d, z)
        layer = {start}
        seen = {start}
        for ell in range(max_length):
            nxt = set()
            for g in layer:
                for s in range(d if d > 1 else 0):
                    if not g.has_right_descent(s):
                        h = g.right_mult_simple(s)
                        if h not in seen:
                            seen.add(h)
                            nxt.add(h)
            layer = nxt
        out.extend(sorted(seen, key=lambda g: (g.length(), g.window)))
    return out
