"""The G-invariant, its Tutte specialization, and the syzygies sz(I).

Elements of the space G(n, r) are sparse rational combinations of symbols
[s], s in S(n, r).  ``g_invariant`` counts rank sequences over all n!
orderings of the ground set; ``sp`` sends a combination to K[x, y] so that
G(M) maps to the Tutte polynomial of M.
"""

from __future__ import annotations

import enum
import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .bipoly import CURVE, ONE, X, Y, ZERO, BiPoly, as_rat, format_rat
from .matroid import FreedomMatroid, Matroid
from .seqlat import (
    BitSeq,
    Interval2,
    as_seq,
    ascents,
    descents,
    enumerate_seqs,
    prefix_weights,
)

__all__ = [
    "GInv",
    "Side",
    "rank_sequence",
    "g_invariant",
    "support",
    "sp_symbol",
    "sp",
    "cornerstone_diff",
    "sz",
    "g_matrix",
    "freedom_expansion",
    "straighten_symbol",
]


class GInv:
    """Sparse element of G(n, r): {BitSeq: Fraction} with no zero entries."""

    __slots__ = ("n", "r", "_coeffs")

    def __init__(self, n: int, r: int, coeffs: Mapping | Iterable = ()):
        self.n, self.r = n, r
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        clean: dict[BitSeq, Fraction] = {}
        for s, c in items:
            s = as_seq(s)
            if (s.n, s.r) != (n, r):
                raise ValueError(f"symbol [{s}] is not in S({n}, {r})")
            total = clean.get(s, 0) + as_rat(c)
            if total:
                clean[s] = total
            else:
                clean.pop(s, None)
        self._coeffs = clean

    @classmethod
    def symbol(cls, s, c=1) -> "GInv":
        s = as_seq(s)
        return cls(s.n, s.r, {s: c})

    @property
    def coeffs(self) -> dict[BitSeq, Fraction]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, s) -> Fraction:
        return self._coeffs.get(as_seq(s), Fraction(0))

    def __len__(self) -> int:
        return len(self._coeffs)

    def _check(self, other: "GInv") -> None:
        if (self.n, self.r) != (other.n, other.r):
            raise ValueError("G-space elements of different (n, r)")

    def __add__(self, other: "GInv") -> "GInv":
        self._check(other)
        out = dict(self._coeffs)
        for s, c in other._coeffs.items():
            out[s] = out.get(s, 0) + c
        return GInv(self.n, self.r, out)

    def __neg__(self) -> "GInv":
        return GInv(self.n, self.r, {s: -c for s, c in self._coeffs.items()})

    def __sub__(self, other: "GInv") -> "GInv":
        return self + (-other)

    def scale(self, c) -> "GInv":
        c = as_rat(c)
        return GInv(self.n, self.r, {s: c * v for s, v in self._coeffs.items()})

    __mul__ = __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, GInv):
            return NotImplemented
        return (self.n, self.r, self._coeffs) == (other.n, other.r, other._coeffs)

    def __repr__(self) -> str:
        return f"GInv({self.n}, {self.r}, {self.to_text()})"

    def sorted_items(self, ascending: bool = False) -> list[tuple[BitSeq, Fraction]]:
        order = {s: k for k, s in enumerate(enumerate_seqs(self.n, self.r, ascending=ascending))}
        return sorted(self._coeffs.items(), key=lambda kv: order[kv[0]])

    def to_text(self, ascending: bool = False) -> str:
        if not self._coeffs:
            return "0"
        return ", ".join(f"[{s}]: {format_rat(c)}" for s, c in self.sorted_items(ascending))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "coeffs": {str(s): format_rat(c) for s, c in self.sorted_items()},
        }

    @classmethod
    def from_json(cls, data) -> "GInv":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), int(data["r"]), {k: as_rat(v) for k, v in data["coeffs"].items()})


def rank_sequence(M: Matroid, perm: Sequence[int]) -> BitSeq:
    """Rank increments along the ordering ``perm`` (1-indexed elements)."""
    if sorted(perm) != list(range(1, M.n + 1)):
        raise ValueError(f"{list(perm)} is not a permutation of 1..{M.n}")
    bits = []
    mask, prev = 0, 0
    for e in perm:
        mask |= 1 << (e - 1)
        rk = M.rank_mask(mask)
        bits.append(rk - prev)
        prev = rk
    return BitSeq(bits)


def g_invariant(M: Matroid) -> GInv:
    """Count rank sequences over all n! orderings.

    The orderings are walked depth first; each prefix set is ranked once per
    visit through a precomputed rank table, so a full sweep costs one step
    per node of the permutation tree.
    """
    n = M.n
    table = M.rank_table()
    counts: dict[tuple[int, ...], int] = {}
    bits = [0] * n

    def walk(depth: int, mask: int, rk: int) -> None:
        if depth == n:
            key = tuple(bits)
            counts[key] = counts.get(key, 0) + 1
            return
        for e in range(n):
            bit = 1 << e
            if mask & bit:
                continue
            nm = mask | bit
            nr = table[nm]
            bits[depth] = nr - rk
            walk(depth + 1, nm, nr)

    walk(0, 0, 0)
    return GInv(n, M.r, {BitSeq(k): v for k, v in counts.items()})


def support(M: Matroid) -> set[BitSeq]:
    return {s for s, c in g_invariant(M).items() if c > 0}


@lru_cache(maxsize=None)
def _sp_symbol(n: int, r: int, s: BitSeq) -> BiPoly:
    xm1, ym1 = X - ONE, Y - ONE
    w = prefix_weights(s)
    total = ZERO
    for m in range(n + 1):
        denom = math.factorial(m) * math.factorial(n - m)
        total = total + ((xm1 ** (r - w[m])) * (ym1 ** (m - w[m]))).scale(Fraction(1, denom))
    return total


def sp_symbol(n: int, r: int, s) -> BiPoly:
    s = as_seq(s)
    if (s.n, s.r) != (n, r):
        raise ValueError(f"{s} is not an ({n}, {r})-sequence")
    return _sp_symbol(n, r, s)


def sp(v: GInv) -> BiPoly:
    total: dict[tuple[int, int], Fraction] = {}
    for s, c in v.items():
        for k, a in _sp_symbol(v.n, v.r, s).items():
            total[k] = total.get(k, 0) + c * a
    return BiPoly(total)


def cornerstone_diff(lam: int, rho: int, n: int, r: int) -> BiPoly:
    """Closed form of Sp([u 10 w] - [u 01 w]) for a prefix u of length lam, weight rho."""
    if not (0 <= rho <= lam and rho < r and lam + 2 <= n):
        raise ValueError(f"invalid parameters lam={lam}, rho={rho}, n={n}, r={r}")
    denom = math.factorial(lam + 1) * math.factorial(n - lam - 1)
    poly = (X - ONE) ** (r - rho - 1) * CURVE * (Y - ONE) ** (lam - rho)
    return poly.scale(Fraction(1, denom))


def sz(I: Interval2) -> GInv:
    return GInv(I.n, I.r, {I.top: 1, I.right: -1, I.left: -1, I.bottom: 1})


@lru_cache(maxsize=None)
def _freedom_ginv(s: BitSeq) -> GInv:
    return g_invariant(FreedomMatroid(s))


def g_matrix(n: int, r: int):
    """(G, G^-1): G[t][s] = g_t(F(s)), indexed in ascending order of S(n, r).

    The ascending order is a linear extension of dominance, so G is lower
    triangular: g_t(F(s)) is nonzero only when t dominates s.
    """
    from .linbases import RatMatrix

    seqs = enumerate_seqs(n, r, ascending=True)
    cols = [_freedom_ginv(s) for s in seqs]
    G = RatMatrix([[col[t] for col in cols] for t in seqs], row_labels=seqs, col_labels=seqs)
    return G, G.inverse()


def freedom_expansion(v: GInv) -> dict[BitSeq, Fraction]:
    """Coefficients c_s with v = sum c_s G(F(s)), by forward substitution."""
    seqs = enumerate_seqs(v.n, v.r, ascending=True)
    coeffs: dict[BitSeq, Fraction] = {}
    for k, t in enumerate(seqs):
        acc = v[t]
        for s in seqs[:k]:
            c = coeffs.get(s)
            if c:
                acc -= c * _freedom_ginv(s)[t]
        diag = _freedom_ginv(t)[t]
        val = acc / diag
        if val:
            coeffs[t] = val
    return coeffs


class Side(enum.Enum):
    MEET = "meet"
    JOIN = "join"


def straighten_symbol(s, side: Side = Side.MEET) -> dict[BitSeq, int]:
    """Rewrite [s] modulo the span of all sz(I) over irreducibles of one side.

    MEET: a symbol with two or more ascents is the bottom of a diamond, and
    [bottom] = [left] + [right] - [top] mod sz(I) trades it for strictly
    larger symbols.  JOIN works dually from tops.  Among the available
    diamonds the one with the largest top (resp. smallest bottom) in the
    ascending linear extension is used.
    """
    s = as_seq(s)
    side = Side(side)
    pending: dict[BitSeq, int] = {s: 1}
    done: dict[BitSeq, int] = {}
    while pending:
        if side is Side.MEET:
            u = min(pending)
        else:
            u = max(pending)
        c = pending.pop(u)
        if c == 0:
            continue
        if side is Side.MEET:
            pos = ascents(u)
        else:
            pos = descents(u)
        if len(pos) <= 1:
            done[u] = done.get(u, 0) + c
            continue
        iv = _best_diamond(u, pos, side)
        if side is Side.MEET:
            repl = {iv.left: 1, iv.right: 1, iv.top: -1}
        else:
            repl = {iv.left: 1, iv.right: 1, iv.bottom: -1}
        for t, k in repl.items():
            pending[t] = pending.get(t, 0) + c * k
    return {t: c for t, c in done.items() if c}


def _best_diamond(u: BitSeq, pos: list[int], side: Side) -> Interval2:
    best = None
    for a in range(len(pos)):
        for b in range(a + 1, len(pos)):
            i, j = pos[a], pos[b]
            iv = Interval2(u[: i - 2], u[i : j - 2], u[j:])
            key = iv.top if side is Side.MEET else iv.bottom
            if best is None:
                best = (key, iv)
            elif side is Side.MEET and key > best[0]:
                best = (key, iv)
            elif side is Side.JOIN and key < best[0]:
                best = (key, iv)
    return best[1]
