"""Matroid rank oracles on the ground set {1, ..., n}.

Subsets are passed as iterables of 1-indexed elements.  Internally every
oracle also answers rank queries on bitmasks (bit ``e - 1`` for element
``e``), which is what the exhaustive sweeps use.
"""

from __future__ import annotations

import itertools
import json
import math
from typing import Iterable

from .seqlat import BitSeq, as_seq, dominates, prefix_weights

__all__ = [
    "Matroid",
    "FreedomMatroid",
    "BasisListMatroid",
    "INFINITE",
    "uniform",
    "freedom_rank",
    "bases",
    "validate_basis_list",
    "girth",
    "flats",
    "closure",
    "cyclic_flats",
    "is_circuit",
    "is_hyperplane",
    "relax_circuit_hyperplane",
    "paving_profile",
    "mask_of",
    "set_of",
    "basis_indicator",
    "freedom_bases_by_dominance",
]

INFINITE = math.inf


def mask_of(subset: Iterable[int], n: int) -> int:
    m = 0
    for e in subset:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside ground set 1..{n}")
        m |= 1 << (e - 1)
    return m


def set_of(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


class Matroid:
    """Base rank oracle; subclasses implement ``rank_mask``."""

    n: int
    r: int

    def rank_mask(self, mask: int) -> int:
        raise NotImplementedError

    def rank(self, subset: Iterable[int]) -> int:
        return self.rank_mask(mask_of(subset, self.n))

    def rank_table(self) -> list[int]:
        """Ranks of all 2^n subsets indexed by bitmask."""
        return [self.rank_mask(m) for m in range(1 << self.n)]

    @property
    def ground_mask(self) -> int:
        return (1 << self.n) - 1


class FreedomMatroid(Matroid):
    """F(s): the freedom (nested, Schubert) matroid with defining sequence s.

    A set is independent iff its indicator word is dominated by ``s`` after
    padding; the rank is computed by a greedy scan in increasing order.
    """

    def __init__(self, seq):
        self.seq = as_seq(seq)
        self.n = self.seq.n
        self.r = self.seq.r
        self._pw = prefix_weights(self.seq)
        self._table: list[int] | None = None

    def __repr__(self) -> str:
        return f"FreedomMatroid('{self.seq}')"

    def __eq__(self, other) -> bool:
        return isinstance(other, FreedomMatroid) and other.seq == self.seq

    def __hash__(self) -> int:
        return hash(("F", self.seq))

    def rank_mask(self, mask: int) -> int:
        if self._table is not None:
            return self._table[mask]
        accepted = 0
        pw = self._pw
        i = 1
        while mask:
            if mask & 1 and accepted < pw[i]:
                accepted += 1
            mask >>= 1
            i += 1
        return accepted

    def rank_table(self) -> list[int]:
        if self._table is None:
            # greedy scan is increasing, so rank(A) extends rank(A - max A)
            pw = self._pw
            table = [0] * (1 << self.n)
            for m in range(1, 1 << self.n):
                top = m.bit_length()
                prev = table[m ^ (1 << (top - 1))]
                table[m] = prev + (prev < pw[top])
            self._table = table
        return self._table

    @property
    def flag_sizes(self) -> list[int]:
        """|X_0|, ..., |X_r| of the distinguished flag."""
        ones = self.seq.ones
        return [b - 1 for b in ones] + [self.n]


def uniform(r: int, n: int) -> FreedomMatroid:
    return FreedomMatroid(BitSeq([1] * r + [0] * (n - r)))


def freedom_rank(s, subset: Iterable[int]) -> int:
    return FreedomMatroid(s).rank(subset)


class BasisListMatroid(Matroid):
    """Matroid given by an explicit list of bases."""

    def __init__(self, n: int, r: int, bases: Iterable[Iterable[int]], check: bool = True):
        self.n = n
        self.r = r
        self.bases = frozenset(frozenset(b) for b in bases)
        if check and not validate_basis_list(n, r, self.bases):
            raise ValueError("basis list violates the matroid basis axioms")
        self._masks = sorted(mask_of(b, n) for b in self.bases)
        self._table: list[int] | None = None

    def __repr__(self) -> str:
        return f"BasisListMatroid(n={self.n}, r={self.r}, |bases|={len(self.bases)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, BasisListMatroid) and (self.n, self.r, self.bases) == (
            other.n,
            other.r,
            other.bases,
        )

    def __hash__(self) -> int:
        return hash((self.n, self.r, self.bases))

    def rank_mask(self, mask: int) -> int:
        if self._table is not None:
            return self._table[mask]
        return max(bin(mask & b).count("1") for b in self._masks)

    def rank_table(self) -> list[int]:
        if self._table is None:
            self._table = [max(bin(m & b).count("1") for b in self._masks) for m in range(1 << self.n)]
        return self._table

    @classmethod
    def from_matroid(cls, M: Matroid) -> "BasisListMatroid":
        return cls(M.n, M.r, bases(M), check=False)

    def to_json(self) -> dict:
        return {"n": self.n, "r": self.r, "bases": sorted(sorted(b) for b in self.bases)}

    @classmethod
    def from_json(cls, data) -> "BasisListMatroid":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), int(data["r"]), data["bases"])


def bases(M: Matroid) -> set[frozenset[int]]:
    out = set()
    for B in itertools.combinations(range(1, M.n + 1), M.r):
        if M.rank(B) == M.r:
            out.add(frozenset(B))
    return out


def validate_basis_list(n: int, r: int, basis_sets) -> bool:
    family = {frozenset(b) for b in basis_sets}
    if not family:
        return False
    for B in family:
        if len(B) != r or any(not 1 <= e <= n for e in B):
            return False
    for B1 in family:
        for B2 in family:
            for e in B1 - B2:
                if not any((B1 - {e}) | {f} in family for f in B2 - B1):
                    return False
    return True


def girth(M: Matroid) -> float | int:
    """Size of a smallest circuit, or INFINITE for a free matroid."""
    table = M.rank_table()
    best = INFINITE
    for m in range(1 << M.n):
        k = bin(m).count("1")
        if k < best and table[m] < k:
            best = k
    return best


def closure(M: Matroid, mask: int) -> int:
    table = M.rank_table()
    rk = table[mask]
    out = mask
    for e in range(M.n):
        bit = 1 << e
        if not mask & bit and table[mask | bit] == rk:
            out |= bit
    return out


def flats(M: Matroid) -> list[int]:
    """All flats as bitmasks."""
    return [m for m in range(1 << M.n) if closure(M, m) == m]


def cyclic_flats(M: Matroid) -> list[frozenset[int]]:
    """Flats with no coloop in their restriction, ordered by size then elements.

    The empty set counts when it is a flat (M loopless), since it is the
    empty union of circuits.
    """
    table = M.rank_table()
    out = []
    for F in flats(M):
        rk = table[F]
        if all(table[F & ~(1 << e)] == rk for e in range(M.n) if F >> e & 1):
            out.append(set_of(F))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def is_circuit(M: Matroid, subset: Iterable[int]) -> bool:
    m = mask_of(subset, M.n)
    k = bin(m).count("1")
    if M.rank_mask(m) != k - 1:
        return False
    return all(M.rank_mask(m & ~(1 << e)) == k - 1 for e in range(M.n) if m >> e & 1)


def is_hyperplane(M: Matroid, subset: Iterable[int]) -> bool:
    m = mask_of(subset, M.n)
    return M.rank_mask(m) == M.r - 1 and closure(M, m) == m


def relax_circuit_hyperplane(M: BasisListMatroid, C: Iterable[int]) -> BasisListMatroid:
    C = frozenset(C)
    circ, hyp = is_circuit(M, C), is_hyperplane(M, C)
    if not (circ and hyp):
        failed = " and ".join(n for n, ok in (("circuit", circ), ("hyperplane", hyp)) if not ok)
        raise ValueError(f"{sorted(C)} is not a {failed} of the matroid")
    return BasisListMatroid(M.n, M.r, M.bases | {C}, check=False)


def paving_profile(M: Matroid) -> dict[int, int] | None:
    """Copoint size distribution {size: count} of a paving matroid, else None."""
    if M.r == 0 or girth(M) < M.r:
        return None
    table = M.rank_table()
    profile: dict[int, int] = {}
    for F in flats(M):
        if table[F] == M.r - 1:
            k = bin(F).count("1")
            profile[k] = profile.get(k, 0) + 1
    return dict(sorted(profile.items()))


def basis_indicator(B: Iterable[int], n: int) -> BitSeq:
    B = set(B)
    return BitSeq(1 if i in B else 0 for i in range(1, n + 1))


def freedom_bases_by_dominance(s) -> set[frozenset[int]]:
    """Bases of F(s) read off the dominance order; an independent route."""
    s = as_seq(s)
    out = set()
    for B in itertools.combinations(range(1, s.n + 1), s.r):
        if dominates(s, basis_indicator(B, s.n)):
            out.add(frozenset(B))
    return out
