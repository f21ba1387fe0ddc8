"""Bit sequences and the dominance order on S(n, r).

An (n, r)-sequence is a 0/1 word of length n with r ones.  ``s`` dominates
``t`` when every prefix of ``s`` carries at least as many ones as the
same-length prefix of ``t``.  Under this order S(n, r) is a distributive
lattice whose join and meet are the pointwise max and min of prefix-weight
vectors.

Positions are 1-indexed, so "a descent at i" means bits i-1, i read ``10``.

The canonical enumeration order lists S(n, r) from the maximum
``1^r 0^(n-r)`` down to the minimum, i.e. by descending binary value.  The
reversed (ascending) order is a linear extension of the dominance order and
is the one used to index the G-invariant matrices.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Sequence

__all__ = [
    "BitSeq",
    "Interval2",
    "Irreducibility",
    "IrreducibleKind",
    "make_seq",
    "as_seq",
    "prefix_weights",
    "dominates",
    "join",
    "meet",
    "covers",
    "descents",
    "ascents",
    "classify_irreducible",
    "enumerate_seqs",
    "enumerate_join_irr",
    "enumerate_meet_irr",
    "height2_intervals",
    "descent_leaves",
    "runs",
]


class BitSeq:
    """Immutable 0/1 sequence with cached length and weight."""

    __slots__ = ("bits", "n", "r", "_hash")

    def __init__(self, bits: Iterable[int] = ()):
        bits = tuple(bits)
        for b in bits:
            if b not in (0, 1) or isinstance(b, bool):
                raise ValueError(f"bit sequences hold only 0 and 1, got {b!r}")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "n", len(bits))
        object.__setattr__(self, "r", sum(bits))
        object.__setattr__(self, "_hash", hash(bits))

    def __setattr__(self, name, value):
        raise AttributeError("BitSeq is immutable")

    @classmethod
    def parse(cls, text: str) -> "BitSeq":
        text = text.strip()
        if any(ch not in "01" for ch in text):
            raise ValueError(f"not a bit string: {text!r}")
        return cls(int(ch) for ch in text)

    @classmethod
    def from_runs(cls, *runs: tuple[int, int]) -> "BitSeq":
        """Build from (bit, length) pairs, e.g. ``from_runs((1, 2), (0, 3))``."""
        out: list[int] = []
        for bit, length in runs:
            if length < 0:
                raise ValueError("run lengths must be non-negative")
            out.extend([bit] * length)
        return cls(out)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __repr__(self) -> str:
        return f"BitSeq('{self}')"

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.bits)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return BitSeq(self.bits[idx])
        return self.bits[idx]

    def __add__(self, other) -> "BitSeq":
        return BitSeq(self.bits + as_seq(other).bits)

    def __radd__(self, other) -> "BitSeq":
        return BitSeq(as_seq(other).bits + self.bits)

    def __eq__(self, other) -> bool:
        if isinstance(other, BitSeq):
            return self.bits == other.bits
        if isinstance(other, str):
            return str(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "BitSeq") -> bool:
        # binary value, a linear extension of the dominance order
        return (self.n, self.value) < (other.n, other.value)

    @property
    def value(self) -> int:
        v = 0
        for b in self.bits:
            v = 2 * v + b
        return v

    @property
    def ones(self) -> tuple[int, ...]:
        """1-indexed positions of the ones."""
        return tuple(i + 1 for i, b in enumerate(self.bits) if b)


def make_seq(bits: Iterable[int]) -> BitSeq:
    return BitSeq(bits)


def as_seq(s) -> BitSeq:
    """Coerce a BitSeq, bit string or bit list to a BitSeq."""
    if isinstance(s, BitSeq):
        return s
    if isinstance(s, str):
        return BitSeq.parse(s)
    return BitSeq(s)


def prefix_weights(s) -> list[int]:
    s = as_seq(s)
    out = [0]
    for b in s.bits:
        out.append(out[-1] + b)
    return out


def _same_space(s: BitSeq, t: BitSeq) -> None:
    if (s.n, s.r) != (t.n, t.r):
        raise ValueError(f"{s} and {t} lie in different S(n, r)")


def dominates(s, t) -> bool:
    """True iff ``s`` is at least ``t`` in the dominance order."""
    s, t = as_seq(s), as_seq(t)
    _same_space(s, t)
    return all(a >= b for a, b in zip(prefix_weights(s), prefix_weights(t)))


def _from_prefix_weights(w: Sequence[int]) -> BitSeq:
    return BitSeq(w[i + 1] - w[i] for i in range(len(w) - 1))


def join(s, t) -> BitSeq:
    s, t = as_seq(s), as_seq(t)
    _same_space(s, t)
    return _from_prefix_weights([max(a, b) for a, b in zip(prefix_weights(s), prefix_weights(t))])


def meet(s, t) -> BitSeq:
    s, t = as_seq(s), as_seq(t)
    _same_space(s, t)
    return _from_prefix_weights([min(a, b) for a, b in zip(prefix_weights(s), prefix_weights(t))])


def covers(s, t) -> bool:
    """True iff ``s = u 10 v`` and ``t = u 01 v``."""
    s, t = as_seq(s), as_seq(t)
    _same_space(s, t)
    diff = [i for i in range(s.n) if s.bits[i] != t.bits[i]]
    return (
        len(diff) == 2
        and diff[1] == diff[0] + 1
        and s.bits[diff[0]] == 1
        and s.bits[diff[1]] == 0
    )


def descents(s) -> list[int]:
    s = as_seq(s)
    return [i + 1 for i in range(1, s.n) if s.bits[i - 1] == 1 and s.bits[i] == 0]


def ascents(s) -> list[int]:
    s = as_seq(s)
    return [i + 1 for i in range(1, s.n) if s.bits[i - 1] == 0 and s.bits[i] == 1]


def runs(s) -> list[tuple[int, int]]:
    """Maximal runs as (bit, length) pairs."""
    s = as_seq(s)
    return [(bit, len(list(grp))) for bit, grp in itertools.groupby(s.bits)]


class Irreducibility(enum.Enum):
    JOIN = "join-irreducible"
    MEET = "meet-irreducible"
    BOTH = "both"
    NEITHER = "neither"


@dataclass(frozen=True)
class IrreducibleKind:
    """Classification plus witness exponents.

    ``join_exponents`` is (a, b, c, d) with s = 0^a 1^b 0^c 1^d and
    ``meet_exponents`` is (a, b, c, d) with s = 1^a 0^b 1^c 0^d, taking
    maximal runs so the witness is unique.
    """

    kind: Irreducibility
    join_exponents: tuple[int, int, int, int] | None = None
    meet_exponents: tuple[int, int, int, int] | None = None

    @property
    def is_join_irreducible(self) -> bool:
        return self.join_exponents is not None

    @property
    def is_meet_irreducible(self) -> bool:
        return self.meet_exponents is not None


def _pattern_exponents(s: BitSeq, first: int) -> tuple[int, int, int, int] | None:
    # greedy maximal runs of first, 1-first, first, 1-first
    exps = []
    i = 0
    for bit in (first, 1 - first, first, 1 - first):
        j = i
        while j < s.n and s.bits[j] == bit:
            j += 1
        exps.append(j - i)
        i = j
    return tuple(exps) if i == s.n else None


def classify_irreducible(s) -> IrreducibleKind:
    s = as_seq(s)
    jx = _pattern_exponents(s, 0)
    mx = _pattern_exponents(s, 1)
    if jx and mx:
        kind = Irreducibility.BOTH
    elif jx:
        kind = Irreducibility.JOIN
    elif mx:
        kind = Irreducibility.MEET
    else:
        kind = Irreducibility.NEITHER
    return IrreducibleKind(kind, jx, mx)


@lru_cache(maxsize=None)
def _enumerate(n: int, r: int) -> tuple[BitSeq, ...]:
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    seqs = []
    for ones in itertools.combinations(range(n), r):
        bits = [0] * n
        for i in ones:
            bits[i] = 1
        seqs.append(BitSeq(bits))
    # combinations() yields ones-positions lexicographically, which is
    # already descending binary value
    return tuple(seqs)


def enumerate_seqs(n: int, r: int, ascending: bool = False) -> list[BitSeq]:
    """All of S(n, r), canonical (descending) order unless ``ascending``."""
    seqs = list(_enumerate(n, r))
    return seqs[::-1] if ascending else seqs


def enumerate_join_irr(n: int, r: int, ascending: bool = False) -> list[BitSeq]:
    return [s for s in enumerate_seqs(n, r, ascending) if len(descents(s)) <= 1]


def enumerate_meet_irr(n: int, r: int, ascending: bool = False) -> list[BitSeq]:
    return [s for s in enumerate_seqs(n, r, ascending) if len(ascents(s)) <= 1]


@dataclass(frozen=True)
class Interval2:
    """Height-2 diamond with top r1 10 r2 10 r3 and bottom r1 01 r2 01 r3."""

    r1: BitSeq
    r2: BitSeq
    r3: BitSeq

    def __post_init__(self):
        for name in ("r1", "r2", "r3"):
            object.__setattr__(self, name, as_seq(getattr(self, name)))

    def _corner(self, first: str, second: str) -> BitSeq:
        return self.r1 + first + self.r2 + second + self.r3

    @property
    def top(self) -> BitSeq:
        return self._corner("10", "10")

    @property
    def right(self) -> BitSeq:
        return self._corner("10", "01")

    @property
    def left(self) -> BitSeq:
        return self._corner("01", "10")

    @property
    def bottom(self) -> BitSeq:
        return self._corner("01", "01")

    @property
    def corners(self) -> tuple[BitSeq, BitSeq, BitSeq, BitSeq]:
        return (self.top, self.right, self.left, self.bottom)

    @property
    def n(self) -> int:
        return self.r1.n + self.r2.n + self.r3.n + 4

    @property
    def r(self) -> int:
        return self.r1.r + self.r2.r + self.r3.r + 2

    def __str__(self) -> str:
        return f"[{self.bottom}, {self.top}]"


def _split_at_descents(s: BitSeq, i: int, j: int) -> Interval2:
    # i, j are 1-indexed descent positions (bits i-1, i and j-1, j read 10)
    return Interval2(s[: i - 2], s[i : j - 2], s[j:])


def height2_intervals(n: int, r: int) -> list[Interval2]:
    """All diamond intervals of S(n, r), ordered by top then descent pair."""
    out = []
    seen = set()
    for top in enumerate_seqs(n, r):
        ds = descents(top)
        for i, j in itertools.combinations(ds, 2):
            # descents never overlap, so j >= i + 2 always
            iv = _split_at_descents(top, i, j)
            key = frozenset(iv.corners)
            if key in seen:
                continue
            seen.add(key)
            out.append(iv)
    return out


def _leftmost(s: BitSeq) -> int:
    return descents(s)[0]


def _rightmost(s: BitSeq) -> int:
    return descents(s)[-1]


_POLICIES: dict[str, Callable[[BitSeq], int]] = {"leftmost": _leftmost, "rightmost": _rightmost}


def descent_leaves(u, policy: str | Callable[[BitSeq], int] = "leftmost") -> Counter:
    """Leaf multiset of a descent tree of ``u``.

    ``policy`` picks which descent to expand; it may be "leftmost",
    "rightmost" or a callable returning a 1-indexed descent position.
    """
    pick = _POLICIES[policy] if isinstance(policy, str) else policy
    leaves: Counter = Counter()
    stack = [as_seq(u)]
    while stack:
        s = stack.pop()
        if not descents(s):
            leaves[s] += 1
            continue
        i = pick(s)
        if s.bits[i - 2 : i] != (1, 0):
            raise ValueError(f"policy chose {i}, which is not a descent of {s}")
        head, tail = s.bits[: i - 2], s.bits[i:]
        stack.append(BitSeq(head + (1,) + tail))
        stack.append(BitSeq(head + (0,) + tail))
    return leaves
