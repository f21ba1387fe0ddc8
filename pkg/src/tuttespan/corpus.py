"""Seeded random matroids for the brute-force test suites.

Four families, all returned as BasisListMatroid:

* column matroids of random matrices over GF(p);
* sparse paving matroids, with the removed circuit-hyperplanes recorded;
* paving matroids built from a random family of large hyperplanes;
* freedom matroids with a random relabeling of the ground set.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .matroid import BasisListMatroid, FreedomMatroid, bases, relax_circuit_hyperplane
from .seqlat import BitSeq

__all__ = [
    "gf_rank",
    "random_representable",
    "random_sparse_paving",
    "random_paving",
    "random_relabeled_freedom",
    "relabel",
    "random_corpus",
    "RelaxationPair",
    "relaxation_pairs",
]


def gf_rank(cols: list[list[int]], p: int) -> int:
    """Rank over GF(p) of the matrix whose columns are ``cols``."""
    if not cols:
        return 0
    rows = [list(r) for r in zip(*cols)]
    rank = 0
    ncols = len(cols)
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def random_representable(n: int, r: int, rng: random.Random, p: int = 2) -> BasisListMatroid:
    """Column matroid of a random r x n matrix of rank r over GF(p)."""
    while True:
        cols = [[rng.randrange(p) for _ in range(r)] for _ in range(n)]
        if gf_rank(cols, p) != r:
            continue
        found = [B for B in itertools.combinations(range(n), r) if gf_rank([cols[i] for i in B], p) == r]
        return BasisListMatroid(n, r, [[i + 1 for i in B] for B in found], check=False)


def random_sparse_paving(n: int, r: int, rng: random.Random, tries: int = 12) -> tuple[BasisListMatroid, list[frozenset[int]]]:
    """Remove r-sets meeting pairwise in at most r-2 elements from U_{r,n}."""
    all_sets = [frozenset(B) for B in itertools.combinations(range(1, n + 1), r)]
    removed: list[frozenset[int]] = []
    for _ in range(tries):
        C = rng.choice(all_sets)
        if C in removed or any(len(C & D) > r - 2 for D in removed):
            continue
        removed.append(C)
    M = BasisListMatroid(n, r, [B for B in all_sets if B not in removed], check=False)
    return M, removed


def random_paving(n: int, r: int, rng: random.Random, tries: int = 8) -> BasisListMatroid:
    """Paving matroid whose big hyperplanes are random sets meeting in <= r-2 elements."""
    ground = list(range(1, n + 1))
    big: list[frozenset[int]] = []
    for _ in range(tries):
        size = rng.randint(r, max(r, n - 1))
        H = frozenset(rng.sample(ground, size))
        if any(len(H & K) > r - 2 for K in big):
            continue
        big.append(H)
    family = [B for B in itertools.combinations(ground, r) if not any(H.issuperset(B) for H in big)]
    return BasisListMatroid(n, r, family, check=True)


def relabel(M, perm: list[int]) -> BasisListMatroid:
    """Image of M under element e -> perm[e - 1]."""
    return BasisListMatroid(M.n, M.r, [[perm[e - 1] for e in B] for B in bases(M)], check=False)


def random_relabeled_freedom(n: int, r: int, rng: random.Random) -> BasisListMatroid:
    ones = set(rng.sample(range(n), r))
    s = BitSeq(1 if i in ones else 0 for i in range(n))
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    return relabel(FreedomMatroid(s), perm)


def random_corpus(count: int, seed: int = 0, min_n: int = 2, max_n: int = 7) -> list[tuple[str, BasisListMatroid]]:
    """``count`` labeled random matroids cycling through the four families."""
    rng = random.Random(seed)
    out: list[tuple[str, BasisListMatroid]] = []
    k = 0
    while len(out) < count:
        n = rng.randint(min_n, max_n)
        r = rng.randint(1, n - 1) if n > 1 else rng.randint(0, n)
        family = k % 4
        k += 1
        if family == 0:
            p = rng.choice((2, 3, 5))
            out.append((f"gf{p}", random_representable(n, r, rng, p)))
        elif family == 1:
            out.append(("sparse-paving", random_sparse_paving(n, r, rng)[0]))
        elif family == 2:
            out.append(("paving", random_paving(n, r, rng)))
        else:
            out.append(("freedom", random_relabeled_freedom(n, r, rng)))
    return out


@dataclass(frozen=True)
class RelaxationPair:
    M: BasisListMatroid
    relaxed: BasisListMatroid
    C: frozenset[int]


def relaxation_pairs(count: int, seed: int = 0, max_n: int = 7) -> list[RelaxationPair]:
    """Circuit-hyperplane relaxations taken from random sparse paving matroids."""
    rng = random.Random(seed)
    out: list[RelaxationPair] = []
    while len(out) < count:
        n = rng.randint(3, max_n)
        r = rng.randint(2, n - 1)
        M, removed = random_sparse_paving(n, r, rng)
        for C in removed:
            out.append(RelaxationPair(M, relax_circuit_hyperplane(M, C), C))
            if len(out) == count:
                break
    return out
