"""Brylawski's linear relations J_m on Tutte coefficients.

A coefficient grid holds t_ij for 0 <= i <= r, 0 <= j <= n - r.  Every
functional here reads indices outside the grid as zero, since the staircase
and hook sums range formally past its edges.

On a grid supported on the hook cells {(i, a): i > d} u {(d, a)} u
{(d, j): j > a}, J_m agrees with (-1)^a H_m(d, a).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping

from .bipoly import BiPoly, format_rat
from .linbases import RatMatrix, nullspace
from .matroid import FreedomMatroid, girth
from .seqlat import enumerate_seqs
from .tutte import tutte_freedom

__all__ = [
    "CoeffGrid",
    "J",
    "J_coeffs",
    "hook",
    "hook_coeffs",
    "centered_hook",
    "SatReport",
    "verify_sat",
    "RelationSpaceReport",
    "relation_nullspace_check",
    "girth_region",
    "girth_support_check",
    "girth_relation_check",
]


@dataclass(frozen=True)
class CoeffGrid:
    n: int
    r: int
    cells: Mapping[tuple[int, int], Fraction] = field(default_factory=dict)

    @classmethod
    def from_poly(cls, p: BiPoly, n: int, r: int, strict: bool = True) -> "CoeffGrid":
        cells = {}
        for (i, j), c in p.items():
            if not (0 <= i <= r and 0 <= j <= n - r):
                if strict:
                    raise ValueError(f"x^{i} y^{j} lies outside the ({n}, {r}) coefficient grid")
                continue
            cells[(i, j)] = c
        return cls(n, r, cells)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self.cells.get(ij, Fraction(0))

    def shape(self) -> tuple[int, int]:
        return (self.r + 1, self.n - self.r + 1)

    def indices(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.r + 1) for j in range(self.n - self.r + 1)]

    def vector(self) -> list[Fraction]:
        return [self[ij] for ij in self.indices()]

    def shift(self, d: int, a: int) -> "CoeffGrid":
        """Grid of x^d y^a times this one, on an enlarged (n + d + a, r + d) grid."""
        return CoeffGrid(self.n + d + a, self.r + d, {(i + d, j + a): c for (i, j), c in self.cells.items()})

    def is_zero(self) -> bool:
        return not any(self.cells.values())


def _apply(coeffs: Mapping[tuple[int, int], int], g: CoeffGrid) -> Fraction:
    return sum((c * g[ij] for ij, c in coeffs.items()), Fraction(0))


def J_coeffs(m: int) -> dict[tuple[int, int], int]:
    """Coefficient of t_ij in J_m: (-1)^j C(m - i, j) on the staircase i + j <= m."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return {(m - alpha, beta): (-1) ** beta * comb(alpha, beta) for alpha in range(m + 1) for beta in range(alpha + 1)}


def J(m: int, g: CoeffGrid) -> Fraction:
    return _apply(J_coeffs(m), g)


def _check_hook(m: int, d: int, a: int) -> None:
    if min(m, d, a) < 0 or d + a > m:
        raise ValueError(f"hook needs 0 <= d + a <= m, got m={m}, d={d}, a={a}")


def hook_coeffs(m: int, d: int, a: int) -> dict[tuple[int, int], int]:
    _check_hook(m, d, a)
    out: dict[tuple[int, int], int] = {}
    span = m - d - a
    for j in range(1, span + 1):
        out[(j + d, a)] = comb(m - d - j, a)
    out[(d, a)] = comb(m - d, a)
    for k in range(1, span + 1):
        out[(d, a + k)] = (-1) ** k * comb(m - d, a + k)
    return {ij: c for ij, c in out.items() if c}


def hook(m: int, d: int, a: int, g: CoeffGrid) -> Fraction:
    return _apply(hook_coeffs(m, d, a), g)


def centered_hook(m: int, d: int, a: int, g: CoeffGrid) -> Fraction:
    """H_m(d, a) with (d, a) subtracted from every subscript.

    The sums run to m - d; the extra terms beyond m - d - a have vanishing
    binomials, so this is H_m(d, a) applied to x^d y^a times the grid.
    """
    _check_hook(m, d, a)
    total = comb(m - d, a) * g[(0, 0)]
    for j in range(1, m - d + 1):
        total += comb(m - d - j, a) * g[(j, 0)]
    for k in range(1, m - d + 1):
        total += (-1) ** k * comb(m - d, a + k) * g[(0, k)]
    return Fraction(total)


@dataclass(frozen=True)
class SatReport:
    n: int
    r: int
    values: tuple[tuple[int, Fraction], ...]

    @property
    def ok(self) -> bool:
        return all(v == 0 for _, v in self.values)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "checks": [{"name": "J", "m": m, "value": format_rat(v), "pass": v == 0} for m, v in self.values],
        }


def verify_sat(g: CoeffGrid) -> SatReport:
    """J_m for m = 0..n-1; all of them vanish on a matroid's coefficients."""
    return SatReport(g.n, g.r, tuple((m, J(m, g)) for m in range(g.n)))


def _grid_matrix(grids: list[CoeffGrid]) -> RatMatrix:
    return RatMatrix([g.vector() for g in grids])


@dataclass(frozen=True)
class RelationSpaceReport:
    n: int
    r: int
    cells: int
    relation_dim: int
    J_rank: int
    J_in_space: bool

    @property
    def ok(self) -> bool:
        return self.relation_dim == self.n == self.J_rank and self.J_in_space

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "checks": [
                {"name": "relation_dim", "value": str(self.relation_dim), "pass": self.relation_dim == self.n},
                {"name": "J_rank", "value": str(self.J_rank), "pass": self.J_rank == self.n},
                {"name": "J_in_space", "value": str(self.J_in_space).lower(), "pass": self.J_in_space},
            ],
        }


def relation_nullspace_check(n: int, r: int) -> RelationSpaceReport:
    """Linear relations on coefficient grids of all (n, r) freedom matroids.

    The relations are the right kernel of the matrix whose rows are the
    grids.  J_0..J_(n-1) must lie in it, be independent, and match its
    dimension, which is (r+1)(n-r+1) - (r(n-r)+1) = n.
    """
    grids = [CoeffGrid.from_poly(tutte_freedom(s), n, r) for s in enumerate_seqs(n, r)]
    A = _grid_matrix(grids)
    kernel = nullspace(A)
    idx = grids[0].indices()
    Jvecs = [[Fraction(J_coeffs(m).get(ij, 0)) for ij in idx] for m in range(n)]
    in_space = all(sum((a * b for a, b in zip(row, v)), Fraction(0)) == 0 for row in A.rows for v in Jvecs)
    J_rank = RatMatrix(Jvecs).rank() if Jvecs else 0
    return RelationSpaceReport(n, r, len(idx), len(kernel), J_rank, in_space)


def girth_region(n: int, r: int, k: int) -> set[tuple[int, int]]:
    """Cells where a girth >= k matroid may have nonzero Tutte coefficients."""
    cells = {(i, 0) for i in range(1, r + 1)}
    cells |= {(i, j) for i in range(0, r - k + 2) for j in range(1, n - r + 1)}
    return cells


def girth_support_check(g: CoeffGrid, k: int) -> bool:
    if k < 1:
        raise ValueError("girth bound k must be at least 1")
    allowed = girth_region(g.n, g.r, k)
    return all(ij in allowed for ij, c in g.cells.items() if c)


@dataclass(frozen=True)
class GirthRelationReport:
    n: int
    r: int
    k: int
    relation_dim: int
    augmented_rank: int
    expected: int
    augmented_in_space: bool

    @property
    def ok(self) -> bool:
        return self.relation_dim == self.augmented_rank == self.expected and self.augmented_in_space


def girth_relation_check(n: int, r: int, k: int) -> GirthRelationReport:
    """J_0..J_(n-1) plus t_ij = 0 (i >= r-k+2, j >= 1) against the girth >= k relation space."""
    seqs = [s for s in enumerate_seqs(n, r) if girth(FreedomMatroid(s)) >= k]
    grids = [CoeffGrid.from_poly(tutte_freedom(s), n, r) for s in seqs]
    idx = CoeffGrid(n, r).indices()
    vecs = [[Fraction(J_coeffs(m).get(ij, 0)) for ij in idx] for m in range(n)]
    for i in range(r - k + 2, r + 1):
        for j in range(1, n - r + 1):
            vecs.append([Fraction(int(ij == (i, j))) for ij in idx])
    A = _grid_matrix(grids)
    rank_A = A.rank() if grids else 0
    in_space = all(sum((a * b for a, b in zip(row, v)), Fraction(0)) == 0 for row in A.rows for v in vecs)
    dim_Tk = (n - r) * (r - k + 1) + 1
    return GirthRelationReport(
        n=n,
        r=r,
        k=k,
        relation_dim=len(idx) - rank_A,
        augmented_rank=RatMatrix(vecs).rank() if vecs else 0,
        expected=len(idx) - dim_Tk,
        augmented_in_space=in_space,
    )
