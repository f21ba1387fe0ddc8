"""Exact linear algebra over Q and the two irreducible bases of T(n, r).

``RatMatrix`` is a small dense matrix of Fractions.  Row reduction pivots on
the first nonzero entry in column order, so echelon forms and nullspace
bases are reproducible.

The coefficient matrix ``gamma_matrix(n, r)`` has one column per
join-irreducible freedom matroid, listed in blocks by the number of leading
zeros, and one row per monomial, listed in matching blocks y^a x^r, ...,
y^a x followed by y^(n-r) x^r and then the remaining monomials.
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .bipoly import ZERO, BiPoly, as_rat, format_rat
from .ginv import GInv, sp_symbol, sz
from .matroid import Matroid
from .seqlat import (
    BitSeq,
    Interval2,
    enumerate_meet_irr,
    enumerate_seqs,
    height2_intervals,
)
from .tutte import L_comb, fgt, tutte_freedom, tutte_oracle

__all__ = [
    "RatMatrix",
    "BasisKind",
    "NotInSpanError",
    "Relation",
    "KernelReport",
    "rref",
    "nullspace",
    "monomial_order",
    "monomial_label",
    "join_basis_order",
    "gamma_matrix",
    "gamma_block_structure",
    "coefficient_matrix",
    "tutte_space_dim",
    "basis_sequences",
    "express_in_basis",
    "straighten_matroid",
    "relation_generators",
    "relation_space_dim",
    "kernel_check",
    "girth_subspace",
]


class RatMatrix:
    """Dense rational matrix with optional row and column labels."""

    def __init__(self, rows: Iterable[Iterable], row_labels: Sequence | None = None, col_labels: Sequence | None = None):
        self.rows = [[as_rat(v) for v in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (len(col_labels) if col_labels else 0)
        if any(len(row) != self.ncols for row in self.rows):
            raise ValueError("ragged matrix")
        self.row_labels = list(row_labels) if row_labels is not None else None
        self.col_labels = list(col_labels) if col_labels is not None else None

    @classmethod
    def identity(cls, k: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if isinstance(other, RatMatrix):
            return self.rows == other.rows
        return self.rows == [[as_rat(v) for v in row] for row in other]

    def __repr__(self) -> str:
        return f"RatMatrix({self.nrows}x{self.ncols})"

    def transpose(self) -> "RatMatrix":
        return RatMatrix(
            [list(col) for col in zip(*self.rows)] if self.rows else [],
            row_labels=self.col_labels,
            col_labels=self.row_labels,
        )

    def column(self, j: int) -> list[Fraction]:
        return [row[j] for row in self.rows]

    def matmul(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows))
        return RatMatrix([[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.rows])

    __matmul__ = matmul

    def rref(self) -> tuple["RatMatrix", list[int], int]:
        return rref(self)

    def rank(self) -> int:
        return rref(self)[2]

    def nullspace(self) -> list[list[Fraction]]:
        return nullspace(self)

    def inverse(self) -> "RatMatrix":
        if self.nrows != self.ncols:
            raise ValueError("only square matrices have inverses")
        k = self.nrows
        aug = RatMatrix([row + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(self.rows)])
        R, pivots, rank = rref(aug)
        if pivots[:k] != list(range(k)):
            raise ZeroDivisionError("matrix is singular")
        return RatMatrix(
            [row[k:] for row in R.rows],
            row_labels=self.col_labels,
            col_labels=self.row_labels,
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        cols = [str(c) for c in self.col_labels] if self.col_labels else [str(j) for j in range(self.ncols)]
        w.writerow([""] + cols)
        for i, row in enumerate(self.rows):
            label = str(self.row_labels[i]) if self.row_labels else str(i)
            w.writerow([label] + [format_rat(v) for v in row])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "row_labels": [str(c) for c in self.row_labels] if self.row_labels else None,
            "col_labels": [str(c) for c in self.col_labels] if self.col_labels else None,
            "rows": [[format_rat(v) for v in row] for row in self.rows],
        }


def rref(A: RatMatrix) -> tuple[RatMatrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank."""
    M = [list(row) for row in A.rows]
    nrows, ncols = A.nrows, A.ncols
    pivots: list[int] = []
    pr = 0
    for pc in range(ncols):
        if pr == nrows:
            break
        sel = next((i for i in range(pr, nrows) if M[i][pc] != 0), None)
        if sel is None:
            continue
        M[pr], M[sel] = M[sel], M[pr]
        piv = M[pr][pc]
        if piv != 1:
            M[pr] = [v / piv for v in M[pr]]
        prow = M[pr]
        for i in range(nrows):
            if i != pr:
                f = M[i][pc]
                if f:
                    M[i] = [a - f * b for a, b in zip(M[i], prow)]
        pivots.append(pc)
        pr += 1
    return RatMatrix(M, col_labels=A.col_labels), pivots, len(pivots)


def nullspace(A: RatMatrix) -> list[list[Fraction]]:
    """Right-kernel basis: one vector per free column, free entry 1."""
    R, pivots, _ = rref(A)
    free = [j for j in range(A.ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * A.ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R.rows[i][f]
        basis.append(v)
    return basis


def _rank_of(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return RatMatrix(vectors).rank()


# monomials and coefficient matrices


def monomial_order(n: int, r: int) -> list[tuple[int, int]]:
    """Exponent pairs (i, j) of x^i y^j in Gamma's row order.

    Blocks y^a x^r, ..., y^a x for a = 0..n-r-1, then y^(n-r) x^r, then the
    pure powers y, ..., y^(n-r), then y^(n-r) x^(r-1), ..., y^(n-r) x.  The
    constant term (zero for every matroid with n >= 1) is not listed.
    """
    out: list[tuple[int, int]] = []
    for a in range(n - r):
        out.extend((i, a) for i in range(r, 0, -1))
    out.append((r, n - r))
    out.extend((0, j) for j in range(1, n - r + 1))
    out.extend((i, n - r) for i in range(r - 1, 0, -1))
    seen = set()
    uniq = []
    for m in out:
        if m not in seen and m != (0, 0):
            seen.add(m)
            uniq.append(m)
    return uniq


def monomial_label(mono: tuple[int, int]) -> str:
    i, j = mono
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts) or "1"


def join_basis_order(n: int, r: int) -> list[BitSeq]:
    """Join-irreducibles 0^a 1^b 0^(n-r-a) 1^(r-b), blocks a = 0.., b descending, then 0^(n-r) 1^r."""
    out = []
    for a in range(n - r):
        for b in range(r, 0, -1):
            out.append(BitSeq([0] * a + [1] * b + [0] * (n - r - a) + [1] * (r - b)))
    out.append(BitSeq([0] * (n - r) + [1] * r))
    return out


def coeff_vector(p: BiPoly, monomials: Sequence[tuple[int, int]]) -> tuple[list[Fraction], BiPoly]:
    """Coefficients of p on ``monomials`` plus the part of p outside them."""
    index = set(monomials)
    vec = [p.coeff(i, j) for i, j in monomials]
    rest = BiPoly({k: c for k, c in p.items() if k not in index})
    return vec, rest


def coefficient_matrix(polys: Sequence[BiPoly], monomials: Sequence[tuple[int, int]] | None = None, col_labels=None) -> RatMatrix:
    """Rows are monomials, columns are polynomials."""
    if monomials is None:
        monomials = sorted({k for p in polys for k, _ in p.items()}, key=lambda m: (m[1], -m[0]))
    cols = []
    for p in polys:
        vec, rest = coeff_vector(p, monomials)
        if rest:
            raise ValueError(f"{p} has monomials outside the given order")
        cols.append(vec)
    rows = [list(r) for r in zip(*cols)] if cols else []
    return RatMatrix(rows, row_labels=[monomial_label(m) for m in monomials], col_labels=col_labels)


def gamma_matrix(n: int, r: int) -> RatMatrix:
    if not 1 <= r <= n - 1:
        raise ValueError(f"Gamma needs 1 <= r <= n-1, got n={n}, r={r}")
    cols = join_basis_order(n, r)
    monos = monomial_order(n, r)
    return coefficient_matrix([tutte_freedom(s) for s in cols], monos, col_labels=cols)


def gamma_block_structure(G: RatMatrix, n: int, r: int) -> bool:
    """Block lower-triangular shape of Gamma's first r(n-r)+1 rows.

    Each diagonal r x r block is triangular with nonzero pivots on its
    anti-diagonal: the column for 0^a 1^b ... meets rows y^a x^r, ...,
    y^a x^(r-b+1) only, so reversing the within-block column order makes
    the block upper triangular.  Blocks above the diagonal vanish and the
    last row and column meet only at their diagonal 1.
    """
    k = r * (n - r) + 1
    blocks = n - r
    for bi in range(blocks):
        for bj in range(blocks):
            for p in range(r):
                for q in range(r):
                    v = G[bi * r + p, bj * r + q]
                    if bj > bi and v != 0:
                        return False
                    if bi == bj:
                        # reversed column q' = r-1-q; upper triangular in (p, q')
                        qq = r - 1 - q
                        if p > qq and v != 0:
                            return False
                        if p == qq and v == 0:
                            return False
    last = k - 1
    if G[last, last] != 1:
        return False
    if any(G[last, j] != 0 for j in range(G.ncols) if j != last):
        return False
    if any(G[i, last] != 0 for i in range(G.nrows) if i != last):
        return False
    return True


def tutte_space_dim(n: int, r: int) -> int:
    polys = [tutte_freedom(s) for s in enumerate_seqs(n, r)]
    return coefficient_matrix(polys).rank()


# bases


class BasisKind(enum.Enum):
    JOIN = "join"
    MEET = "meet"


class NotInSpanError(ValueError):
    """Raised when a polynomial is outside the span of the freedom Tutte polynomials."""

    def __init__(self, residual: BiPoly):
        super().__init__(f"polynomial not in span; residual {residual}")
        self.residual = residual


def basis_sequences(kind: BasisKind, n: int, r: int) -> list[BitSeq]:
    kind = BasisKind(kind)
    if kind is BasisKind.JOIN:
        if 1 <= r <= n - 1:
            return join_basis_order(n, r)
        return enumerate_seqs(n, r)
    return enumerate_meet_irr(n, r)


def _reconstruct(coeffs: dict[BitSeq, Fraction]) -> BiPoly:
    total = ZERO
    for s, c in coeffs.items():
        total = total + tutte_freedom(s).scale(c)
    return total


def _solve_join_blocks(p: BiPoly, n: int, r: int) -> dict[BitSeq, Fraction] | None:
    cols = join_basis_order(n, r)
    monos = monomial_order(n, r)
    G = gamma_matrix(n, r)
    v, _ = coeff_vector(p, monos)
    c = [Fraction(0)] * len(cols)
    for blk in range(n - r):
        base = blk * r
        rhs = []
        for k in range(r):
            row = base + k
            rhs.append(v[row] - sum((G[row, j] * c[j] for j in range(base)), Fraction(0)))
        # row k of the block meets block columns l <= r-1-k
        for k in range(r - 1, -1, -1):
            l = r - 1 - k
            piv = G[base + k, base + l]
            if piv == 0:
                return None
            acc = rhs[k] - sum((G[base + k, base + m] * c[base + m] for m in range(l)), Fraction(0))
            c[base + l] = acc / piv
    last = len(cols) - 1
    c[last] = v[last] / G[last, last]
    return {s: x for s, x in zip(cols, c) if x}


def _solve_rref(p: BiPoly, seqs: Sequence[BitSeq]) -> tuple[dict[BitSeq, Fraction], BiPoly]:
    polys = [tutte_freedom(s) for s in seqs]
    monos = sorted({k for q in polys + [p] for k, _ in q.items()}, key=lambda m: (m[1], -m[0]))
    A = coefficient_matrix(polys, monos)
    vec, _ = coeff_vector(p, monos)
    aug = RatMatrix([row + [b] for row, b in zip(A.rows, vec)])
    R, pivots, _ = rref(aug)
    coeffs: dict[BitSeq, Fraction] = {}
    for i, pc in enumerate(pivots):
        if pc < len(seqs) and R.rows[i][-1]:
            coeffs[seqs[pc]] = R.rows[i][-1]
    return coeffs, p - _reconstruct(coeffs)


def express_in_basis(p: BiPoly, kind: BasisKind, n: int, r: int) -> dict[BitSeq, Fraction]:
    """Coordinates of ``p`` in the join- or meet-irreducible Tutte basis.

    Raises NotInSpanError, carrying the residual, when no exact solution
    exists.  The join basis is solved block by block through Gamma's
    triangular structure; the meet basis by row reduction.
    """
    kind = BasisKind(kind)
    seqs = basis_sequences(kind, n, r)
    coeffs = None
    if kind is BasisKind.JOIN and 1 <= r <= n - 1:
        coeffs = _solve_join_blocks(p, n, r)
    if coeffs is not None:
        residual = p - _reconstruct(coeffs)
    else:
        coeffs, residual = _solve_rref(p, seqs)
    if residual:
        raise NotInSpanError(residual)
    return coeffs


def straighten_matroid(M: Matroid) -> dict[BitSeq, Fraction]:
    """Meet-basis coordinates of T(M)."""
    return express_in_basis(tutte_oracle(M), BasisKind.MEET, M.n, M.r)


# relations among freedom Tutte polynomials


@dataclass(frozen=True)
class Relation:
    """tau(r2) [T(F(upper_top)) - T(F(upper_bottom))] = L(r1 || r2 || r3)."""

    interval: Interval2
    tau: int
    upper_top: BitSeq
    upper_bottom: BitSeq

    @property
    def n(self) -> int:
        return self.interval.n

    @property
    def r(self) -> int:
        return self.interval.r

    def lhs(self) -> BiPoly:
        return (tutte_freedom(self.upper_top) - tutte_freedom(self.upper_bottom)).scale(self.tau)

    def rhs(self) -> BiPoly:
        iv = self.interval
        return L_comb(iv.r1, iv.r2, iv.r3)

    def holds(self) -> bool:
        return self.lhs() == self.rhs()

    def vector(self) -> dict[BitSeq, int]:
        """Coefficients of lhs - rhs over the freedom Tutte polynomials."""
        iv = self.interval
        out: dict[BitSeq, int] = {}
        for s, c in (
            (self.upper_top, self.tau),
            (self.upper_bottom, -self.tau),
            (iv.top, -1),
            (iv.right, 1),
            (iv.left, 1),
            (iv.bottom, -1),
        ):
            out[s] = out.get(s, 0) + c
        return {s: c for s, c in out.items() if c}

    def to_text(self) -> str:
        iv = self.interval
        return (
            f"{self.tau}*[T(F({self.upper_top})) - T(F({self.upper_bottom}))] = "
            f"T(F({iv.top})) - T(F({iv.right})) - T(F({iv.left})) + T(F({iv.bottom}))"
        )

    def to_json(self) -> dict:
        iv = self.interval
        return {
            "tau": self.tau,
            "height1": [str(self.upper_bottom), str(self.upper_top)],
            "height2": [str(iv.bottom), str(iv.top)],
            "corners": {"top": str(iv.top), "right": str(iv.right), "left": str(iv.left), "bottom": str(iv.bottom)},
        }


def relation_generators(n: int, r: int) -> list[Relation]:
    out = []
    for iv in height2_intervals(n, r):
        a, b = iv.r2.r, iv.r2.n - iv.r2.r
        top1 = iv.r1 + BitSeq([1] * (a + 2) + [0] * (b + 2)) + iv.r3
        bot1 = iv.r1 + BitSeq([1] * (a + 1) + [0, 1] + [0] * (b + 1)) + iv.r3
        out.append(Relation(iv, fgt(iv.r2)[2], top1, bot1))
    return out


def relation_space_dim(n: int, r: int) -> int:
    seqs = enumerate_seqs(n, r)
    rels = relation_generators(n, r)
    return _rank_of([[rel.vector().get(s, 0) for s in seqs] for rel in rels])


@dataclass(frozen=True)
class KernelReport:
    n: int
    r: int
    kernel_dim: int
    sz_span_dim: int
    expected: int

    @property
    def ok(self) -> bool:
        return self.kernel_dim == self.sz_span_dim == self.expected


def kernel_check(n: int, r: int) -> KernelReport:
    """Compare dim ker Sp with the rank of the sz(I) combinations."""
    seqs = enumerate_seqs(n, r)
    images = [sp_symbol(n, r, s) for s in seqs]
    image_rank = coefficient_matrix(images).rank()
    sz_vectors = [[sz(iv)[s] for s in seqs] for iv in height2_intervals(n, r)]
    return KernelReport(
        n=n,
        r=r,
        kernel_dim=len(seqs) - image_rank,
        sz_span_dim=_rank_of(sz_vectors),
        expected=comb(n, r) - r * (n - r) - 1,
    )


def girth_subspace(n: int, r: int, k: int) -> tuple[list[BitSeq], int]:
    """Meet-irreducibles starting with 1^(k-1): a basis of the girth >= k span."""
    if not 1 <= k <= r:
        raise ValueError(f"girth bound k must satisfy 1 <= k <= r, got k={k}, r={r}")
    prefix = (1,) * (k - 1)
    seqs = [s for s in enumerate_meet_irr(n, r) if s.bits[: k - 1] == prefix]
    return seqs, len(seqs)


def ginv_vector(v: GInv) -> list[Fraction]:
    return [v[s] for s in enumerate_seqs(v.n, v.r)]
