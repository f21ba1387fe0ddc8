"""Tutte polynomials by several independent routes.

* ``tutte_oracle``: the corank-nullity subset sum, for any rank oracle.
* ``tutte_freedom``: leaves of the descent tree of the defining sequence,
  each leaf 0^a 1^b contributing x^b y^a.
* closed forms for uniform matroids, join-irreducible (direct sum)
  sequences, meet-irreducible sequences and paving matroids.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import comb

from .bipoly import CURVE, ONE, X, Y, ZERO, BiPoly
from .matroid import Matroid
from .seqlat import BitSeq, as_seq, classify_irreducible, descents

__all__ = [
    "TuttePoly",
    "tutte_oracle",
    "tutte_uniform",
    "tutte_direct_sum_form",
    "tutte_freedom",
    "t_circ",
    "tutte_meet_irr",
    "meet_irr_difference",
    "fgt",
    "L_comb",
    "paving_tutte",
]


class TuttePoly(BiPoly):
    """A BiPoly tagged with the route that produced it.

    Equality ignores the tag; arithmetic returns plain BiPoly values.
    """

    __slots__ = ("route",)

    def __init__(self, poly: BiPoly, route: str):
        super().__init__(poly.terms)
        self.route = route

    def __repr__(self) -> str:
        return f"TuttePoly('{self.to_text()}', route={self.route!r})"


def tutte_oracle(M: Matroid) -> TuttePoly:
    """Sum over all subsets A of (x-1)^(r - rk A) (y-1)^(|A| - rk A)."""
    table = M.rank_table()
    r = M.r
    hist: Counter = Counter()
    for m, rk in enumerate(table):
        hist[(r - rk, bin(m).count("1") - rk)] += 1
    xm1, ym1 = X - ONE, Y - ONE
    total = ZERO
    for (i, j), k in hist.items():
        total = total + (xm1**i * ym1**j).scale(k)
    return TuttePoly(total, "oracle")


def tutte_uniform(b: int, c: int) -> TuttePoly:
    """T(U_{b, b+c}); the empty matroid (b = c = 0) gives 1."""
    if b < 0 or c < 0:
        raise ValueError("b, c must be non-negative")
    terms: dict[tuple[int, int], int] = {}
    if c == 0:
        terms[(b, 0)] = 1
    elif b == 0:
        terms[(0, c)] = 1
    else:
        for j in range(b):
            terms[(b - j, 0)] = comb(c - 1 + j, j)
        for k in range(c):
            terms[(0, c - k)] = comb(b - 1 + k, k)
    return TuttePoly(BiPoly(terms), "uniform")


def tutte_direct_sum_form(a: int, b: int, c: int, d: int) -> TuttePoly:
    """T(F(0^a 1^b 0^c 1^d)) = y^a T(U_{b, b+c}) x^d."""
    if min(a, b, c, d) < 0:
        raise ValueError("exponents must be non-negative")
    return TuttePoly(tutte_uniform(b, c).shift(d, a), "direct-sum")


@lru_cache(maxsize=None)
def _freedom(s: BitSeq) -> BiPoly:
    ds = descents(s)
    if not ds:
        return BiPoly({(s.r, s.n - s.r): 1})
    i = ds[0]
    head, tail = s.bits[: i - 2], s.bits[i:]
    # deletion-contraction at the descent: drop the 0 or drop the 1
    return _freedom(BitSeq(head + (1,) + tail)) + _freedom(BitSeq(head + (0,) + tail))


def tutte_freedom(s) -> TuttePoly:
    return TuttePoly(_freedom(as_seq(s)), "descent-tree")


def t_circ(c: int, d: int) -> BiPoly:
    """T(U_{c, c+d}; x, 0) / x as a polynomial in x."""
    if c < 0:
        raise ValueError("c must be non-negative")
    if c == 0:
        return ZERO
    if d < 1:
        raise ValueError(f"t_circ({c}, {d}) is undefined; need d >= 1")
    return BiPoly({(c - 1 - k, 0): comb(d - 1 + k, k) for k in range(c)})


def _lower_binom(a: int, i: int) -> int:
    # C(a - 1 + i, i) with the a = 0 convention C(-1 + i, i) = [i == 0]
    if a == 0:
        return 1 if i == 0 else 0
    return comb(a - 1 + i, i)


def meet_irr_difference(a: int, b: int, c: int, d: int) -> BiPoly:
    """T(U_{a+c, n}) - T(F(1^a 0^b 1^c 0^d)) in closed form.

    Combines D(0, b', c, d) = (x+y-xy) sum_{j<b'} y^j T°(U_{c, c+b'-j+d})
    with D(a, b, c, d) = sum_{i<b} C(a-1+i, i) D(0, b-i, c, d).
    """
    total = ZERO
    for k in range(b):
        weight = BiPoly({(0, k - i): _lower_binom(a, i) for i in range(k + 1)})
        total = total + weight * t_circ(c, b - k + d)
    return CURVE * total


def tutte_meet_irr(a: int, b: int, c: int, d: int) -> TuttePoly:
    """T(F(1^a 0^b 1^c 0^d)) for a + c = r >= 1 and a + b + c + d = n."""
    if min(a, b, c, d) < 0:
        raise ValueError("exponents must be non-negative")
    r, n = a + c, a + b + c + d
    if r < 1:
        raise ValueError("meet-irreducible closed form needs r = a + c >= 1")
    return TuttePoly(tutte_uniform(r, n - r) - meet_irr_difference(a, b, c, d), "meet-irreducible")


def fgt(u) -> tuple[BiPoly, BiPoly, int]:
    """(T(F(u); 1, y), T(F(u); x, 1), T(F(u); 1, 1))."""
    t = _freedom(as_seq(u))
    f = t.subs_x(1)
    g = t.subs_y(1)
    tau = t.eval(1, 1)
    return f, g, int(tau)


def L_comb(r1, r2, r3) -> BiPoly:
    """T(F(r1 10 r2 10 r3)) - T(F(r1 10 r2 01 r3)) - T(F(r1 01 r2 10 r3)) + T(F(r1 01 r2 01 r3))."""
    r1, r2, r3 = as_seq(r1), as_seq(r2), as_seq(r3)
    corner = lambda p, q: _freedom(r1 + p + r2 + q + r3)  # noqa: E731
    return corner("10", "10") - corner("10", "01") - corner("01", "10") + corner("01", "01")


def paving_tutte(n: int, r: int, f: dict[int, int]) -> TuttePoly:
    """Tutte polynomial of a paving matroid from its copoint size profile."""
    total = ZERO
    for size, count in f.items():
        b = size - r + 1
        if b < 1 or not count:
            continue
        inner = BiPoly({(0, b - 1 - j): comb(r - 1 + j, j) for j in range(b)})
        total = total + inner.scale(count)
    return TuttePoly(tutte_uniform(r, n - r) - CURVE * total, "paving")


def freedom_routes(s) -> dict[str, BiPoly]:
    """Every closed-form route that applies to F(s), keyed by route name."""
    s = as_seq(s)
    out: dict[str, BiPoly] = {"descent-tree": tutte_freedom(s)}
    kind = classify_irreducible(s)
    if kind.join_exponents is not None:
        out["direct-sum"] = tutte_direct_sum_form(*kind.join_exponents)
    if kind.meet_exponents is not None and s.r >= 1:
        out["meet-irreducible"] = tutte_meet_irr(*kind.meet_exponents)
    return out
