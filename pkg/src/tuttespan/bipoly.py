"""Sparse bivariate polynomials in x, y with exact rational coefficients."""

from __future__ import annotations

import json
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

__all__ = ["BiPoly", "X", "Y", "ONE", "ZERO", "CURVE", "parse_poly", "as_rat", "format_rat"]


def as_rat(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def format_rat(c: Fraction) -> str:
    """``"3"`` for integers, ``"-1/2"`` otherwise."""
    return str(as_rat(c))


class BiPoly:
    """Polynomial sum c_ij x^i y^j stored as {(i, j): c_ij} with no zero entries."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in x^{i} y^{j}")
            c = as_rat(c)
            key = (int(i), int(j))
            total = clean.get(key, 0) + c
            if total:
                clean[key] = total
            else:
                clean.pop(key, None)
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "BiPoly":
        return cls({(i, j): c})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self._terms), default=-1)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self._terms), default=-1)

    # arithmetic

    def __add__(self, other) -> "BiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "BiPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "BiPoly":
        return (-self) + other

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BiPoly":
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c) -> "BiPoly":
        c = as_rat(c)
        return BiPoly({k: c * v for k, v in self._terms.items()})

    def shift(self, di: int, dj: int) -> "BiPoly":
        """Multiply by x^di y^dj (negative shifts must stay non-negative)."""
        return BiPoly({(i + di, j + dj): c for (i, j), c in self._terms.items()})

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def eval(self, a, b) -> Fraction:
        a, b = as_rat(a), as_rat(b)
        return sum((c * a**i * b**j for (i, j), c in self._terms.items()), Fraction(0))

    def subs_y(self, b) -> "BiPoly":
        """Substitute y = b, leaving a polynomial in x."""
        b = as_rat(b)
        return BiPoly(((i, 0), c * b**j) for (i, j), c in self._terms.items())

    def subs_x(self, a) -> "BiPoly":
        a = as_rat(a)
        return BiPoly(((0, j), c * a**i) for (i, j), c in self._terms.items())

    def divide_by_curve(self) -> "BiPoly | None":
        """Exact quotient by x + y - xy, or None when it does not divide.

        Writing p = sum_j P_j(x) y^j and q = sum_j Q_j(x) y^j, the identity
        p = (x + (1 - x) y) q gives P_0 = x Q_0 and
        P_j = x Q_j + (1 - x) Q_{j-1}; each Q_j is then forced, and a
        polynomial q exists iff every step divides exactly by x and the
        top coefficient is matched.
        """
        if not self._terms:
            return ZERO
        rows: dict[int, dict[int, Fraction]] = {}
        for (i, j), c in self._terms.items():
            rows.setdefault(j, {})[i] = c
        dy = self.y_degree
        q_rows: list[dict[int, Fraction]] = []
        prev: dict[int, Fraction] = {}
        for j in range(dy + 1):
            cur = dict(rows.get(j, {}))
            # cur -= (1 - x) * prev
            for i, c in prev.items():
                cur[i] = cur.get(i, 0) - c
                cur[i + 1] = cur.get(i + 1, 0) + c
            cur = {i: c for i, c in cur.items() if c}
            if cur.get(0):
                return None
            prev = {i - 1: c for i, c in cur.items()}
            q_rows.append(prev)
        # q has y-degree dy - 1; its top row must vanish
        if prev:
            return None
        return BiPoly(((i, j), c) for j, row in enumerate(q_rows) for i, c in row.items())

    # text and JSON

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        """Terms by ascending y-exponent, then descending x-exponent."""
        return [(i, j, c) for (i, j), c in sorted(self._terms.items(), key=lambda t: (t[0][1], -t[0][0]))]

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, (i, j, c) in enumerate(self.sorted_terms()):
            mono = _mono_text(i, j)
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = format_rat(mag)
            elif mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag.numerator}{mono}"
            else:
                body = f"({mag}){mono}"
            if idx == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"BiPoly('{self.to_text()}')"

    def to_json(self) -> list[list]:
        return [[i, j, format_rat(c)] for i, j, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data) -> "BiPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(((i, j), as_rat(c)) for i, j, c in data)

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        return parse_poly(text)


def _mono_text(i: int, j: int) -> str:
    xs = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
    ys = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
    return xs + ys


def _coerce(other):
    if isinstance(other, BiPoly):
        return other
    if isinstance(other, (int, Rational)):
        return BiPoly.const(other)
    return NotImplemented


_TERM = re.compile(
    r"""(?P<sign>[+-])?
        (?P<coef>\(\s*-?\d+\s*(?:/\s*\d+\s*)?\)|\d+(?:/\d+)?)?
        \*?
        (?P<mono>(?:[xy](?:\^\d+)?\*?)*)
    """,
    re.VERBOSE,
)
_FACTOR = re.compile(r"([xy])(?:\^(\d+))?")


def parse_poly(text: str) -> BiPoly:
    """Parse the text form, e.g. ``"x^3 + 2x^2 - (1/2)xy + y^2"``.

    Accepts integer or rational coefficients (bare ``3/4`` or ``(3/4)``),
    optional ``*`` between factors, and x, y factors in either order.
    Whitespace is ignored.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    terms: dict[tuple[int, int], Fraction] = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group("coef") or m.group("mono")):
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        if pos > 0 and not m.group("sign"):
            raise ValueError(f"missing operator before {s[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        coef = m.group("coef")
        c = Fraction(coef.strip("()").replace(" ", "")) if coef else Fraction(1)
        i = j = 0
        for var, exp in _FACTOR.findall(m.group("mono") or ""):
            e = int(exp) if exp else 1
            if var == "x":
                i += e
            else:
                j += e
        terms[(i, j)] = terms.get((i, j), 0) + sign * c
        pos = m.end()
    return BiPoly(terms)


X = BiPoly({(1, 0): 1})
Y = BiPoly({(0, 1): 1})
ONE = BiPoly({(0, 0): 1})
ZERO = BiPoly()
CURVE = BiPoly({(1, 0): 1, (0, 1): 1, (1, 1): -1})  # x + y - xy
