"""Verification suites over the golden data and the exhaustive identities.

Each suite returns a ``SuiteReport`` of named checks.  Golden values are read
from the JSON files under ``tuttespan/data``, which transcribe printed values
and are never regenerated from this code.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from math import comb
from typing import Callable

from .bipoly import CURVE, ZERO, parse_poly
from .brylawski import CoeffGrid, girth_support_check, relation_nullspace_check, verify_sat
from .corpus import random_corpus
from .ginv import g_matrix
from .linbases import (
    BasisKind,
    RatMatrix,
    coefficient_matrix,
    express_in_basis,
    gamma_block_structure,
    gamma_matrix,
    girth_subspace,
    kernel_check,
    relation_generators,
    relation_space_dim,
    tutte_space_dim,
)
from .matroid import FreedomMatroid, girth
from .seqlat import BitSeq, enumerate_join_irr, enumerate_meet_irr, enumerate_seqs
from .tutte import (
    L_comb,
    fgt,
    freedom_routes,
    tutte_freedom,
    tutte_oracle,
    tutte_uniform,
)

__all__ = [
    "Check",
    "SuiteReport",
    "SUITES",
    "load_golden",
    "run_suite",
    "suite_appendix53",
    "suite_gmatrix",
    "suite_gamma",
    "suite_dims",
    "suite_kernel",
    "suite_brylawski",
    "suite_routes",
    "suite_relations",
    "suite_girth",
    "check_top_step",
    "check_no_descent",
    "check_interval_product",
    "check_paving_step",
    "bitstrings",
]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def extend(self, other: "SuiteReport") -> None:
        self.checks.extend(other.checks)

    def summary(self) -> str:
        passed = sum(c.passed for c in self.checks)
        return f"{self.suite}: {passed}/{len(self.checks)} checks passed"

    def to_json(self) -> dict:
        return {
            "schema_version": 1,
            "suite": self.suite,
            "pass": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }


@lru_cache(maxsize=None)
def load_golden(name: str) -> dict:
    text = resources.files("tuttespan.data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def bitstrings(max_len: int):
    """All bit strings of length 0..max_len, shortest first."""
    for k in range(max_len + 1):
        for bits in itertools.product((0, 1), repeat=k):
            yield BitSeq(bits)


# golden data


def suite_appendix53() -> SuiteReport:
    rep = SuiteReport("appendix53")
    gold = load_golden("appendix53")
    polys = {s: parse_poly(p) for s, p in gold["polynomials"].items()}
    for s, p in polys.items():
        got = tutte_freedom(s)
        rep.add(f"T(F({s}))", got == p, str(got))
    for k, syz in enumerate(gold["syzygies"], 1):
        total = sum((polys[s].scale(c) for s, c in syz.items()), ZERO)
        rep.add(f"syzygy {k}", total.is_zero(), str(total))
    for expr in gold["meet_expressions"]:
        target = expr["target"]
        combo = {BitSeq.parse(s): Fraction(c) for s, c in expr["combination"].items()}
        rhs = sum((polys[str(s)].scale(c) for s, c in combo.items()), ZERO)
        rep.add(f"identity T(F({target}))", rhs == polys[target])
        coords = express_in_basis(polys[target], BasisKind.MEET, 5, 3)
        rep.add(f"meet coordinates of {target}", coords == combo, str({str(s): str(c) for s, c in coords.items()}))
    return rep


def suite_gmatrix() -> SuiteReport:
    rep = SuiteReport("gmatrix")
    gold = load_golden("g_matrix_4_2")
    G, Ginv = g_matrix(4, 2)
    rep.add("ordering", [str(s) for s in G.row_labels] == gold["order"])
    rep.add("g-matrix (4,2)", G == RatMatrix(gold["matrix"]))
    rep.add("inverse (4,2)", Ginv == RatMatrix(gold["inverse"]))
    rep.add("rank 6", G.rank() == 6)
    return rep


def suite_gamma() -> SuiteReport:
    rep = SuiteReport("gamma")
    gold = load_golden("gamma_5_3")
    G = gamma_matrix(5, 3)
    cols = [gold["column_errata"].get(c, c) for c in gold["printed_columns"]]
    rep.add("column labels", [str(c) for c in G.col_labels] == cols)
    rows = [parse_poly(m) for m in gold["rows"]]
    mine = [parse_poly(m.replace("*", "")) for m in G.row_labels]
    rep.add("row labels", rows == mine)
    rep.add("entries", G == RatMatrix(gold["matrix"]))
    rep.add("rank 7", G.rank() == 7)
    rep.add("block structure", gamma_block_structure(G, 5, 3))
    return rep


# exhaustive identities


def suite_dims(max_n: int = 8) -> SuiteReport:
    rep = SuiteReport("dims")
    for n in range(max_n + 1):
        for r in range(n + 1):
            d = tutte_space_dim(n, r)
            rep.add(f"dim T({n},{r})", d == r * (n - r) + 1, str(d))
            if 1 <= r <= n - 1:
                G = gamma_matrix(n, r)
                rep.add(f"Gamma({n},{r}) rank and blocks", G.rank() == r * (n - r) + 1 and gamma_block_structure(G, n, r))
    return rep


def suite_kernel(max_n: int = 7) -> SuiteReport:
    rep = SuiteReport("kernel")
    for n in range(2, max_n + 1):
        for r in range(1, n):
            k = kernel_check(n, r)
            rep.add(f"ker Sp ({n},{r})", k.ok, f"kernel {k.kernel_dim}, sz span {k.sz_span_dim}, expected {k.expected}")
    return rep


def suite_brylawski(max_n: int = 8, seed: int = 0, corpus_size: int = 100) -> SuiteReport:
    rep = SuiteReport("brylawski")
    for n in range(1, max_n + 1):
        for r in range(n + 1):
            bad = [str(s) for s in enumerate_seqs(n, r) if not verify_sat(CoeffGrid.from_poly(tutte_freedom(s), n, r)).ok]
            rep.add(f"J_m = 0 on freedom ({n},{r})", not bad, ", ".join(bad))
            rs = relation_nullspace_check(n, r)
            rep.add(f"relation space ({n},{r})", rs.ok, f"dim {rs.relation_dim}, J rank {rs.J_rank}")
    for k, (family, M) in enumerate(random_corpus(corpus_size, seed=seed, max_n=min(max_n, 7))):
        g = CoeffGrid.from_poly(tutte_oracle(M), M.n, M.r)
        rep.add(f"J_m = 0 on corpus #{k} ({family})", verify_sat(g).ok)
    return rep


def suite_routes(oracle_max_n: int = 10, closed_max_n: int = 12) -> SuiteReport:
    rep = SuiteReport("routes")
    for n in range(oracle_max_n + 1):
        for r in range(n + 1):
            bad = [str(s) for s in enumerate_seqs(n, r) if tutte_freedom(s) != tutte_oracle(FreedomMatroid(s))]
            rep.add(f"descent tree = oracle ({n},{r})", not bad, ", ".join(bad))
    for n in range(closed_max_n + 1):
        for r in range(n + 1):
            bad = []
            for s in set(enumerate_meet_irr(n, r)) | set(enumerate_join_irr(n, r)):
                routes = freedom_routes(s)
                if any(p != routes["descent-tree"] for p in routes.values()):
                    bad.append(str(s))
            rep.add(f"closed forms ({n},{r})", not bad, ", ".join(bad))
    return rep


def check_top_step(max_n: int = 9) -> SuiteReport:
    rep = SuiteReport("top step")
    for n in range(2, max_n + 1):
        for r in range(1, n):
            s = BitSeq([1] * (r - 1) + [0, 1] + [0] * (n - r - 1))
            rep.add(f"F({s})", tutte_freedom(s) == tutte_uniform(r, n - r) - CURVE)
    return rep


def check_no_descent(max_n: int = 9) -> SuiteReport:
    rep = SuiteReport("no descent")
    bad = []
    total = 0
    for L in range(max_n - 3):
        for a, b, c, d, e, f in _compositions(L, 6):
            r1 = BitSeq([0] * a + [1] * b)
            r2 = BitSeq([0] * c + [1] * d)
            r3 = BitSeq([0] * e + [1] * f)
            total += 1
            if L_comb(r1, r2, r3) != CURVE.shift(f, a):
                bad.append((a, b, c, d, e, f))
    rep.add(f"L(0^a1^b||0^c1^d||0^e1^f) over {total} tuples", not bad, str(bad[:5]))
    return rep


def _compositions(total: int, parts: int):
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev, out = -1, []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(total + parts - 1 - prev - 1)
        yield tuple(out)


def check_interval_product(max_n: int = 9) -> SuiteReport:
    rep = SuiteReport("interval product")
    bad, total = [], 0
    for L in range(max_n - 3):
        for l1, l2, l3 in _compositions(L, 3):
            for bits in itertools.product((0, 1), repeat=L):
                r1, r2, r3 = BitSeq(bits[:l1]), BitSeq(bits[l1 : l1 + l2]), BitSeq(bits[l1 + l2 :])
                f1, _, _ = fgt(r1)
                _, g3, _ = fgt(r3)
                tau = fgt(r2)[2]
                total += 1
                if L_comb(r1, r2, r3) != (f1 * g3 * CURVE).scale(tau):
                    bad.append((str(r1), str(r2), str(r3)))
    rep.add(f"L(r1||r2||r3) = f tau g (x+y-xy) over {total} factorizations", not bad, str(bad[:5]))
    return rep


def check_paving_step(max_n: int = 9) -> SuiteReport:
    rep = SuiteReport("paving step")
    bad, total = [], 0
    for L in range(max_n - 1):
        for l1 in range(L + 1):
            for bits in itertools.product((0, 1), repeat=L):
                r1, r3 = BitSeq(bits[:l1]), BitSeq(bits[l1:])
                rhs = fgt(r1)[0] * fgt(r3)[1] * CURVE
                for a in range(1, max_n - L):
                    for b in range(1, max_n - L - a + 1):
                        hi = r1 + BitSeq([1] * a + [0] * b) + r3
                        lo = r1 + BitSeq([1] * (a - 1) + [0, 1] + [0] * (b - 1)) + r3
                        total += 1
                        if tutte_freedom(hi) - tutte_freedom(lo) != rhs:
                            bad.append((str(hi), str(lo)))
    rep.add(f"T(F(r1 1^a 0^b r3)) - T(F(r1 1^(a-1) 0 1 0^(b-1) r3)) over {total} cases", not bad, str(bad[:5]))
    return rep


def suite_relations(max_n: int = 7, identity_max_n: int = 9) -> SuiteReport:
    rep = SuiteReport("relations")
    for sub in (check_top_step, check_no_descent, check_interval_product, check_paving_step):
        rep.extend(sub(identity_max_n))
    for n in range(2, max_n + 1):
        for r in range(1, n):
            rels = relation_generators(n, r)
            rep.add(f"relations hold ({n},{r})", all(rel.holds() for rel in rels))
            rep.add(
                f"tau multipliers ({n},{r})",
                all(rel.tau == tutte_freedom(rel.interval.r2).eval(1, 1) for rel in rels),
            )
            d = relation_space_dim(n, r)
            expected = comb(n, r) - r * (n - r) - 1
            rep.add(f"relation span ({n},{r})", d == expected, f"{d} vs {expected}")
    return rep


def suite_girth(max_n: int = 7, seed: int = 0, corpus_size: int = 100) -> SuiteReport:
    rep = SuiteReport("girth")
    for n in range(2, max_n + 1):
        for r in range(1, n):
            polys_by_girth = [(girth(FreedomMatroid(s)), tutte_freedom(s)) for s in enumerate_seqs(n, r)]
            for k in range(1, r + 1):
                seqs, dim = girth_subspace(n, r, k)
                expected = (n - r) * (r - k + 1) + 1
                filtered = [p for g, p in polys_by_girth if g >= k]
                rank = coefficient_matrix(filtered).rank()
                basis_rank = coefficient_matrix([tutte_freedom(s) for s in seqs] + filtered).rank()
                rep.add(
                    f"T_{k}({n},{r})",
                    dim == expected == rank == basis_rank,
                    f"dim {dim}, filtered rank {rank}, combined rank {basis_rank}, expected {expected}",
                )
                bad = [str(g) for g, p in polys_by_girth if g >= k and not girth_support_check(CoeffGrid.from_poly(p, n, r), k)]
                rep.add(f"support pattern freedom ({n},{r}) k={k}", not bad)
    for idx, (family, M) in enumerate(random_corpus(corpus_size, seed=seed, max_n=max_n)):
        g = girth(M)
        grid = CoeffGrid.from_poly(tutte_oracle(M), M.n, M.r)
        ks = range(1, int(min(g, M.r + 1)) + 1)
        rep.add(f"support pattern corpus #{idx} ({family})", all(girth_support_check(grid, k) for k in ks))
    return rep


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "appendix53": suite_appendix53,
    "gmatrix": suite_gmatrix,
    "gamma": suite_gamma,
    "dims": suite_dims,
    "kernel": suite_kernel,
    "brylawski": suite_brylawski,
    "routes": suite_routes,
    "relations": suite_relations,
    "girth": suite_girth,
}

_MAX_N_DEFAULTS = {"dims": 8, "kernel": 7, "brylawski": 8, "relations": 7, "girth": 7, "routes": 10}


def run_suite(name: str, max_n: int | None = None, seed: int = 0) -> SuiteReport:
    """Run one suite, or every suite for ``"all"``; ``max_n`` caps the sizes."""
    if name == "all":
        rep = SuiteReport("all")
        for sub in SUITES:
            rep.extend(run_suite(sub, max_n, seed))
        return rep
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    if name in ("appendix53", "gmatrix", "gamma"):
        return fn()
    cap = _MAX_N_DEFAULTS[name] if max_n is None else max_n
    if name == "routes":
        return fn(oracle_max_n=cap, closed_max_n=max(cap, 12) if max_n is None else cap)
    if name in ("brylawski", "girth"):
        return fn(cap, seed=seed)
    if name == "relations":
        return fn(cap, identity_max_n=9 if max_n is None else max(cap, 2))
    return fn(cap)
