import itertools
import json
import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given

from conftest import all_seqs, bitseqs
from tuttespan.bipoly import CURVE, X, Y, ZERO, parse_poly
from tuttespan.corpus import random_corpus, random_representable
from tuttespan.ginv import (
    GInv,
    Side,
    cornerstone_diff,
    freedom_expansion,
    g_invariant,
    g_matrix,
    rank_sequence,
    sp,
    sp_symbol,
    straighten_symbol,
    support,
    sz,
)
from tuttespan.matroid import FreedomMatroid, flats, uniform
from tuttespan.seqlat import (
    BitSeq,
    Interval2,
    ascents,
    descents,
    dominates,
    enumerate_seqs,
    height2_intervals,
)
from tuttespan.tutte import tutte_freedom, tutte_oracle
from tuttespan.verify import load_golden


def brute_ginv(M):
    out = {}
    for perm in itertools.permutations(range(1, M.n + 1)):
        s = rank_sequence(M, perm)
        out[s] = out.get(s, 0) + 1
    return GInv(M.n, M.r, out)


def test_rank_sequence_examples():
    F = FreedomMatroid("01")
    assert rank_sequence(F, (1, 2)) == "01"
    assert rank_sequence(F, (2, 1)) == "10"
    assert rank_sequence(uniform(2, 2), (2, 1)) == "11"
    assert rank_sequence(FreedomMatroid("00111"), (1, 2, 3, 4, 5)) == "00111"
    with pytest.raises(ValueError):
        rank_sequence(F, (1, 1))


def test_g_invariant_examples():
    assert g_invariant(FreedomMatroid("10")) == GInv(2, 1, {"10": 2})
    assert g_invariant(FreedomMatroid("01")) == GInv(2, 1, {"01": 1, "10": 1})
    assert g_invariant(FreedomMatroid("1100")) == GInv(4, 2, {"1100": 24})


def test_g_invariant_matches_permutation_brute_force(corpus):
    for _, M in corpus[:40]:
        if M.n <= 6:
            assert g_invariant(M) == brute_ginv(M)
    for s in all_seqs(5, 1):
        assert g_invariant(FreedomMatroid(s)) == brute_ginv(FreedomMatroid(s))


def test_g_invariant_total_is_factorial(corpus):
    for _, M in corpus:
        assert sum(c for _, c in g_invariant(M).items()) == factorial(M.n)


def test_support_examples():
    for n in range(1, 7):
        for r in range(n + 1):
            bottom = BitSeq([0] * (n - r) + [1] * r)
            assert support(FreedomMatroid(bottom)) == set(enumerate_seqs(n, r))
            assert support(uniform(r, n)) == {BitSeq([1] * r + [0] * (n - r))}


def test_support_is_order_filter(corpus):
    matroids = [FreedomMatroid(s) for s in all_seqs(6, 1)] + [M for _, M in corpus if M.n <= 6]
    for M in matroids:
        supp = support(M)
        for t in supp:
            for s in enumerate_seqs(M.n, M.r):
                if dominates(s, t):
                    assert s in supp


def test_sp_symbol_examples():
    assert sp_symbol(1, 1, "1") == X
    assert sp_symbol(1, 0, "0") == Y
    half = Fraction(1, 2)
    assert sp_symbol(2, 1, "10") == (X + Y).scale(half)
    assert sp_symbol(2, 1, "01") == (X + Y).scale(half) + X * Y - X - Y
    assert sp_symbol(2, 1, "10") - sp_symbol(2, 1, "01") == CURVE
    with pytest.raises(ValueError):
        sp_symbol(3, 1, "10")


def test_sp_examples():
    assert sp(g_invariant(FreedomMatroid("01"))) == X * Y
    assert sp(g_invariant(FreedomMatroid("11100"))) == parse_poly("x^3+2x^2+3x+3y+y^2")
    assert sp(GInv(3, 1)) == ZERO


def test_specialization_small_exhaustive():
    for s in all_seqs(6):
        assert sp(g_invariant(FreedomMatroid(s))) == tutte_freedom(s)


def test_cornerstone_examples():
    assert cornerstone_diff(0, 0, 2, 1) == CURVE
    assert cornerstone_diff(1, 1, 4, 2) == CURVE.scale(Fraction(1, 4))
    assert (cornerstone_diff(2, 1, 6, 3).scale(factorial(3) * factorial(3))).eval(2, 2) == 0
    with pytest.raises(ValueError):
        cornerstone_diff(3, 1, 4, 2)


def test_cornerstone_against_symbol_differences():
    for n in range(2, 9):
        for r in range(1, n):
            for s in enumerate_seqs(n, r):
                for i in descents(s):
                    u, w = s[: i - 2], s[i:]
                    t = u + BitSeq([0, 1]) + w
                    lhs = sp_symbol(n, r, s) - sp_symbol(n, r, t)
                    assert lhs == cornerstone_diff(len(u), u.r, n, r)


def test_sz_examples():
    (iv,) = height2_intervals(4, 2)
    assert sz(iv) == GInv(4, 2, {"1010": 1, "1001": -1, "0110": -1, "0101": 1})
    for iv in height2_intervals(5, 3):
        assert sp(sz(iv)) == ZERO
    lin = Interval2(BitSeq.parse(""), BitSeq.parse("0"), BitSeq.parse(""))
    assert sz(lin) == GInv(5, 2, {"10010": 1, "10001": -1, "01010": -1, "01001": 1})


def test_sz_in_kernel_exhaustive():
    for n in range(4, 9):
        for r in range(2, n - 1):
            for iv in height2_intervals(n, r):
                assert sp(sz(iv)) == ZERO


def test_g_matrix_golden():
    data = load_golden("g_matrix_4_2")
    G, Ginv = g_matrix(4, 2)
    assert [str(s) for s in enumerate_seqs(4, 2, ascending=True)] == data["order"]
    assert G == [[Fraction(v) for v in row] for row in data["matrix"]]
    assert Ginv == [[Fraction(v) for v in row] for row in data["inverse"]]
    assert G.rank() == 6


def test_g_matrix_triangular_and_diagonal():
    for n in range(1, 7):
        for r in range(n + 1):
            G, _ = g_matrix(n, r)
            seqs = enumerate_seqs(n, r, ascending=True)
            for a, t in enumerate(seqs):
                for b, s in enumerate(seqs):
                    if G[a, b]:
                        assert dominates(t, s)
                assert G[a, a] > 0
    assert g_matrix(3, 3)[0] == [[6]]


def _flag_count(s):
    """g_s(F(s)) from the flag formula, with flats enumerated by brute force."""
    n, ones = s.n, [i + 1 for i, bit in enumerate(s) if bit]
    r = len(ones)
    M = FreedomMatroid(s)
    table = M.rank_table()
    sizes = [b - 1 for b in ones] + [n]
    by_key = {}
    for F in flats(M):
        by_key.setdefault((table[F], bin(F).count("1")), []).append(F)
    chains = [F for F in by_key.get((0, sizes[0]), [])]
    for i in range(1, r + 1):
        chains = [G for F in chains for G in by_key.get((i, sizes[i]), []) if F & G == F]
    weight = factorial(ones[0] - 1) if ones else factorial(n)
    for k in range(1, r):
        weight *= factorial(ones[k] - ones[k - 1])
    if ones:
        weight *= factorial(n - ones[-1] + 1)
    return weight * len(chains)


def test_diagonal_flag_formula():
    for s in all_seqs(6, 1):
        assert g_invariant(FreedomMatroid(s))[s] == _flag_count(s)


def test_freedom_expansion_examples():
    for t in enumerate_seqs(5, 2):
        assert freedom_expansion(g_invariant(FreedomMatroid(t))) == {t: 1}
    got = freedom_expansion(GInv.symbol("0011"))
    want = dict(zip(["0011", "0101", "0110", "1001", "1010", "1100"], map(Fraction, ["1/4", "-1/2", "1/6", "1/6", "0", "-1/24"])))
    assert {str(k): v for k, v in got.items()} == {k: v for k, v in want.items() if v}


def test_freedom_expansion_round_trip():
    rng = random.Random(5)
    for _ in range(6):
        M = random_representable(6, 3, rng, p=rng.choice((2, 3)))
        v = g_invariant(M)
        total = GInv(6, 3)
        for s, c in freedom_expansion(v).items():
            total = total + g_invariant(FreedomMatroid(s)).scale(c)
        assert total == v


def test_straighten_examples():
    assert straighten_symbol("11010") == {BitSeq.parse("11010"): 1}
    got = straighten_symbol("0101", Side.MEET)
    assert got == {BitSeq.parse(k): v for k, v in {"1001": 1, "0110": 1, "1010": -1}.items()}


@given(bitseqs(min_n=1, max_n=9))
def test_straighten_preserves_specialization(s):
    for side in Side:
        out = straighten_symbol(s, side)
        pos = ascents if side is Side.MEET else descents
        assert all(len(pos(t)) <= 1 for t in out)
        total = sum((sp_symbol(s.n, s.r, t).scale(c) for t, c in out.items()), ZERO)
        assert total == sp_symbol(s.n, s.r, s)


def test_ginv_json_round_trip():
    v = g_invariant(FreedomMatroid("10110"))
    text = json.dumps(v.to_json())
    assert GInv.from_json(text) == v
    assert GInv.symbol("01").to_text() == "[01]: 1"
    w = g_invariant(FreedomMatroid("01"))
    assert w.to_text() == "[10]: 1, [01]: 1"
    assert w.to_text(ascending=True) == "[01]: 1, [10]: 1"


def test_ginv_rejects_wrong_space():
    with pytest.raises(ValueError):
        GInv(4, 2, {"111": 1})
    with pytest.raises(ValueError):
        GInv.symbol("10") + GInv.symbol("100")


def test_specialization_on_corpus_sample():
    for _, M in random_corpus(30, seed=21, max_n=6):
        assert sp(g_invariant(M)) == tutte_oracle(M)

