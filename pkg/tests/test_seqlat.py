import itertools
from collections import Counter
from math import comb

import pytest
from hypothesis import given

from conftest import bitseqs, same_space_pairs
from tuttespan.seqlat import (
    BitSeq,
    Irreducibility,
    ascents,
    classify_irreducible,
    covers,
    descent_leaves,
    descents,
    dominates,
    enumerate_join_irr,
    enumerate_meet_irr,
    enumerate_seqs,
    height2_intervals,
    join,
    make_seq,
    meet,
    prefix_weights,
)


def test_make_seq_counts():
    s = make_seq([1, 1, 0, 0])
    assert (s.n, s.r) == (4, 2)
    assert (make_seq([]).n, make_seq([]).r) == (0, 0)
    assert (make_seq([0, 1, 0, 1, 1]).n, make_seq([0, 1, 0, 1, 1]).r) == (5, 3)


def test_make_seq_rejects_non_binary():
    with pytest.raises(ValueError):
        make_seq([0, 2])
    with pytest.raises(ValueError):
        BitSeq.parse("01a")


def test_text_round_trip():
    s = BitSeq.parse("01010")
    assert str(s) == "01010"
    assert s == "01010"


def test_prefix_weights():
    assert prefix_weights("1100") == [0, 1, 2, 2, 2]
    assert prefix_weights("0011") == [0, 0, 0, 1, 2]
    assert prefix_weights("01010") == [0, 0, 1, 1, 2, 2]


def test_dominates_examples():
    assert dominates("1100", "0011")
    assert dominates("1010", "1001")
    assert not dominates("0110", "1001")
    assert not dominates("1001", "0110")


def test_dominates_needs_same_space():
    with pytest.raises(ValueError):
        dominates("110", "1100")
    with pytest.raises(ValueError):
        join("1100", "1000")


def test_join_meet_examples():
    assert join("0110", "1001") == "1010"
    assert meet("0110", "1001") == "0101"
    assert join("0110", "0110") == "0110"
    for t in enumerate_seqs(5, 2):
        assert meet("11000", t) == t


def test_lattice_laws_exhaustive():
    for n in range(1, 8):
        for r in range(n + 1):
            S = enumerate_seqs(n, r)
            for s, t in itertools.product(S, repeat=2):
                j, m = join(s, t), meet(s, t)
                assert dominates(j, s) and dominates(j, t)
                assert dominates(s, m) and dominates(t, m)
            if n <= 6:
                for s, t in itertools.product(S, repeat=2):
                    j, m = join(s, t), meet(s, t)
                    for u in S:
                        if dominates(u, s) and dominates(u, t):
                            assert dominates(u, j)
                        if dominates(s, u) and dominates(t, u):
                            assert dominates(m, u)


@given(same_space_pairs(max_n=9), same_space_pairs(max_n=9))
def test_distributive(p, q):
    s, t = p
    u = q[0]
    if (u.n, u.r) != (s.n, s.r):
        u = t
    assert meet(s, join(t, u)) == join(meet(s, t), meet(s, u))
    assert join(s, meet(t, u)) == meet(join(s, t), join(s, u))


def test_covers_examples():
    assert covers("1010", "1001")
    assert not covers("1100", "0011")
    assert not covers("1010", "1010")


def test_covers_is_cover_relation():
    for n in range(2, 8):
        for r in range(1, n):
            S = enumerate_seqs(n, r)
            for s, t in itertools.product(S, repeat=2):
                strict = s != t and dominates(s, t)
                between = any(u not in (s, t) and dominates(s, u) and dominates(u, t) for u in S)
                assert covers(s, t) == (strict and not between)


def test_descents_ascents():
    assert descents("1010") == [2, 4]
    assert ascents("1010") == [3]
    assert descents("0011") == []


def test_classify_examples():
    k = classify_irreducible("01101")
    assert k.kind is Irreducibility.JOIN
    assert k.join_exponents == (1, 2, 1, 1)
    assert classify_irreducible("11100").kind is Irreducibility.BOTH
    assert classify_irreducible("01010").kind is Irreducibility.NEITHER


def _lower_covers(s, S):
    return [t for t in S if covers(s, t)]


def test_classify_matches_cover_counts():
    for n in range(1, 8):
        for r in range(n + 1):
            S = enumerate_seqs(n, r)
            for s in S:
                k = classify_irreducible(s)
                assert k.is_join_irreducible == (len(_lower_covers(s, S)) <= 1)
                assert k.is_meet_irreducible == (len([t for t in S if covers(t, s)]) <= 1)


def test_enumeration_sizes():
    assert len(enumerate_seqs(4, 2)) == 6
    assert len(enumerate_join_irr(4, 2)) == 5 == len(enumerate_meet_irr(4, 2))
    assert len(enumerate_seqs(5, 3)) == 10
    assert len(enumerate_join_irr(5, 3)) == 7 == len(enumerate_meet_irr(5, 3))
    assert enumerate_seqs(4, 0) == [BitSeq([0, 0, 0, 0])]
    for n in range(11):
        for r in range(n + 1):
            assert len(enumerate_seqs(n, r)) == comb(n, r)
            assert len(enumerate_join_irr(n, r)) == r * (n - r) + 1
            assert len(enumerate_meet_irr(n, r)) == r * (n - r) + 1


def test_enumeration_orders():
    asc = [str(s) for s in enumerate_seqs(4, 2, ascending=True)]
    assert asc == ["0011", "0101", "0110", "1001", "1010", "1100"]
    assert [str(s) for s in enumerate_seqs(4, 2)] == asc[::-1]
    # ascending order is a linear extension of dominance
    for n in range(1, 8):
        for r in range(n + 1):
            S = enumerate_seqs(n, r, ascending=True)
            for i, j in itertools.combinations(range(len(S)), 2):
                assert not (dominates(S[i], S[j]) and S[i] != S[j])


def test_height2_intervals_small():
    (iv,) = height2_intervals(4, 2)
    assert (str(iv.r1), str(iv.r2), str(iv.r3)) == ("", "", "")
    assert {str(c) for c in iv.corners} == {"1010", "1001", "0110", "0101"}
    corners = [{str(c) for c in iv.corners} for iv in height2_intervals(5, 3)]
    assert len(corners) == 3
    assert height2_intervals(2, 1) == []
    diamonds = [{str(c) for c in iv.corners} for iv in height2_intervals(5, 2)]
    assert {"10010", "10001", "01010", "01001"} in diamonds


def test_height2_intervals_are_diamonds():
    for n in range(4, 8):
        for r in range(2, n - 1):
            seen = set()
            for iv in height2_intervals(n, r):
                top, right, left, bottom = iv.top, iv.right, iv.left, iv.bottom
                assert len({top, right, left, bottom}) == 4
                assert covers(top, right) and covers(top, left)
                assert covers(right, bottom) and covers(left, bottom)
                key = frozenset(iv.corners)
                assert key not in seen
                seen.add(key)
            # one diamond per pair of descents of each top
            expected = sum(comb(len(descents(s)), 2) for s in enumerate_seqs(n, r))
            assert len(seen) == expected


def test_descent_leaves_examples():
    leaves = descent_leaves("01010")
    assert leaves == Counter({BitSeq.parse(s): 1 for s in ("000", "001", "011", "00", "01")})
    assert descent_leaves("0011") == Counter({BitSeq.parse("0011"): 1})
    assert descent_leaves("1010") == Counter({BitSeq.parse(s): 1 for s in ("11", "1", "0", "01", "00")})


def test_descent_leaves_policy_invariant_exhaustive():
    for n in range(11):
        for bits in itertools.product((0, 1), repeat=n):
            s = BitSeq(bits)
            left = descent_leaves(s, "leftmost")
            assert left == descent_leaves(s, "rightmost")
            assert all(not descents(leaf) for leaf in left)


@given(bitseqs(max_n=10))
def test_descent_leaves_middle_policy(s):
    middle = lambda u: descents(u)[len(descents(u)) // 2]  # noqa: E731
    assert descent_leaves(s, middle) == descent_leaves(s)


def test_descent_leaves_rejects_bad_policy():
    with pytest.raises(ValueError):
        descent_leaves("1010", lambda u: 3)
