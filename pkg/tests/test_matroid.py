import itertools
import random

import pytest
from hypothesis import given

from conftest import all_seqs, bitseqs
from tuttespan.corpus import random_paving, random_sparse_paving
from tuttespan.matroid import (
    INFINITE,
    BasisListMatroid,
    FreedomMatroid,
    bases,
    closure,
    cyclic_flats,
    flats,
    freedom_bases_by_dominance,
    freedom_rank,
    girth,
    is_circuit,
    is_hyperplane,
    paving_profile,
    relax_circuit_hyperplane,
    uniform,
    validate_basis_list,
)
from tuttespan.tutte import paving_tutte, tutte_oracle


def test_freedom_rank_examples():
    assert freedom_rank("11100", {4, 5}) == 2
    assert freedom_rank("01", {1}) == 0
    assert freedom_rank("10110", {1, 2, 3}) == 2
    with pytest.raises(ValueError):
        freedom_rank("101", {4})


def test_freedom_rank_matches_bases_by_dominance():
    # rank from the closed form versus the largest basis intersection
    for s in all_seqs(7, 1):
        M = FreedomMatroid(s)
        Bs = freedom_bases_by_dominance(s)
        for m in range(1 << s.n):
            A = {e + 1 for e in range(s.n) if m >> e & 1}
            assert M.rank(A) == max(len(A & B) for B in Bs)


def test_bases_examples():
    assert len(bases(FreedomMatroid("1100"))) == 6
    # elements 1 and 2 of F(1010) are parallel
    assert bases(FreedomMatroid("1010")) == {frozenset(b) for b in ({1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4})}
    assert bases(FreedomMatroid("000111")) == {frozenset({4, 5, 6})}


def test_validate_basis_list():
    assert validate_basis_list(4, 2, itertools.combinations(range(1, 5), 2))
    assert not validate_basis_list(4, 2, [{1, 2}, {3, 4}])
    assert validate_basis_list(3, 1, [{1}])
    with pytest.raises(ValueError):
        BasisListMatroid(4, 2, [{1, 2}, {3, 4}])


@given(bitseqs(min_n=1, max_n=7))
def test_rank_axioms(s):
    M = FreedomMatroid(s)
    t = M.rank_table()
    full = (1 << s.n) - 1
    for a in range(full + 1):
        assert 0 <= t[a] <= bin(a).count("1")
        for e in range(s.n):
            b = a | 1 << e
            assert t[a] <= t[b] <= t[a] + 1
    for a, b in itertools.combinations(range(full + 1), 2):
        assert t[a | b] + t[a & b] <= t[a] + t[b]


def test_girth_examples():
    assert girth(FreedomMatroid("00111")) == 1
    assert girth(FreedomMatroid("11100")) == 4
    assert girth(FreedomMatroid("10110")) == 2
    assert girth(FreedomMatroid("11010")) == 3
    assert girth(uniform(3, 3)) == INFINITE


def test_girth_brute_force():
    for s in all_seqs(6, 1):
        M = FreedomMatroid(s)
        sizes = [k for k in range(1, s.n + 1) for C in itertools.combinations(range(1, s.n + 1), k) if is_circuit(M, C)]
        assert girth(M) == (min(sizes) if sizes else INFINITE)


def test_cyclic_flats_examples():
    for a, b, c, d in [(1, 1, 2, 1), (0, 2, 2, 1), (2, 1, 1, 2)]:
        n = a + b + c + d
        M = FreedomMatroid("1" * a + "0" * b + "1" * c + "0" * d)
        nonempty = [F for F in cyclic_flats(M) if F]
        assert nonempty == [frozenset(range(1, a + b + 1)), frozenset(range(1, n + 1))]
    assert cyclic_flats(FreedomMatroid("11100")) == [frozenset(), frozenset(range(1, 6))]
    assert cyclic_flats(uniform(3, 3)) == [frozenset()]


def test_cyclic_flats_are_unions_of_circuits():
    for s in all_seqs(6, 1):
        M = FreedomMatroid(s)
        circuits = [frozenset(C) for k in range(1, s.n + 1) for C in itertools.combinations(range(1, s.n + 1), k) if is_circuit(M, C)]
        expect = set()
        for F in flats(M):
            Fs = {e + 1 for e in range(s.n) if F >> e & 1}
            union = set().union(*[C for C in circuits if C <= Fs]) if circuits else set()
            if union == Fs:
                expect.add(frozenset(Fs))
        assert set(cyclic_flats(M)) == expect


def test_relaxation_examples():
    family = [B for B in itertools.combinations(range(1, 5), 2) if B != (1, 2)]
    M = BasisListMatroid(4, 2, family)
    R = relax_circuit_hyperplane(M, {1, 2})
    assert bases(R) == {frozenset(B) for B in itertools.combinations(range(1, 5), 2)}
    with pytest.raises(ValueError, match="circuit"):
        relax_circuit_hyperplane(M, {1, 3})


def test_relaxation_on_sparse_paving():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(4, 7)
        r = rng.randint(2, n - 2)
        M, removed = random_sparse_paving(n, r, rng)
        for C in removed:
            assert is_circuit(M, C) and is_hyperplane(M, C)
            R = relax_circuit_hyperplane(M, C)
            assert bases(R) == bases(M) | {C}


def test_paving_profile_examples():
    from math import comb

    for r, n in [(2, 4), (3, 5), (3, 7)]:
        assert paving_profile(uniform(r, n)) == {r - 1: comb(n, r - 1)}
    prof = paving_profile(FreedomMatroid("11010"))
    assert prof[3] == 1 and set(prof) == {2, 3}
    assert paving_profile(FreedomMatroid("00111")) is None


def test_paving_tutte_on_random_paving():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(3, 7)
        r = rng.randint(2, n - 1)
        M = random_paving(n, r, rng)
        prof = paving_profile(M)
        assert prof is not None
        assert paving_tutte(n, r, prof) == tutte_oracle(M)


def test_basis_list_round_trip():
    M = BasisListMatroid.from_matroid(FreedomMatroid("10110"))
    assert BasisListMatroid.from_json(M.to_json()) == M
    assert bases(M) == freedom_bases_by_dominance("10110")


def test_closure_idempotent():
    M = FreedomMatroid("1001011")
    for m in range(1 << M.n):
        c = closure(M, m)
        assert c & m == m and closure(M, c) == c
