import random

from tuttespan.corpus import (
    gf_rank,
    random_corpus,
    random_paving,
    random_relabeled_freedom,
    relabel,
    relaxation_pairs,
)
from tuttespan.matroid import FreedomMatroid, bases, paving_profile, validate_basis_list
from tuttespan.tutte import tutte_freedom, tutte_oracle


def test_gf_rank():
    assert gf_rank([[1, 0], [0, 1], [1, 1]], 2) == 2
    assert gf_rank([[1, 1], [1, 1]], 3) == 1
    assert gf_rank([[2, 1], [1, 2]], 3) == 1
    assert gf_rank([], 5) == 0


def test_corpus_is_valid_and_deterministic():
    a = random_corpus(60, seed=4)
    b = random_corpus(60, seed=4)
    assert [(lab, bases(M)) for lab, M in a] == [(lab, bases(M)) for lab, M in b]
    labels = {lab.rstrip("0123456789") for lab, _ in a}
    assert labels == {"gf", "sparse-paving", "paving", "freedom"}
    for _, M in a:
        assert validate_basis_list(M.n, M.r, bases(M))


def test_paving_family():
    rng = random.Random(8)
    for _ in range(20):
        n = rng.randint(3, 7)
        r = rng.randint(2, n - 1)
        assert paving_profile(random_paving(n, r, rng)) is not None


def test_relabeling_preserves_tutte():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(2, 7)
        M = random_relabeled_freedom(n, rng.randint(0, n), rng)
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        assert tutte_oracle(relabel(M, perm)) == tutte_oracle(M)
    F = FreedomMatroid("10110")
    assert tutte_oracle(relabel(F, [5, 4, 3, 2, 1])) == tutte_freedom("10110")


def test_relaxation_pairs():
    pairs = relaxation_pairs(10, seed=2)
    assert len(pairs) == 10
    for pair in pairs:
        assert bases(pair.relaxed) == bases(pair.M) | {pair.C}
