import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from tuttespan.seqlat import BitSeq

settings.register_profile(
    "default",
    deadline=None,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def all_seqs(max_n, min_n=0):
    for n in range(min_n, max_n + 1):
        for bits in itertools.product((0, 1), repeat=n):
            yield BitSeq(bits)


@st.composite
def bitseqs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return BitSeq(draw(st.lists(st.integers(0, 1), min_size=n, max_size=n)))


@st.composite
def same_space_pairs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    r = draw(st.integers(0, n))
    def one():
        ones = set(draw(st.permutations(range(n)))[:r])
        return BitSeq(1 if i in ones else 0 for i in range(n))
    return one(), one()


@pytest.fixture(scope="session")
def corpus():
    from tuttespan.corpus import random_corpus

    return random_corpus(120, seed=7)
