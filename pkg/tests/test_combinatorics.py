import math

import pytest
from hypothesis import given, strategies as st

from thinlie.combinatorics import binom_mod_p, lyndon_words, mobius, witt_dimension


@given(st.integers(0, 3000), st.integers(0, 3000), st.sampled_from([5, 7, 11]))
def test_lucas_matches_exact_binomial(n, m, p):
    assert binom_mod_p(n, m, p) == math.comb(n, m) % p


@pytest.mark.parametrize("q,p", [(7, 7), (25, 5), (49, 7), (125, 5)])
def test_q_minus_one_row_alternates(q, p):
    assert all(binom_mod_p(q - 1, i, p) == (-1) ** i % p for i in range(q))


@pytest.mark.parametrize("q,p", [(7, 7), (25, 5)])
def test_q_row_has_two_survivors(q, p):
    assert [i for i in range(q + 1) if binom_mod_p(q, i, p)] == [0, q]


def test_lucas_examples():
    assert binom_mod_p(6, 3, 7) == 6
    assert binom_mod_p(20, 6, 7) == 1
    assert binom_mod_p(3, 5, 7) == 0
    with pytest.raises(ValueError):
        binom_mod_p(-1, 0, 7)


@pytest.mark.parametrize("d", range(1, 15))
def test_lyndon_count_is_witt(d):
    words = lyndon_words(d)
    assert len(words) == witt_dimension(d)
    assert words == sorted(words) and len(set(words)) == len(words)
    for w in words:
        assert all(w < w[i:] + w[:i] for i in range(1, d))


def test_small_lyndon_lists():
    assert lyndon_words(1) == ["x", "y"]
    assert lyndon_words(3) == ["xxy", "xyy"]
    assert lyndon_words(2, "abc") == ["ab", "ac", "bc"]


def test_mobius_and_witt():
    assert [mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert [witt_dimension(d, 3) for d in range(1, 5)] == [3, 3, 8, 18]
    with pytest.raises(ValueError):
        mobius(0)
