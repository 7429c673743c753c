import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from thinlie.bracketlang import VContext, parse
from thinlie.combinatorics import lyndon_words
from thinlie.ffield import GF
from thinlie.freelie_oracle import (MAX_DEGREE, brute_quotient_dims, free_dims, lyndon_bracket,
                                    standard_factorization)
from thinlie.nqengine import Presentation, build, lnprod
from thinlie.presets import free_presentation, make_preset


def vec_bracket(u, v):
    out = {}
    for (a, ca), (b, cb) in itertools.product(u.items(), v.items()):
        for w, c in lyndon_bracket(a, b).items():
            out[w] = out.get(w, 0) + ca * cb * c
    return {w: c for w, c in out.items() if c}


def test_free_dims_reference():
    assert [free_dims(d) for d in range(1, 15)] == [2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335, 630, 1161]
    for d in (0, 15):
        with pytest.raises(ValueError):
            free_dims(d)


def test_standard_factorization():
    assert standard_factorization("xy") == ("x", "y")
    assert standard_factorization("xxy") == ("x", "xy")
    assert standard_factorization("xyy") == ("xy", "y")
    assert standard_factorization("xxyxy") == ("xxy", "xy")
    for w in lyndon_words(7):
        u, v = standard_factorization(w)
        assert u + v == w and v in lyndon_words(len(v))
    with pytest.raises(ValueError):
        standard_factorization("x")


def test_lyndon_bracket_small():
    assert lyndon_bracket("x", "y") == {"xy": 1}
    assert lyndon_bracket("y", "x") == {"xy": -1}
    assert lyndon_bracket("x", "x") == {}
    assert lyndon_bracket("xy", "y") == {"xyy": 1}
    assert lyndon_bracket("xy", "x") == {"xxy": -1}


@pytest.mark.parametrize("total", [3, 4, 5, 6])
def test_lyndon_bracket_jacobi(total):
    basis = [w for d in range(1, total - 1) for w in lyndon_words(d)]
    for a, b, c in itertools.product(basis, repeat=3):
        if len(a) + len(b) + len(c) != total:
            continue
        A, B, C = {a: 1}, {b: 1}, {c: 1}
        jac = {}
        for u, v, w in ((A, B, C), (B, C, A), (C, A, B)):
            for word, coef in vec_bracket(vec_bracket(u, v), w).items():
                jac[word] = jac.get(word, 0) + coef
        assert not any(jac.values()), (a, b, c)


def test_oracle_free_matches_witt():
    assert brute_quotient_dims(free_presentation(7), MAX_DEGREE) == [free_dims(d) for d in range(1, 13)]


def test_oracle_single_commutator():
    F = GF(7)
    P = Presentation(F, 7, [parse("[x y]", None, F)])
    assert brute_quotient_dims(P, 5) == [2, 0, 0, 0, 0]


@pytest.mark.parametrize("relators", [
    ["[y x y]"],
    ["[y x x]", "[x y y y]"],
    ["[y x y] + 3[y x x]"],
    ["[x y x y] - [x y y x]", "[y x x x x]"],
])
def test_oracle_agrees_with_engine(relators):
    F = GF(7)
    P = Presentation(F, 7, [parse(r, None, F) for r in relators])
    assert build(P, 10).dims[1:11] == brute_quotient_dims(P, 10)


def test_pairwise_rows_overcount_and_jacobi_sampling_catches_it():
    F = GF(7)
    P = Presentation(F, 7, [parse("[y x y]", None, F)])
    oracle = brute_quotient_dims(P, 9)
    assert oracle == [2, 1, 1, 1, 2, 2, 4, 5, 8]
    A = build(P, 9, consistency="pairwise")
    assert A.dims[6] == 3 > oracle[5]
    rng = np.random.default_rng(0)
    failures = 0
    for i, j, k in itertools.product(range(1, 8), repeat=3):
        if i + j + k > 9:
            continue
        a, b, c = (A.element(d, rng.integers(0, 7, A.dim(d))) for d in (i, j, k))
        failures += not (lnprod(A, a, b, c) + lnprod(A, b, c, a) + lnprod(A, c, a, b)).is_zero()
    assert failures


def test_oracle_on_preset():
    P = make_preset(7, 7, 1, 3)
    assert brute_quotient_dims(P, 12) == [2, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1]
    assert build(P, 12).dims[1:] == [2, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1]


def test_oracle_over_extension_field():
    F = GF(5, 2)
    P = Presentation(F, 25, [parse("[y x y] + (2+t)[y x x]", VContext(5, 25), F)])
    assert brute_quotient_dims(P, 8) == build(P, 8).dims[1:]


def test_oracle_cap():
    with pytest.raises(ValueError):
        brute_quotient_dims(free_presentation(7), MAX_DEGREE + 1)


relators = st.integers(2, 5).flatmap(lambda d: st.lists(
    st.tuples(st.integers(1, 6), st.lists(st.sampled_from("xy"), min_size=d, max_size=d)),
    min_size=1, max_size=3))


@given(st.lists(relators, min_size=1, max_size=2))
@settings(max_examples=40, deadline=None)
def test_engine_matches_oracle_on_random_presentations(rels):
    F = GF(7)
    exprs = [" + ".join(f"{c}[{' '.join(w)}]" for c, w in terms) for terms in rels]
    P = Presentation(F, 7, [e for e in (parse(t, None, F) for t in exprs) if e.terms])
    assert build(P, 9).dims[1:] == brute_quotient_dims(P, 9)
