import pytest
from hypothesis import given, strategies as st

from thinlie.bracketlang import (X, Y, BracketExpr, BracketSyntaxError, LnWord, VContext, emit,
                                 parse, vword)
from thinlie.ffield import GF

F7 = GF(7)
F49 = GF(7, 2)
CTX = VContext(7, 7)


def w(s):
    return LnWord.from_string(s)


def test_v_words_q7():
    assert vword(1, CTX) == w("yxxxxx")
    assert vword(2, CTX) == w("yxxxxx" "xyxxxx")
    assert vword(2, VContext(7, 7, {2})) == w("yxxxxx" "yxxxxx")


@pytest.mark.parametrize("ctx", [CTX, VContext(7, 7, {3, 9}), VContext(5, 25), VContext(5, 25, {7})])
def test_v_degree(ctx):
    for k in range(1, 41):
        assert vword(k, ctx).degree == k * (ctx.q - 1)


def test_v_prefix_chain():
    for k in range(2, 12):
        assert vword(k, CTX).letters[:6 * (k - 1)] == vword(k - 1, CTX).letters


def test_vcontext_rejects_bad_q():
    for p, q in [(7, 8), (5, 5), (7, 1)]:
        with pytest.raises(ValueError):
            VContext(p, q)
    with pytest.raises(ValueError):
        VContext(7, 7, {1})
    with pytest.raises(ValueError):
        vword(0, CTX)


def test_parse_single_word():
    e = parse("[y x^3 y]", CTX, F7)
    assert e.terms == ((F7.one, w("yxxxy")),)


def test_parse_two_terms_degree_8():
    e = parse("[v1 y x] + 2[v1 x y]", CTX, F7)
    assert len(e.terms) == 2 and e.degree == 8
    assert {str(u): c for c, u in e.terms} == {"[y x^6 y]": F7(2), "[y x^5 y x]": F7.one}


def test_zero_power_elides():
    assert parse("[x^0 y]", None, F7) == BracketExpr.word(F7, w("y"))


def test_terms_combine():
    e = parse("[x y] + [x y]", None, F7)
    assert e.terms == ((F7(2), w("xy")),)
    assert not parse("[x y] - [x y]", None, F7)
    assert parse("7[x y]", None, F7).terms == ()


def test_coefficients_reduce_and_extension_syntax():
    assert parse("9*[x y]", None, F7).terms[0][0] == F7(2)
    e = parse("(1+2*t)[y x y] - [x x y]", None, F49)
    assert emit(e) == "6[x^2 y] + (1+2*t)[y x y]"
    assert parse(emit(e), None, F49) == e


def test_emit_canonical_order():
    e = parse("[y x] + [x y] + 3[x x y]", None, F7)
    assert emit(e) == "3[x^2 y] + [x y] + [y x]"
    assert emit(BracketExpr(F7)) == "0"


@pytest.mark.parametrize("text,pos", [
    ("[x z]", 3),
    ("[x y", 4),
    ("[]", 2),
    ("[x y] [x]", 6),
    ("2*", 2),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(BracketSyntaxError) as ei:
        parse(text, CTX, F7)
    assert ei.value.pos == pos
    assert f"position {pos}" in str(ei.value)


def test_v_atom_errors():
    with pytest.raises(BracketSyntaxError, match="positive"):
        parse("[v0 x]", CTX, F7)
    with pytest.raises(BracketSyntaxError, match="VContext"):
        parse("[v1 x]", None, F7)


def test_homogeneity_flag():
    parse("[x y] + [x x y]", None, F7)
    with pytest.raises(BracketSyntaxError, match="homogeneous"):
        parse("[x y] + [x x y]", None, F7, homogeneous=True)
    with pytest.raises(ValueError):
        parse("[x y] + [x x y]", None, F7).degree


def test_word_validation():
    with pytest.raises(ValueError):
        LnWord(())
    with pytest.raises(ValueError):
        LnWord((0, 2))
    assert w("xy") + w("y") == LnWord((X, Y, Y))


words = st.lists(st.sampled_from([X, Y]), min_size=1, max_size=9).map(lambda l: LnWord(tuple(l)))
exprs = st.lists(st.tuples(st.integers(0, 48), words), max_size=6).map(
    lambda ts: BracketExpr(F49, tuple(ts)))


@given(exprs)
def test_emit_parse_round_trip(e):
    assert parse(emit(e), None, F49) == e


@given(exprs, exprs)
def test_expression_arithmetic(a, b):
    assert (a + b) - b == a
    assert a.scale(3) == a + a + a
    assert -(-a) == a
