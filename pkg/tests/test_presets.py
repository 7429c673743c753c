import pytest

from thinlie.bracketlang import emit
from thinlie.ffield import GF
from thinlie.nqengine import build
from thinlie.presets import (NottinghamParams, PresetError, default_max_degree, free_presentation,
                             make_preset, nottingham_mixed)


def test_relator_list_q7():
    P = make_preset(7, 7, 1, 3)
    assert len(P.relators) == 15
    assert [emit(r) for r in P.relators[:4]] == ["[y x y]", "[y x^2 y]", "[y x^3 y]", "[y x^4 y]"]
    assert emit(P.relators[7]) == "[y x^5 y x y]"
    assert P.relators[7].degree == 9
    assert emit(P.relators[6]) == "2[y x^6 y] + [y x^5 y x]"
    assert P.relators[-1].degree == 50
    assert P.max_degree == 50
    assert P.params["lambda"] == P.field(3)


def test_type_relator_coefficients():
    r = make_preset(7, 7, 1, 3).relators[-1]
    coefs = sorted(int(str(c)) for c, _ in r.terms)
    # lambda [w y x] - (1 - lambda) [w x y] with lambda = 3
    assert coefs == [2, 3]


def test_lambda_zero_variant():
    P = make_preset(7, 7, 1, 0)
    assert len(P.relators) == 16
    assert P.relators[-1].degree == 98
    assert P.ctx.shifts == frozenset({9})
    assert "lambda0" in P.label


def test_lambda_zero_rejected_by_general_builder():
    with pytest.raises(PresetError):
        nottingham_mixed(NottinghamParams(7, 7, 1, GF(7).zero))


@pytest.mark.parametrize("args", [(4, 4, 1, 1), (3, 9, 1, 1), (7, 8, 1, 1), (5, 5, 1, 1), (7, 7, 0, 1)])
def test_bad_parameters(args):
    with pytest.raises(ValueError):
        make_preset(*args)


def test_lambda_field_characteristic_checked():
    with pytest.raises(PresetError):
        NottinghamParams(7, 7, 1, GF(5)(1))


def test_lambda_in_extension_field():
    P = make_preset(7, 7, 1, "1+t", k=2)
    assert P.field.order == 49
    assert not P.params["lambda"].in_prime_field()
    N = build(P, 20)
    assert max(N.dims[1:]) <= 2


def test_q25_counts():
    P = make_preset(5, 25, 1, 2)
    # 22 + 3 + 22 + 2 + 1
    assert len(P.relators) == 50
    assert P.max_degree == 6 * 24 + 2


def test_default_max_degree():
    assert default_max_degree(7, 7, 1) == 102
    assert default_max_degree(5, 25, 1) == 294


def test_free_presentation():
    P = free_presentation(5, 25, k=2)
    assert P.relators == [] and P.q == 25 and P.field.order == 25
