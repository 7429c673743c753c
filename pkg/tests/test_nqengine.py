import itertools
import json
import warnings

import numpy as np
import pytest

from thinlie.bracketlang import BracketExpr, LnWord, VContext, parse
from thinlie.combinatorics import witt_dimension
from thinlie.ffield import GF
from thinlie.nqengine import (DegreeError, GradedAlgebra, HomElement, Presentation, bracket,
                              bracket_by_definitions, build, central_quotient, change_generators,
                              dump_algebra, evaluate, graded_centre, lnprod, load_algebra)
from thinlie.presets import free_presentation

F7 = GF(7)


def pres(*relators, F=F7, q=7):
    return Presentation(F, q, [parse(r, VContext(F.p, q), F, homogeneous=True) for r in relators])


def random_element(A, d, rng):
    return A.element(d, rng.integers(0, A.field.order, A.dim(d)))


@pytest.fixture(scope="module")
def free7():
    return build(free_presentation(7), 12)


@pytest.mark.parametrize("mode", ["full", "pairwise"])
def test_free_algebra_has_witt_dimensions(mode):
    A = build(free_presentation(7), 12, consistency=mode)
    assert A.dims[1:] == [witt_dimension(d) for d in range(1, 13)]


def test_free_algebra_over_extension_field():
    A = build(free_presentation(5, 25, k=2), 8)
    assert A.field.order == 25
    assert A.dims[1:] == [witt_dimension(d) for d in range(1, 9)]


def test_definitions_spell_basis_words(free7):
    for d in range(1, 9):
        for b in range(free7.dim(d)):
            assert evaluate(free7, free7.word_of(d, b)) == free7.basis(d, b)


def test_stored_products_match_definitions(free7):
    rng = np.random.default_rng(3)
    for i, j in [(1, 1), (2, 3), (3, 3), (4, 5), (2, 8)]:
        u, v = random_element(free7, i, rng), random_element(free7, j, rng)
        assert bracket(free7, u, v) == bracket_by_definitions(free7, u, v)


def test_lie_axioms_free(free7):
    rng = np.random.default_rng(4)
    for i, j, k in itertools.product([1, 2, 3], repeat=3):
        a, b, c = (random_element(free7, d, rng) for d in (i, j, k))
        assert bracket(free7, a, a).is_zero()
        assert bracket(free7, a, b) == -bracket(free7, b, a)
        jac = lnprod(free7, a, b, c) + lnprod(free7, b, c, a) + lnprod(free7, c, a, b)
        assert jac.is_zero()


def test_preset_relators_vanish(main_instance):
    N = main_instance.N
    for r in main_instance.P.relators:
        assert evaluate(N, r).is_zero(), str(r)


def test_relator_kills_exactly_its_span():
    A = build(pres("[y x x]"), 6)
    assert evaluate(A, LnWord.from_string("yxx")).is_zero()
    assert not evaluate(A, LnWord.from_string("xyy")).is_zero()
    assert A.dims[3] == 1


def test_dump_round_trip(main_instance):
    L = main_instance.L
    doc = json.loads(json.dumps(dump_algebra(L)))
    B = load_algebra(doc)
    assert B.dims == L.dims and B.computed_to == L.computed_to
    for key, arr in L.struct.items():
        assert np.array_equal(B.struct[key], arr), key
    assert load_algebra(json.dumps(doc)).dims == L.dims
    with pytest.raises(ValueError):
        load_algebra({"format": "other"})


def test_degree_errors(free7):
    with pytest.raises(DegreeError):
        free7.dim(13)
    with pytest.raises(DegreeError):
        free7.act(12)
    with pytest.raises(DegreeError):
        bracket(free7, free7.basis(6, 0), free7.basis(7, 0))
    with pytest.raises(DegreeError):
        graded_centre(free7, 12)
    with pytest.raises(DegreeError):
        build(free_presentation(7), 20, cap=10)
    assert isinstance(DegreeError("x"), ValueError)


def test_evaluate_errors(free7):
    with pytest.raises(ValueError):
        evaluate(free7, BracketExpr(F7))
    with pytest.raises(ValueError):
        evaluate(free7, parse("[x y]", None, GF(11)))
    with pytest.raises(TypeError):
        evaluate(free7, "[x y]")


def test_presentation_validation():
    with pytest.raises(ValueError):
        pres("[x]")
    with pytest.raises(ValueError):
        Presentation(F7, 7, [parse("[x y] + [x x y]", None, F7)])
    with pytest.raises(ValueError):
        Presentation(F7, 7, [parse("[x y]", None, GF(11))])
    with pytest.raises(TypeError):
        Presentation(F7, 7, ["[x y]"])
    with pytest.raises(ValueError):
        GradedAlgebra(F7, consistency="lazy")


def test_hom_element_arithmetic(free7):
    u, v = free7.basis(3, 0), free7.basis(3, 1)
    assert (u + v) - v == u
    assert 3 * u + 4 * u == free7.zero(3)
    assert F7(2) * u == u + u
    with pytest.raises(ValueError):
        u + free7.basis(2, 0)
    assert u != free7.basis(2, 0)


def test_change_generators_swaps_roles():
    A = build(pres("[y x x]"), 6)
    B = change_generators(A, [0, 1], [1, 0])
    assert B.dims == A.dims
    assert evaluate(B, LnWord.from_string("xyy")).is_zero()
    assert not evaluate(B, LnWord.from_string("yxx")).is_zero()


def test_central_quotient_of_class_two():
    N = build(pres("[x y x]", "[x y y]"), 6)
    assert N.dims[1:] == [2, 1, 0, 0, 0, 0]
    assert graded_centre(N, 2).shape[0] == 1
    # the abelian quotient is its own centre
    with pytest.warns(RuntimeWarning, match="degree 1"):
        L = central_quotient(N)
    assert L.computed_to == 5
    assert L.dims[1:6] == [2, 0, 0, 0, 0]


def test_residual_centre_is_warned():
    quartic = ["[" + " ".join(w) + "]" for w in itertools.product("xy", repeat=4)]
    N = build(pres(*quartic), 6)
    assert N.dims[1:] == [2, 1, 2, 0, 0, 0]
    with pytest.warns(RuntimeWarning, match="centre"):
        L = central_quotient(N)
    assert L.dims[1:4] == [2, 1, 0]
    assert L.notes
    with pytest.warns(RuntimeWarning, match="degree 1"):
        L2 = central_quotient(N, iterations=2)
    assert L2.dims[1:3] == [2, 0]


def test_preset_quotient_is_centreless(main_instance):
    L = main_instance.L
    assert max(L.dims[1:]) <= 2
    assert L.computed_to == 119
    for d in (1, 6, 7, 49, 100):
        assert graded_centre(L, d).shape[0] == 0


def test_build_is_deterministic():
    a = build(pres("[y x y]", "[y x x x y]"), 20)
    b = build(pres("[y x y]", "[y x x x y]"), 20)
    assert dump_algebra(a) == dump_algebra(b)
