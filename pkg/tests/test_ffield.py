import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from thinlie.ffield import GF, FieldElement, FieldError, is_prime

FIELDS = [GF(7), GF(5, 2), GF(7, 2), GF(5, 3)]


def codes(F):
    return st.integers(min_value=0, max_value=F.order - 1)


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_field_axioms(F):
    @settings(max_examples=150, deadline=None)
    @given(codes(F), codes(F), codes(F))
    def check(a, b, c):
        A, B, C = F.element(a), F.element(b), F.element(c)
        assert A + B == B + A and A * B == B * A
        assert (A + B) + C == A + (B + C)
        assert (A * B) * C == A * (B * C)
        assert A * (B + C) == A * B + A * C
        assert A - A == F.zero and A + (-A) == F.zero
        if a:
            assert A * A.inverse() == F.one
            assert (B / A) * A == B

    check()


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_vectorized_matches_scalar(F):
    rng = np.random.default_rng(1)
    a = rng.integers(0, F.order, size=50)
    b = rng.integers(0, F.order, size=50)
    prod, tot = F.mul(a, b), F.add(a, b)
    for i in range(50):
        assert prod[i] == (F.element(a[i]) * F.element(b[i])).code
        assert tot[i] == (F.element(a[i]) + F.element(b[i])).code


def test_matmul_matches_loops():
    F = GF(5, 2)
    rng = np.random.default_rng(2)
    A = rng.integers(0, 25, size=(3, 4))
    B = rng.integers(0, 25, size=(4, 2))
    C = F.matmul(A, B)
    for i in range(3):
        for j in range(2):
            acc = F.zero
            for k in range(4):
                acc = acc + F.element(A[i, k]) * F.element(B[k, j])
            assert C[i, j] == acc.code


def test_default_moduli():
    assert GF(5, 2).modulus == (2, 0, 1)
    assert GF(7, 2).modulus == (1, 0, 1)
    assert GF(7).modulus == (0, 1)


def test_multiplicative_group_is_cyclic():
    F = GF(7, 2)

    def order(a):
        n, x = 1, a
        while x != F.one:
            x, n = x * a, n + 1
        return n

    orders = [order(F.element(c)) for c in range(1, 49)]
    assert max(orders) == 48 and all(48 % n == 0 for n in orders)


def test_t_squared_reduces_by_modulus():
    F = GF(5, 2)  # t^2 = -2 = 3
    assert F.generator * F.generator == F(3)


@pytest.mark.parametrize("F", FIELDS, ids=str)
def test_format_parse_roundtrip(F):
    for c in range(F.order):
        assert F.parse(F.format_code(c)).code == c


def test_parse_variants():
    F = GF(7, 2)
    assert F.parse("t") == F.from_coeffs([0, 1])
    assert F.parse("-t+3") == F.from_coeffs([3, 6])
    assert F.parse("2*t + 2*t") == F.from_coeffs([0, 4])
    assert F("1+2*t") == F.from_coeffs([1, 2])
    assert str(F("1+2*t")) == "1+2*t"
    for bad in ("", "t^2", "2t", "1 2", "x"):
        with pytest.raises(FieldError):
            F.parse(bad)


def test_errors():
    with pytest.raises(ZeroDivisionError):
        GF(7).zero.inverse()
    with pytest.raises(ZeroDivisionError):
        GF(7).inv(np.array([1, 0]))
    with pytest.raises(FieldError):
        GF(6)
    with pytest.raises(FieldError):
        GF(5, 2, [1, 0, 1])  # t^2 + 1 = (t+2)(t+3) over GF(5)
    with pytest.raises(FieldError):
        GF(7).element(7)
    with pytest.raises(FieldError):
        GF(7)(1) + GF(5)(1)


def test_prime_subfield_and_equality():
    F = GF(7, 2)
    assert F(3).in_prime_field() and not F("t").in_prime_field()
    assert F(3) == 3 and F(10) == 3
    assert isinstance(F(3), FieldElement)
    assert is_prime(7) and not is_prime(49) and not is_prime(1)
