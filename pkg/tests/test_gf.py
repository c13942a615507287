import pytest

from drinfeld_heights.errors import DivisionByZero, NonPrime, ReducibleModulus, UnsupportedSize
from drinfeld_heights.gf import MAX_Q, field_create, frobenius, invert


def test_prime_field():
    F = field_create(3)
    assert (F.p, F.m, F.q) == (3, 1, 3)


def test_f4_from_modulus():
    F = field_create(2, 2, [1, 1, 1])
    assert F.q == 4
    assert F == field_create(2, 2)


def test_reducible_modulus():
    # x^2 + 1 = (x + 1)^2 over F_2
    with pytest.raises(ReducibleModulus):
        field_create(2, 2, [1, 0, 1])


@pytest.mark.parametrize("p", [1, 4, 9])
def test_non_prime(p):
    with pytest.raises(NonPrime):
        field_create(p)


def test_size_cap():
    with pytest.raises(UnsupportedSize):
        field_create(2, 9)
    assert field_create(2, 8).q == MAX_Q


def test_invert():
    F = field_create(3)
    assert invert(F.one) == F.one
    assert invert(F(2)) == F(2)
    with pytest.raises(DivisionByZero):
        invert(F.zero)


def test_inverse_table_exhaustive():
    for p, m in [(2, 3), (3, 2), (5, 1), (7, 2)]:
        F = field_create(p, m)
        for a in F.elements()[1:]:
            assert a * invert(a) == F.one


def test_frobenius():
    F = field_create(2, 2)
    g = F.gen
    assert frobenius(g, 0) == g
    for a in F.elements():
        assert frobenius(a) == a
    # absolute Frobenius of F_4 over F_2
    assert frobenius(g, 1, base=2) == g + F.one
    assert g * g + g + F.one == F.zero


def test_group_laws():
    F = field_create(3, 2)
    els = F.elements()
    for a in els:
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
            assert (a - b) + b == a
    assert sum(els, F.zero) == F.zero


def test_repr_length():
    F = field_create(5, 3)
    for a in F.elements()[:20]:
        assert len(a.coeffs) == 3
        assert all(0 <= c < 5 for c in a.coeffs)
