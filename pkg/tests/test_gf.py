import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cocycle_forge.gf import (
    FieldSpec,
    add,
    enumerate_field,
    field_of_order,
    frobenius,
    inv,
    is_irreducible,
    is_prime,
    make_field,
    mul,
    neg,
    prime_power,
    primitive_element,
)

SMALL = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (7, 1), (2, 4), (3, 3), (2, 6)]


def test_prime_field_moduli():
    assert make_field(2, 1).modulus == (0, 1)
    assert make_field(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert [a.index for a in enumerate_field(make_field(3, 1))] == [0, 1, 2]


def test_f4_arithmetic():
    F = make_field(2, 2)
    x = F.gen()
    assert F.one() * x == x
    assert x * x == x + F.one()
    assert frobenius(x) == x + F.one()
    assert frobenius(F.zero()) == F.zero()


def test_inverse_in_f3():
    F = make_field(3, 1)
    two = F.from_index(2)
    assert inv(two) == two


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        make_field(5, 1).zero().inverse()


def test_mixed_fields_rejected():
    a, b = make_field(3, 1).one(), make_field(5, 1).one()
    with pytest.raises(ValueError):
        _ = a + b


@pytest.mark.parametrize("l,m", [(4, 1), (1, 1), (9, 2)])
def test_bad_characteristic(l, m):
    with pytest.raises(ValueError):
        make_field(l, m)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FieldSpec(2, 2, (1, 0, 1))  # x^2 + 1 = (x + 1)^2


def test_cap():
    with pytest.raises(ValueError):
        make_field(2, 21)


def test_modulus_is_smallest_irreducible():
    F = make_field(3, 2)
    # monic quadratics over F_3 in encoding order; x^2 + 1 is the first irreducible
    assert F.modulus == (1, 0, 1)
    assert is_irreducible(F.modulus, 3)


@pytest.mark.parametrize("q,lm", [(4, (2, 2)), (7, (7, 1)), (16, (2, 4)), (9, (3, 2)), (6, None), (1, None)])
def test_prime_power(q, lm):
    assert prime_power(q) == lm


@pytest.mark.parametrize("l,m", [lm for lm in SMALL if lm[0] ** lm[1] <= 16])
def test_field_axioms_exhaustive(l, m):
    F = make_field(l, m)
    els = enumerate_field(F)
    zero, one = F.zero(), F.one()
    for a, b in itertools.product(els, els):
        assert a + b == b + a and a * b == b * a
        assert frobenius(a * b) == frobenius(a) * frobenius(b)
        assert frobenius(a + b) == frobenius(a) + frobenius(b)
    for a, b, c in itertools.product(els, els, els):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in els:
        assert a + zero == a and a * one == a and a + (-a) == zero
        if a:
            assert a * a.inverse() == one


@pytest.mark.parametrize("l,m", SMALL)
def test_frobenius_order_m(l, m):
    F = make_field(l, m)
    for a in enumerate_field(F):
        b = a
        for _ in range(m):
            b = frobenius(b)
        assert b == a


@pytest.mark.parametrize("l,m", SMALL + [(2, 8), (13, 1)])
def test_multiplicative_group_cyclic(l, m):
    F = make_field(l, m)
    g = primitive_element(F)
    q = F.order
    seen = {g.index}
    x = g
    for _ in range(q - 2):
        x = x * g
        seen.add(x.index)
    assert len(seen) == q - 1 and x == F.one()


def test_enumeration():
    F4 = make_field(2, 2)
    els = enumerate_field(F4)
    assert len(els) == 4 and els[0] == F4.zero()
    assert [e.index for e in els] == list(range(4))
    for l, m in SMALL:
        assert len(enumerate_field(make_field(l, m))) == l**m


def test_json_roundtrip():
    F = field_of_order(16)
    assert FieldSpec.from_json(F.to_json()) == F


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([4, 8, 9, 16, 25, 27, 49, 64]), st.data())
def test_field_laws_random(q, data):
    F = field_of_order(q)
    a, b, c = (F.from_index(data.draw(st.integers(0, q - 1))) for _ in range(3))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
    assert add(a, neg(a)) == F.zero()
    if b:
        assert (a / b) * b == a
    assert a ** q == a


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
