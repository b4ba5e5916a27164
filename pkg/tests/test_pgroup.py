import itertools
import math

import numpy as np
import pytest

from cocycle_forge.gf import field_of_order, make_field
from cocycle_forge.pgroup import (
    GroupTable,
    ProjPoint,
    abelian_invariants,
    abelianization,
    cyclic_group,
    diagonal_outer,
    find_class_element,
    frobenius_perm,
    mobius_perm,
    perm_order,
    pgl2,
    pgl2_coset_reps,
    point_index,
    point_stabilizer,
    projective_line,
    psl2,
    validate_qp,
)


def order_formula(q):
    return q * (q * q - 1) // math.gcd(2, q - 1)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
def test_psl2_order(q):
    L = psl2(field_of_order(q))
    assert len(L) == order_formula(q)
    assert np.array_equal(L.perms[0], np.arange(q + 1))


@pytest.mark.parametrize("q,n", [(4, 5), (7, 8)])
def test_projective_line(q, n):
    F = field_of_order(q)
    pts = projective_line(F)
    assert len(pts) == n and pts[0].is_infinity
    assert [point_index(pt) for pt in pts] == list(range(n))
    # normalization is canonical: scaling a representative gives the same point
    for pt, c in itertools.product(pts, [F.from_index(k) for k in range(1, q)]):
        assert ProjPoint.normalize(pt.a * c, pt.b * c) == pt
    with pytest.raises(ValueError):
        ProjPoint.normalize(F.zero(), F.zero())


def test_q_below_4_rejected():
    with pytest.raises(ValueError):
        psl2(make_field(3, 1))


def test_singular_mobius():
    with pytest.raises(ValueError):
        mobius_perm(field_of_order(5), 1, 1, 1, 1)


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
def test_two_transitive(q):
    L = psl2(field_of_order(q))
    pairs = {(int(a), int(b)) for a, b in L.perms[:, :2]}
    assert len(pairs) == (q + 1) * q


@pytest.mark.parametrize("q", [4, 7])
def test_table_closure(q):
    L = psl2(field_of_order(q))
    T = L.mul_table
    n = len(L)
    # row g of the table is the composite: apply g then h
    for g, h in [(1, 2), (5, n - 1), (n - 1, n - 2)]:
        assert np.array_equal(L.perms[T[g, h]], L.perms[h][L.perms[g]])
    assert all(sorted(row) == list(range(n)) for row in T)
    assert np.all(T[np.arange(n), L.inverse] == 0)


def test_deterministic_indexing():
    a = psl2(field_of_order(7))
    b = psl2(field_of_order(7))
    assert np.array_equal(a.perms, b.perms)
    assert GroupTable.from_json(a.to_json()).to_json() == a.to_json()


def test_lookup_miss():
    L = psl2(field_of_order(7))
    with pytest.raises(KeyError):
        L.index_of(diagonal_outer(field_of_order(7)))


@pytest.mark.parametrize("q,order", [(4, 60), (7, 336)])
def test_pgl2(q, order):
    F = field_of_order(q)
    G = pgl2(F)
    assert len(G) == order
    L = psl2(F)
    for c in pgl2_coset_reps(F)[:: max(1, order // 20)]:
        nu = L.conjugation_map(c)
        assert sorted(nu) == list(range(len(L)))


def test_frobenius_perm():
    F4 = field_of_order(4)
    f = frobenius_perm(F4)
    assert perm_order(f) == 2
    assert np.sum(f != np.arange(5)) == 2  # swaps the two points outside F_2
    assert np.array_equal(frobenius_perm(field_of_order(7)), np.arange(8))


@pytest.mark.parametrize("q", [4, 8, 9])
def test_outer_maps_are_automorphisms(q):
    F = field_of_order(q)
    L = psl2(F)
    T = L.mul_table
    maps = [frobenius_perm(F)]
    if q % 2:
        maps.append(diagonal_outer(F))
    for c in maps:
        nu = L.conjugation_map(c)
        if q == 4:
            assert np.array_equal(nu[T], T[nu[:, None], nu[None, :]])
        else:
            rng = np.random.default_rng(0)
            g, h = rng.integers(0, len(L), (2, 10**4))
            assert np.array_equal(nu[T[g, h]], T[nu[g], nu[h]])


def test_non_normalizing_conjugator():
    F = field_of_order(7)
    L = psl2(F)
    transposition = np.arange(8)
    transposition[[0, 1]] = [1, 0]
    with pytest.raises(ValueError):
        L.conjugation_map(transposition)


@pytest.mark.parametrize("q", [4, 7, 8, 9, 13, 16])
def test_borel(q):
    L = psl2(field_of_order(q))
    H = point_stabilizer(L)
    assert len(H) * (q + 1) == len(L)
    assert np.all(H.perms[:, 0] == 0) and H.contains(np.arange(q + 1))
    d = math.gcd(2, q - 1)
    assert abelianization(H) == [(q - 1) // d]


@pytest.mark.parametrize("q", [4, 5, 7, 8])
def test_psl2_perfect(q):
    assert abelianization(psl2(field_of_order(q))) == []


@pytest.mark.parametrize(
    "orders,inv",
    [
        ([1], []),
        ([1, 2, 2, 2], [2, 2]),
        ([1, 2, 4, 4], [4]),
        ([1, 2, 3, 3, 6, 6], [6]),
    ],
)
def test_abelian_invariants(orders, inv):
    assert abelian_invariants(np.array(orders)) == inv


@pytest.mark.parametrize("n", [1, 2, 6, 12, 30])
def test_cyclic_group(n):
    C = cyclic_group(n)
    assert len(C) == n
    assert abelianization(C) == ([n] if n > 1 else [])


def test_find_class_element():
    L4 = psl2(field_of_order(4))
    assert perm_order(L4.perms[find_class_element(L4, 5)]) == 5
    assert perm_order(L4.perms[find_class_element(L4, 2)]) == 2
    L7 = psl2(field_of_order(7))
    assert set(np.unique(L7.element_orders)) == {1, 2, 3, 4, 7}
    assert L7.element_orders[find_class_element(L7, 4)] == 4
    with pytest.raises(ValueError):
        find_class_element(L7, 6)


@pytest.mark.parametrize("q,p", [(4, 3), (7, 3), (13, 3), (16, 5), (11, 5)])
def test_validate_ok(q, p):
    assert validate_qp(q, p).order == q


@pytest.mark.parametrize("q,p", [(4, 5), (5, 3), (6, 5), (3, 2), (9, 2), (7, 9), (13, 4)])
def test_validate_rejects(q, p):
    with pytest.raises(ValueError):
        validate_qp(q, p)


def test_word_reproduces_element():
    L = psl2(field_of_order(7))
    for x in [0, 1, 50, len(L) - 1]:
        img = np.arange(8)
        for k in L.word(x):
            img = L.perms[L.generators[k]][img]
        assert np.array_equal(img, L.perms[x])
