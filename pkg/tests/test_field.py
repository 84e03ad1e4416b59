import pytest
from hypothesis import given, strategies as st

from projnet.field import (FieldError, field_arith, field_create, field_of_order, is_irreducible,
                           lowest_irreducible, multiplicative_order, nonzero_squares, prime_power,
                           primitive_element)

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 121, 128, 243]


def brute_irreducible(f, p):
    # no roots and no factor of degree <= deg/2, by trial multiplication of monic polys
    from itertools import product
    m = len(f) - 1
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        return out
    for d in range(1, m // 2 + 1):
        for cs in product(range(p), repeat=d):
            g = list(cs) + [1]
            for hs in product(range(p), repeat=m - d):
                if mul(g, list(hs) + [1]) == list(f):
                    return False
    return True


def test_prime_power():
    assert prime_power(1) is None
    assert prime_power(12) is None
    assert prime_power(64) == (2, 6)
    assert prime_power(343) == (7, 3)


def test_small_field_moduli():
    assert field_create(2, 1).q == 2
    assert field_create(2, 2).modulus == (1, 1, 1)
    assert field_create(3, 2).modulus == (1, 0, 1)
    assert list(field_create(3, 2).elements()) == list(range(9))


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_modulus_is_lowest_irreducible(p, m):
    from itertools import product
    f = lowest_irreducible(p, m)
    assert brute_irreducible(f, p)
    # every lexicographically smaller monic polynomial of degree m is reducible
    for cs in product(range(p), repeat=m):
        g = tuple(reversed(cs)) + (1,)
        if tuple(reversed(g)) < tuple(reversed(f)):
            assert not is_irreducible(list(g), p)


def test_examples():
    F2, F4, F5 = field_of_order(2), field_of_order(4), field_of_order(5)
    assert field_arith("add", F2.one, F2.one) == F2.zero
    x = F4.element((0, 1))
    assert field_arith("mul", x, x) == F4.element((1, 1))
    assert F4.label((x * x).value) == "x+1"
    assert field_arith("inv", F5.element(2)).value == 3


def test_errors():
    with pytest.raises(FieldError):
        field_create(4, 1)
    with pytest.raises(FieldError):
        field_create(2, 0)
    with pytest.raises(FieldError):
        field_create(2, 21)
    F = field_of_order(7)
    with pytest.raises(FieldError):
        field_arith("inv", F.zero)
    with pytest.raises(FieldError):
        F.one + field_of_order(5).one


def test_primitive_elements():
    assert primitive_element(field_of_order(5)).value == 2
    assert primitive_element(field_of_order(7)).value == 3
    F4 = field_of_order(4)
    assert primitive_element(F4) == F4.element((0, 1))
    for q in ORDERS[1:]:
        F = field_of_order(q)
        assert multiplicative_order(F, primitive_element(F).value) == q - 1


def test_squares():
    assert nonzero_squares(field_of_order(5)) == {1, 4}
    assert sorted(nonzero_squares(field_of_order(13))) == [1, 3, 4, 9, 10, 12]
    assert len(nonzero_squares(field_of_order(9))) == 4
    assert nonzero_squares(field_of_order(8)) == set(range(1, 8))


def test_prime_field_matches_integers():
    for p in (2, 3, 5, 7, 11, 13):
        F = field_of_order(p)
        for a in range(p):
            for b in range(p):
                assert F.add(a, b) == (a + b) % p
                assert F.mul(a, b) == (a * b) % p


@st.composite
def field_triples(draw):
    F = field_of_order(draw(st.sampled_from(ORDERS)))
    elt = st.integers(0, F.q - 1)
    return F, draw(elt), draw(elt), draw(elt)


@given(field_triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b
        assert F.pow(a, F.q - 1) == 1


@given(field_triples())
def test_elements_wrap_int_api(t):
    F, a, b, _ = t
    A, B = F.element(a), F.element(b)
    assert (A + B).value == F.add(a, b)
    assert (A - B).value == F.sub(a, b)
    assert (A * B).value == F.mul(a, b)
    assert (-A).value == F.neg(a)
    assert F.from_coeffs(F.coeffs(a)) == a
    assert len(A.coeffs) == F.m and all(0 <= c < F.p for c in A.coeffs)


@given(st.sampled_from(ORDERS), st.data())
def test_frobenius_is_additive(q, data):
    F = field_of_order(q)
    a, b = data.draw(st.integers(0, q - 1)), data.draw(st.integers(0, q - 1))
    assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))
