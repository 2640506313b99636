import random

import pytest

from hallrad import fields
from hallrad.fields import GF, FieldElem

QS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 128, 256]


@pytest.mark.parametrize("q", QS)
def test_field_axioms_on_random_triples(q):
    F = GF(q)
    rng = random.Random(q)
    for _ in range(1000):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert F.add(a, F.add(b, c)) == F.add(F.add(a, b), c)
        assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, b) == F.add(b, a) and F.mul(a, b) == F.mul(b, a)
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", QS)
def test_primitive_element_generates(q):
    F = GF(q)
    assert len({F.pow(F.primitive, e) for e in range(q - 1)}) == q - 1
    assert F.pow(F.primitive, q - 1) == 1


@pytest.mark.parametrize("q", [4, 8, 9, 16, 27])
def test_characteristic_and_frobenius(q):
    F = GF(q)
    for a in F.elements():
        assert F.pow(a, q) == a
        total = 0
        for _ in range(F.p):
            total = F.add(total, a)
        assert total == 0


def test_conway_polynomials_are_primitive():
    for (p, k), mod in fields.CONWAY.items():
        assert fields._is_primitive_poly(mod, p)


def test_field_elements():
    F = GF(8)
    x = FieldElem(F, 2)
    assert x * x.inverse() == FieldElem(F, 1)
    assert (x + x).value == 0
    assert (x ** 7).value == 1
    with pytest.raises(ValueError):
        FieldElem(F, 8)


def test_rejects_non_prime_powers():
    with pytest.raises(ValueError):
        GF(6)
    with pytest.raises(ValueError):
        GF(1)
