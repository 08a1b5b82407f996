"""Exact field arithmetic: Q, prime fields, and small extensions."""
import random
from fractions import Fraction

import pytest

from reeselim import FieldDescriptor, FieldError, field_arith, pth_root

Q = FieldDescriptor.parse("Q")
F2 = FieldDescriptor.parse("F2")
F4 = FieldDescriptor.parse("F4")
F5 = FieldDescriptor.parse("F5")
F9 = FieldDescriptor.parse("F9")


def test_rational_addition_exact():
    a = Q.element(Fraction(2, 3))
    b = Q.element(Fraction(1, 6))
    assert field_arith(a, b, "add") == Q.element(Fraction(5, 6))


def test_prime_field_multiplication():
    assert F5.element(3) * F5.element(4) == F5.element(2)


def test_extension_field_inverse_matches_brute_force():
    t = F4.generator()
    # oracle: the unique element whose product with t is 1
    (inv,) = [x for x in F4.elements() if x * t == F4.one()]
    assert field_arith(F4.one(), t, "div") == inv
    assert inv == t + 1


def test_pth_root_prime_field_is_identity():
    assert pth_root(F5.element(3)) == F5.element(3)
    assert pth_root(F5.zero()) == F5.zero()


def test_pth_root_in_f4_matches_square_table():
    t = F4.generator()
    # oracle: enumerate squares of all four elements
    (root,) = [x for x in F4.elements() if x * x == t]
    assert pth_root(t) == root
    assert root == t + 1


def test_element_enumeration_orders():
    assert [e.val for e in FieldDescriptor.parse("F3").elements()] == [0, 1, 2]
    t = F4.generator()
    assert F4.elements() == [F4.zero(), F4.one(), t, t + 1]
    f25 = FieldDescriptor(5, 2)
    elems = f25.elements()
    assert len(elems) == 25 and len(set(elems)) == 25


@pytest.mark.parametrize("field", [Q, F4, F5, F9])
def test_field_laws_randomized(field):
    rng = random.Random(11)

    def pick():
        if field.p == 0:
            return field.element(Fraction(rng.randrange(-9, 10),
                                          rng.randrange(1, 10)))
        return rng.choice(field.elements())

    for _ in range(60):
        a, b, c = pick(), pick(), pick()
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        if not a.is_zero():
            assert a * a.inverse() == field.one()


@pytest.mark.parametrize("field", [F2, F4, F5, F9])
def test_pth_root_is_frobenius_inverse_automorphism(field):
    for a in field.elements():
        assert pth_root(a)**field.p == a
        for b in field.elements():
            assert pth_root(a * b) == pth_root(a) * pth_root(b)


def test_enumeration_closed_under_arithmetic():
    elems = set(F9.elements())
    sample = list(elems)[:5]
    for a in sample:
        for b in sample:
            assert a + b in elems and a * b in elems


def test_spec_string_round_trip():
    for spec in ("Q", "F5", "F4:t^2+t+1", "F9"):
        d = FieldDescriptor.parse(spec)
        assert FieldDescriptor.parse(d.spec()) == d


def test_descriptor_mismatch_and_zero_division():
    with pytest.raises(FieldError):
        field_arith(F5.element(1), FieldDescriptor.parse("F3").element(1), "add")
    with pytest.raises(ZeroDivisionError):
        field_arith(F5.one(), F5.zero(), "div")


def test_characteristic_zero_restrictions():
    with pytest.raises(FieldError):
        pth_root(Q.one())
    with pytest.raises(FieldError):
        Q.elements()
    with pytest.raises(FieldError):
        _ = Q.order


def test_reducible_modulus_rejected():
    with pytest.raises(FieldError):
        FieldDescriptor.parse("F4:t^2+1")  # (t+1)^2 over F_2
