"""Buchberger bases, membership, ideal equality, and point scans."""
import pytest

from reeselim import (FieldDescriptor, Ideal, ResourceCapError, RingContext,
                      buchberger, ideal_equal, membership, rational_zero_set)
from reeselim.groebner import normal_form


def ring(spec, *names):
    return RingContext(FieldDescriptor.parse(spec), names)


QYZ = ring("Q", "Y", "Z")


def test_monomial_ideal_already_reduced():
    I = Ideal(QYZ, [QYZ.var("Z"), QYZ.parse("Y^4")])
    gb = buchberger(I)
    assert set(gb.basis) == {QYZ.var("Z"), QYZ.parse("Y^4")}


def test_reduction_to_monomial_basis():
    I = Ideal(QYZ, [QYZ.parse("Z^2+Y^5"), QYZ.parse("2*Z"),
                    QYZ.parse("5*Y^4")])
    gb = buchberger(I)
    assert set(gb.basis) == {QYZ.var("Z"), QYZ.parse("Y^4")}


def test_zero_ideal_has_empty_basis():
    gb = buchberger(Ideal(QYZ, [QYZ.zero()]))
    assert gb.basis == ()


def test_membership():
    gb = buchberger(Ideal(QYZ, [QYZ.var("Z"), QYZ.parse("Y^4")]))
    assert membership(QYZ.parse("Z^2+Y^5"), gb)
    assert not membership(QYZ.one(), gb)
    gb2 = buchberger(Ideal(QYZ, [QYZ.parse("Y^4")]))
    assert not membership(QYZ.parse("Y^3"), gb2)


def test_ideal_equality():
    assert ideal_equal(Ideal(QYZ, [QYZ.var("Z"), QYZ.parse("Y^4")]),
                       Ideal(QYZ, [QYZ.parse("Z+Y^4"), QYZ.parse("Y^4")]))
    assert not ideal_equal(Ideal(QYZ, [QYZ.parse("Y^3")]),
                           Ideal(QYZ, [QYZ.parse("Y^4")]))
    assert ideal_equal(Ideal(QYZ, [QYZ.parse("Z^2+Y^5"), QYZ.var("Z")]),
                       Ideal(QYZ, [QYZ.var("Z"), QYZ.parse("Y^5")]))


def test_rational_zero_sets():
    F3YZ = ring("F3", "Y", "Z")
    pts = rational_zero_set(Ideal(F3YZ, [F3YZ.var("Z"), F3YZ.parse("Y^4")]))
    assert pts == {F3YZ.origin()}
    F2Y = ring("F2", "Y")
    assert len(rational_zero_set(Ideal(F2Y, [F2Y.zero()]))) == 2
    F5Y = ring("F5", "Y")
    pts = rational_zero_set(Ideal(F5Y, [F5Y.parse("Y^2-1")]))
    assert {p.coords[0].val for p in pts} == {1, 4}


def test_normal_form_is_linear():
    gb = buchberger(Ideal(QYZ, [QYZ.parse("Z^2+Y^5"), QYZ.parse("Y*Z")]))
    basis = list(gb.basis)
    f, g = QYZ.parse("Z^3+Y^2*Z+1"), QYZ.parse("Y^6+Z^2")
    assert normal_form(f + g, basis) == \
        normal_form(f, basis) + normal_form(g, basis)


def test_membership_absorbs_multiplication():
    gb = buchberger(Ideal(QYZ, [QYZ.parse("Z^2+Y^5"), QYZ.parse("Y*Z")]))
    f = QYZ.parse("Z^2+Y^5")
    for h in (QYZ.var("Y"), QYZ.parse("Z+3"), QYZ.parse("Y^2*Z-1")):
        assert membership(f * h, gb)


def test_zero_set_containment_reverses_generator_membership():
    F3YZ = ring("F3", "Y", "Z")
    I = Ideal(F3YZ, [F3YZ.var("Y")])
    J = Ideal(F3YZ, [F3YZ.var("Y"), F3YZ.var("Z")])  # J contains I
    assert rational_zero_set(J) <= rational_zero_set(I)


def test_basis_cap_raises_resource_error():
    I = Ideal(QYZ, [QYZ.parse("Y^2"), QYZ.parse("Y*Z+Z^2")])
    with pytest.raises(ResourceCapError):
        buchberger(I, cap=2)
