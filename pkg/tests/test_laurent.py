from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftkit import W2, Z, LaurentPoly, Scalar, Symmetry, as_scalar
from liftkit.laurent import parse_scalar

from conftest import dyadics, polys, scalars

ZI = Z ** -1


# -- scalars -----------------------------------------------------------------


@settings(max_examples=1000)
@given(scalars, scalars, scalars)
def test_scalar_field_laws(x, y, w):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + w == x + (y + w)
    assert (x * y) * w == x * (y * w)
    assert x * (y + w) == x * y + x * w
    assert x - x == 0
    assert x + 0 == x and x * 1 == x
    if x:
        assert x * x.inverse() == 1
        assert (y / x) * x == y


@settings(max_examples=300)
@given(scalars)
def test_scalar_text_round_trip(x):
    assert parse_scalar(str(x)) == x


def test_scalar_worked_values():
    assert Scalar(1, 1) * Scalar(1, -1) == -1
    assert W2 * W2 == 2
    assert Scalar(Fraction(3, 2)) / W2 == Scalar(0, Fraction(3, 4))


@pytest.mark.parametrize("text, value", [
    ("3", Scalar(3)),
    ("-3/2", Scalar(Fraction(-3, 2))),
    ("1/2+3/4*w2", Scalar(Fraction(1, 2), Fraction(3, 4))),
    ("-2*w2", Scalar(0, -2)),
    ("12*w2", Scalar(0, 12)),
    ("0-1/3*w2", Scalar(0, Fraction(-1, 3))),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["", "1-w2", "1.5", "1 + 2*w2", "w2", "1/0x"])
def test_parse_scalar_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_scalar_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Scalar(0).inverse()


def test_scalar_dyadic():
    assert Scalar(Fraction(3, 16)).is_dyadic()
    assert not Scalar(Fraction(1, 3)).is_dyadic()
    assert not W2.is_dyadic()


def test_scalar_equals_plain_numbers():
    assert Scalar(2) == 2
    assert hash(Scalar(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert as_scalar("1/2") == Fraction(1, 2)


# -- polynomials -------------------------------------------------------------


@settings(max_examples=1000)
@given(polys(), polys(), polys())
def test_poly_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + (-f)).is_zero()


@settings(max_examples=300)
@given(polys(), polys())
def test_time_reverse_is_a_ring_involution(f, g):
    assert f.time_reverse().time_reverse() == f
    assert (f * g).time_reverse() == f.time_reverse() * g.time_reverse()


@settings(max_examples=300)
@given(polys(dyadics), polys(dyadics))
def test_dyadic_closure(f, g):
    assert f.is_dyadic() and g.is_dyadic()
    assert (f + g).is_dyadic() and (f * g).is_dyadic()


@settings(max_examples=300)
@given(polys(scalars))
def test_antisymmetric_filters_vanish_at_plus_and_minus_one(f):
    wa = f - f.time_reverse()
    assert wa.has_symmetry(Symmetry.WA)
    assert wa(1) == 0 and wa(-1) == 0


@settings(max_examples=300)
@given(polys(scalars), st.sampled_from([Symmetry.HS_PLUS, Symmetry.HS_MINUS, Symmetry.WA]))
def test_symmetry_classes_are_additive_groups(f, kind):
    if kind is Symmetry.HS_PLUS:
        g = f + f.time_reverse().shift(1)
    elif kind is Symmetry.HS_MINUS:
        g = f + f.time_reverse().shift(-1)
    else:
        g = f - f.time_reverse()
    assert g.has_symmetry(kind)
    assert (g + g.scale(3)).has_symmetry(kind)
    assert (-g).has_symmetry(kind)


def test_poly_worked_products():
    assert (1 + ZI) * (1 - ZI) == 1 - Z ** -2
    b = 2
    s0 = 1 + b * ZI
    s1 = Z ** 2 * (1 - b * ZI) / 4
    assert s0 * s1 == Z ** 2 / 4 - 1


@pytest.mark.parametrize("f, interval", [
    (1 + ZI, (0, 1)),
    (Z + 1 + ZI, (-1, 1)),
    (-12 * Z + 40 - 12 * ZI, (-1, 1)),
])
def test_support_interval(f, interval):
    assert f.support_interval() == interval


@pytest.mark.parametrize("f, n", [
    (LaurentPoly([5]), 0),
    (1 + ZI + Z ** -2, 2),
    (Z ** 2 * (1 - ZI), 1),
])
def test_order(f, n):
    assert f.order() == n


def test_order_and_support_of_zero_raise():
    with pytest.raises(ValueError):
        LaurentPoly().order()
    with pytest.raises(ValueError):
        LaurentPoly().support_interval()


def test_time_reverse_examples():
    assert (1 + ZI).time_reverse() == 1 + Z
    assert LaurentPoly().time_reverse().is_zero()
    assert (Z + 2 + 3 * ZI).time_reverse() == ZI + 2 + 3 * Z


def test_shift_examples():
    assert LaurentPoly([1]).shift(2) == Z ** -2
    assert Z.shift(1) == 1
    assert (1 + ZI).shift(-1) == Z + 1


def test_symmetry_examples():
    assert (1 + ZI).has_symmetry(Symmetry.HS_PLUS)
    assert (1 + Z).has_symmetry(Symmetry.HS_MINUS)
    assert not (1 + Z).has_symmetry(Symmetry.HS_PLUS)
    assert (Z - ZI).has_symmetry(Symmetry.WA)
    assert not (Z - ZI).has_symmetry(Symmetry.HS_PLUS)


def test_dyadic_examples():
    assert ((1 + ZI) / 4).is_dyadic()
    assert (Fraction(3, 16) * (Z + 1)).is_dyadic()
    assert not (Fraction(5, 3) * ZI).is_dyadic()


def test_evaluate_examples():
    assert (Z + 1 + ZI)(1) == 3
    assert (1 + ZI)(-1) == 0
    assert (Z ** 2 + ZI)(W2) == 2 + W2 / 2
    with pytest.raises(ValueError):
        (1 + ZI)(0)


def test_negative_power_needs_a_monomial():
    assert (3 * Z ** 2) ** -1 == Z ** -2 / 3
    with pytest.raises((ValueError, ZeroDivisionError, TypeError)):
        (1 + Z) ** -1


def test_text_form():
    assert str(1 + ZI) == "1 + z^-1"
    assert str(LaurentPoly()) == "0"
