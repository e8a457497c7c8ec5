from fractions import Fraction

import pytest

from postlie.coeffs import LAMBDA, Laurent, as_fraction, is_zero, specialize


def test_laurent_arithmetic():
    a = (LAMBDA - 1) / 24
    assert a.terms == {1: Fraction(1, 24), 0: Fraction(-1, 24)}
    assert a * 24 + 1 == LAMBDA
    assert (LAMBDA * (1 / LAMBDA)).is_constant()
    assert LAMBDA ** -2 * LAMBDA ** 2 == Laurent({0: 1})
    assert is_zero(LAMBDA - LAMBDA)
    assert (LAMBDA + 1) * (LAMBDA - 1) == LAMBDA ** 2 - 1


def test_zero_coefficients_not_stored():
    assert Laurent({0: 0, 1: 0}).terms == {}
    assert (LAMBDA + 1 - LAMBDA).terms == {0: 1}


def test_division_only_by_monomials():
    assert (LAMBDA ** 2 + LAMBDA) / LAMBDA == LAMBDA + 1
    with pytest.raises((ValueError, ZeroDivisionError, TypeError)):
        Laurent({0: 1}) / (LAMBDA + 1)


def test_specialize():
    c = (LAMBDA - 3) / 24 + 2 / LAMBDA
    assert specialize(c, 1) == Fraction(-2, 24) + 2
    assert specialize(c, Fraction(2)) == Fraction(-1, 24) + 1
    assert specialize(Fraction(1, 3), 5) == Fraction(1, 3)


def test_as_fraction():
    assert as_fraction("3/4") == Fraction(3, 4)
    with pytest.raises(TypeError):
        as_fraction(0.5)
