from fractions import Fraction

import pytest

from suspinv import FieldElement, field_from_poly


def sqrt_field(d):
    import math
    r = math.isqrt(d)
    return field_from_poly([-d, 0, 1], (r, r + 1))


def golden_field():
    return field_from_poly([-1, -1, 1], (1, 2))


def elem(field, *coeffs):
    return FieldElement(field, [Fraction(c) for c in coeffs])


@pytest.fixture
def q2():
    return sqrt_field(2)


@pytest.fixture
def q5():
    return sqrt_field(5)


@pytest.fixture
def qphi():
    return golden_field()
