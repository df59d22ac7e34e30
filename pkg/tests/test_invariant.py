from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suspinv import (
    FIBONACCI,
    GroupElement,
    InvElement,
    Odometer,
    PointSystem,
    Positivity,
    inv_positive,
    inv_trace,
    suspension_invariant,
    trace_range,
)
from suspinv.errors import FieldMismatch, RationalTime
from suspinv.invariant import MINIMALITY_ASSUMPTION

from conftest import elem, sqrt_field


def test_point_system_invariant(q2):
    inv = suspension_invariant(PointSystem(), q2.gen)
    assert inv.rank() == 2
    assert inv.k1_descriptor == "isomorphic_to_k0"
    assert inv.k0_descriptor["summands"] == ["Z", "dimension_group"]
    for n, m in [(0, 1), (3, -2), (-5, 7)]:
        assert inv_trace(inv, inv.element(n, 0, (m,))) == n + m * q2.gen
    assert MINIMALITY_ASSUMPTION in inv.assumptions


@pytest.mark.parametrize("t", [0, Fraction(1, 2), Fraction(-7, 3), 5])
def test_rational_time_rejected(t):
    with pytest.raises(RationalTime):
        suspension_invariant(FIBONACCI, t)


def test_odometer_over_sqrt2(q2):
    inv = suspension_invariant(Odometer((2,)), q2.gen)
    assert inv.trace_field == q2
    assert inv.rank() == 2
    r = trace_range(inv)
    assert r.unit == 2
    assert list(r.gens) == [q2.one(), q2.gen]


def test_fibonacci_needs_compatible_field(q2):
    with pytest.raises(FieldMismatch):
        suspension_invariant(FIBONACCI, q2.gen)


def test_inv_trace_examples(qphi):
    inv = suspension_invariant(FIBONACCI, qphi.gen)
    assert inv_trace(inv, inv.order_unit()) == 1
    assert inv_trace(inv, InvElement(0, GroupElement(0, (1, 0)))) == 1


def test_inv_positive_examples(q2):
    inv = suspension_invariant(PointSystem(), q2.gen)
    assert inv_positive(inv, inv.element(0)) == Positivity.ZERO
    assert inv_positive(inv, inv.element(1, 0, (-1,))) == Positivity.NOT_POSITIVE
    assert inv_positive(inv, inv.element(-1, 0, (1,))) == Positivity.STRICTLY_POSITIVE


def test_trace_range_examples(q2, q5):
    r = trace_range(suspension_invariant(PointSystem(), q2.gen))
    assert r.unit == 1 and list(r.gens) == [q2.one(), q2.gen]
    r = trace_range(suspension_invariant(FIBONACCI, q5.gen))
    assert list(r.gens) == [q5.one(), elem(q5, Fraction(5, 2), Fraction(-1, 2)),
                            elem(q5, Fraction(-5, 2), Fraction(3, 2))]
    # unimodular incidence: no denominators
    assert r.unit == 1 and r.finitely_generated


@settings(max_examples=40, deadline=None)
@given(st.integers(-20, 20), st.integers(-20, 20))
def test_order_unit_trace_is_one(a, b):
    k = sqrt_field(3)
    t = elem(k, a, b) if b else elem(k, a, 1)
    for system in (PointSystem(), Odometer((2, 3))):
        inv = suspension_invariant(system, t)
        assert inv_trace(inv, inv.order_unit()) == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(-9, 9), st.integers(0, 3), st.tuples(st.integers(-9, 9), st.integers(-9, 9)),
       st.integers(-9, 9), st.integers(0, 3), st.tuples(st.integers(-9, 9), st.integers(-9, 9)))
def test_inv_trace_additive(n1, l1, v1, n2, l2, v2):
    k = sqrt_field(5)
    inv = suspension_invariant(FIBONACCI, k.gen)
    a, b = inv.element(n1, l1, v1), inv.element(n2, l2, v2)
    assert inv_trace(inv, inv.add(a, b)) == inv_trace(inv, a) + inv_trace(inv, b)
