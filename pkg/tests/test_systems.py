import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suspinv import (
    FIBONACCI,
    THUE_MORSE,
    IntMatrix,
    Odometer,
    Substitution,
    factor_complexity,
    odometer_to_bv,
    substitution_to_bv,
)
from suspinv.errors import AperiodicityCheckFailed, DegenerateBase, NotPrimitive
from suspinv.systems import factors, validate_substitution


def brute_factors(s, n, iterations=12):
    # factors of a long iterate of every letter
    out = set()
    for a in s.alphabet:
        w = s.iterate(a, iterations)
        out |= {w[i:i + n] for i in range(len(w) - n + 1)}
    return out


def test_fibonacci_diagram():
    d = substitution_to_bv(FIBONACCI)
    assert d.k == 2
    assert d.incidence == IntMatrix.from_rows([[1, 1], [1, 0]])
    assert d.unit_vec == (1, 1)


def test_thue_morse_diagram():
    assert substitution_to_bv(THUE_MORSE).incidence == IntMatrix.from_rows([[1, 1], [1, 1]])


def test_non_primitive_substitution():
    with pytest.raises(NotPrimitive):
        substitution_to_bv(Substitution("ab", {"a": "a", "b": "ab"}))


def test_periodic_substitution_caught():
    with pytest.raises(AperiodicityCheckFailed):
        validate_substitution(Substitution("ab", {"a": "ab", "b": "ab"}))


def test_odometer_examples():
    assert odometer_to_bv(Odometer((2,))).incidence == IntMatrix.from_rows([[2]])
    assert odometer_to_bv(Odometer((2, 3))).incidence == IntMatrix.from_rows([[6]])
    with pytest.raises(DegenerateBase):
        Odometer((1,))


def test_complexity_examples():
    assert factor_complexity(FIBONACCI, 1) == 2
    assert factor_complexity(FIBONACCI, 3) == 4
    assert factor_complexity(THUE_MORSE, 2) == 4


def test_fibonacci_is_sturmian():
    assert [factor_complexity(FIBONACCI, n) for n in range(1, 16)] == list(range(2, 17))


@pytest.mark.parametrize("s", [
    FIBONACCI,
    THUE_MORSE,
    Substitution("abc", {"a": "ab", "b": "c", "c": "a"}),
    Substitution("ab", {"a": "aab", "b": "ba"}),
])
def test_factors_match_long_iterates(s):
    for n in range(1, 9):
        assert factors(s, n) == brute_factors(s, n)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 10))
def test_complexity_nondecreasing(n):
    for s in (FIBONACCI, THUE_MORSE):
        assert factor_complexity(s, n) <= factor_complexity(s, n + 1)


@pytest.mark.parametrize("s", [FIBONACCI, THUE_MORSE, Substitution("abc", {"a": "abc", "b": "ac", "c": "b"})])
def test_column_sums_are_image_lengths(s):
    m = substitution_to_bv(s).incidence
    assert [sum(m.col(j)) for j in range(m.cols)] == [len(s.rules[a]) for a in s.alphabet]
