"""Number fields, signs, normal forms and Perron data.

Oracles: sympy for SNF invariants and minimal polynomials, mpmath at 60 digits
for signs of field elements.
"""

import random
from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from suspinv import (
    QQ,
    IntMatrix,
    check_primitive,
    fe_arith,
    fe_sign,
    field_from_poly,
    hermite_normal_form,
    perron_data,
    smith_normal_form,
)
from suspinv.algebra.fields import find_embedding
from suspinv.algebra.intmat import diagonal, lattice_basis, solve_integer
from suspinv.algebra.perron import charpoly
from suspinv.errors import DivisionByZero, FieldMismatch, NotIsolating, NotPrimitive, NotSquare, Reducible

from conftest import elem, golden_field, sqrt_field

mpmath.mp.dps = 60

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


# fields -------------------------------------------------------------------------

def test_field_from_poly_examples():
    k = field_from_poly([-2, 0, 1], (1, 2))
    assert k.degree == 2
    assert float(k.gen) == pytest.approx(2 ** 0.5)
    phi = field_from_poly([-1, -1, 1], (1, 2))
    assert float(phi.gen) == pytest.approx((1 + 5 ** 0.5) / 2)
    with pytest.raises(Reducible):
        field_from_poly([-1, 0, 1], (0, 2))


def test_interval_must_isolate_one_root():
    with pytest.raises(NotIsolating):
        field_from_poly([-2, 0, 1], (-2, 2))
    with pytest.raises(NotIsolating):
        field_from_poly([-2, 0, 1], (2, 3))


def test_cubic_field():
    k = field_from_poly([-2, 0, 0, 1], (1, 2))
    c = k.gen
    assert c * c * c == 2
    assert (c ** -1) * c == 1


def test_fe_arith_examples(qphi):
    phi = qphi.gen
    assert fe_arith("mul", phi, phi) == phi + 1
    assert fe_arith("div", qphi.one(), phi) == phi - 1
    assert fe_arith("add", phi, qphi.zero()) == phi
    assert fe_arith("sub", phi, phi).is_zero()
    with pytest.raises(DivisionByZero):
        fe_arith("div", phi, qphi.zero())


def test_field_mismatch(q2, q5):
    with pytest.raises(FieldMismatch):
        q2.gen + q5.gen
    # rationals mix with anything
    assert (q2.gen + QQ(Fraction(1, 2))).coeffs == (Fraction(1, 2), 1)


def test_fe_sign_examples(q2, qphi):
    assert fe_sign(q2.zero()) == 0
    assert fe_sign(q2.gen - Fraction(7, 5)) == 1
    theta = qphi.gen
    assert fe_sign(theta * theta - theta - 1) == 0
    assert fe_sign(1 - q2.gen) == -1


def _mp_value(e, root):
    return sum(mpmath.mpf(c.numerator) / c.denominator * root ** i for i, c in enumerate(e.coeffs))


@settings(max_examples=200, deadline=None)
@given(a=rationals, b=rationals, c=rationals, d=rationals)
def test_field_axioms_and_sign_oracle(a, b, c, d):
    k = sqrt_field(3)
    x, y = elem(k, a, b), elem(k, c, d)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    if not y.is_zero():
        assert (x / y) * y == x
    root = mpmath.sqrt(3)
    v = _mp_value(x - y, root)
    expected = 0 if (x - y).is_zero() else (1 if v > 0 else -1)
    assert fe_sign(x - y) == expected


@settings(max_examples=100, deadline=None)
@given(a=rationals, b=rationals, c=rationals)
def test_cubic_signs_match_mpmath(a, b, c):
    k = field_from_poly([-2, 0, 0, 1], (1, 2))
    x = elem(k, a, b, c)
    v = _mp_value(x, mpmath.cbrt(2))
    expected = 0 if x.is_zero() else (1 if v > 0 else -1)
    assert fe_sign(x) == expected


def test_embedding_golden_into_sqrt5(qphi, q5):
    image = find_embedding(qphi, q5)
    assert image == elem(q5, Fraction(1, 2), Fraction(1, 2))
    assert find_embedding(q5, sqrt_field(2)) is None


def test_field_equality_ignores_interval_choice():
    assert field_from_poly([-2, 0, 1], (1, 2)) == field_from_poly([-2, 0, 1], (Fraction(7, 5), 3))
    assert field_from_poly([-2, 0, 1], (1, 2)) != field_from_poly([-2, 0, 1], (-2, -1))


# normal forms ---------------------------------------------------------------------

def M(rows):
    return IntMatrix.from_rows(rows)


def test_snf_examples():
    u, d, v = smith_normal_form(IntMatrix.identity(3))
    assert u == d == v == IntMatrix.identity(3)
    assert diagonal(smith_normal_form(M([[2, 0], [0, 3]]))[1]) == [1, 6]
    assert diagonal(smith_normal_form(M([[2, 4], [6, 8]]))[1]) == [2, 4]


def _check_snf(m):
    u, d, v = smith_normal_form(m)
    assert u @ m @ v == d
    assert abs(u.det()) == 1 and abs(v.det()) == 1
    diag = diagonal(d)
    for i in range(d.rows):
        for j in range(d.cols):
            if i != j:
                assert d[i, j] == 0
    assert all(x >= 0 for x in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0
    return diag


def test_snf_matches_sympy_invariants():
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf
    rng = random.Random(7)
    for _ in range(30):
        rows = [[rng.randint(-6, 6) for _ in range(4)] for _ in range(3)]
        diag = _check_snf(M(rows))
        ref = sympy_snf(sympy.Matrix(rows), domain=sympy.ZZ)
        assert diag == sorted((abs(int(ref[i, i])) for i in range(3)), key=lambda x: (x == 0, x))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-20, 20), min_size=3, max_size=3), min_size=2, max_size=4))
def test_snf_properties(rows):
    _check_snf(M(rows))


def test_hnf_examples():
    assert hermite_normal_form(IntMatrix.identity(2)) == IntMatrix.identity(2)
    assert hermite_normal_form(M([[1, 1], [0, 2]])) == M([[1, 1], [0, 2]])
    assert hermite_normal_form(M([[1, -1], [0, 2]])) == M([[1, 1], [0, 2]])
    assert hermite_normal_form(M([[2, 1], [0, 1]])) == M([[2, 0], [0, 1]])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=3),
       st.integers(0, 2**32))
def test_hnf_lattice_invariant(rows, seed):
    rng = random.Random(seed)
    m = M(rows)
    mixed = [list(r) for r in rows]
    for _ in range(10):
        i, j = rng.sample(range(3), 2)
        c = rng.randint(-3, 3)
        mixed[i] = [a + c * b for a, b in zip(mixed[i], mixed[j])]
    assert hermite_normal_form(M(mixed)) == hermite_normal_form(m)


def test_lattice_basis_and_solve():
    assert lattice_basis([[2, 0], [0, 2], [1, 1]], 2) == [[1, 1], [0, 2]]
    assert solve_integer(M([[2, 0], [0, 3]]), [4, 9]) == [2, 3]
    assert solve_integer(M([[2, 0], [0, 3]]), [1, 0]) is None


# Perron data ---------------------------------------------------------------------

def test_charpoly_matches_sympy():
    rng = random.Random(3)
    x = sympy.Symbol("x")
    for _ in range(20):
        rows = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        ref = sympy.Matrix(rows).charpoly(x).all_coeffs()[::-1]
        assert list(charpoly(M(rows))) == [int(c) for c in ref]


def test_check_primitive_examples():
    assert check_primitive(M([[1, 1], [1, 0]]))
    assert not check_primitive(IntMatrix.identity(2))
    assert check_primitive(M([[2]]))
    assert not check_primitive(M([[0, 1], [1, 0]]))


def test_perron_examples():
    field, lam, left, right = perron_data(M([[2]]))
    assert field.is_rational and lam == 2 and left == [1] and right == [1]
    field, lam, left, right = perron_data(M([[1, 1], [1, 0]]))
    assert field == golden_field()
    assert lam == field.gen
    with pytest.raises(NotPrimitive):
        perron_data(M([[0, 1], [1, 0]]))
    with pytest.raises(NotSquare):
        perron_data(M([[1, 1]]))


@pytest.mark.parametrize("rows", [
    [[1, 1], [1, 0]],
    [[2, 1], [1, 1]],
    [[1, 1, 0], [0, 1, 1], [1, 0, 0]],
    [[1, 2, 0], [1, 0, 1], [1, 1, 1]],
    [[3, 1], [1, 2]],
    [[1, 1], [1, 1]],
])
def test_perron_vectors_are_exact_eigenvectors(rows):
    m = M(rows)
    field, lam, left, right = perron_data(m)
    k = m.rows
    for i in range(k):
        assert sum((right[j] * m[i, j] for j in range(k)), field.zero()) == lam * right[i]
        assert sum((left[j] * m[j, i] for j in range(k)), field.zero()) == lam * left[i]
    assert all(v.sign() > 0 for v in left + right)
    ref = max(abs(complex(e)) for e in sympy.Matrix(rows).eigenvals())
    assert float(lam) == pytest.approx(ref)


@settings(max_examples=150, deadline=None)
@given(a=rationals, b=rationals, c=rationals, d=rationals)
def test_sign_compatible_with_arithmetic(a, b, c, d):
    k = golden_field()
    x, y = elem(k, a, b), elem(k, c, d)
    assert fe_sign(x * x) >= 0
    if fe_sign(x) == 1 and fe_sign(y) == 1:
        assert fe_sign(x + y) == 1
        assert fe_sign(x * y) == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=1, max_size=4))
def test_hnf_idempotent(rows):
    h = hermite_normal_form(M(rows))
    assert hermite_normal_form(h) == h


@settings(max_examples=80, deadline=None)
@given(st.lists(st.lists(st.integers(0, 2), min_size=3, max_size=3), min_size=3, max_size=3))
def test_primitivity_transpose_invariant(rows):
    m = M(rows)
    assert check_primitive(m) == check_primitive(m.transpose())
