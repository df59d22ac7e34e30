"""Real algebraic number fields Q(theta) with exact arithmetic and signs.

A field is fixed by an irreducible integer polynomial together with a rational
interval isolating one real root.  Elements are coefficient vectors in the
power basis 1, theta, ..., theta^(n-1).  Signs are decided by refining the
isolating interval until an interval enclosure of the element excludes zero;
nonzero elements therefore always terminate.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from ..errors import DivisionByZero, FieldMismatch, NotIsolating, Reducible
from . import polys


class NumberField:
    """Q(theta) for the unique root theta of ``min_poly`` inside ``root_interval``."""

    __slots__ = ("min_poly", "root_interval", "_monic", "_tight")

    def __init__(self, min_poly: Sequence[int], root_interval: tuple, *, _checked: bool = False):
        ints = polys.to_integer_primitive(min_poly)
        lo, hi = Fraction(root_interval[0]), Fraction(root_interval[1])
        self.min_poly = ints
        self.root_interval = (lo, hi)
        self._monic = polys.monic(ints)
        # Tightest isolating interval found so far.  Any value stored here is a
        # valid isolating interval, so unsynchronised updates are harmless.
        self._tight = (lo, hi)
        if not _checked:
            _validate(self)

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def __eq__(self, other):
        if not isinstance(other, NumberField):
            return NotImplemented
        if self.degree == 1 and other.degree == 1:
            return True
        if self.min_poly != other.min_poly:
            return False
        if self.root_interval == other.root_interval:
            return True
        lo = max(self._tight[0], other._tight[0])
        hi = min(self._tight[1], other._tight[1])
        return lo < hi and polys.count_roots_open(self._monic, lo, hi) == 1

    def __hash__(self):
        return hash(self.min_poly) if self.degree > 1 else hash(1)

    def __repr__(self):
        return f"NumberField({list(self.min_poly)}, ({self.root_interval[0]}, {self.root_interval[1]}))"

    # elements -----------------------------------------------------------
    def element(self, coeffs: Iterable) -> "FieldElement":
        return FieldElement(self, coeffs)

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            return value.promote(self)
        return FieldElement(self, [value])

    @property
    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return FieldElement(self, [self.rational_root()])
        return FieldElement(self, [0, 1])

    def zero(self) -> "FieldElement":
        return FieldElement(self, [])

    def one(self) -> "FieldElement":
        return FieldElement(self, [1])

    def rational_root(self) -> Fraction:
        a0, a1 = self.min_poly
        return Fraction(-a0, a1)

    def refined_interval(self, width: Fraction) -> tuple[Fraction, Fraction]:
        lo, hi = self._tight
        while hi - lo > width:
            lo, hi = polys.bisect_root(self._monic, lo, hi)
            if lo == hi:
                break
        if hi - lo < self._tight[1] - self._tight[0]:
            self._tight = (lo, hi)
        return lo, hi

    def approx(self) -> float:
        if self.degree == 1:
            return float(self.rational_root())
        lo, hi = self.refined_interval(Fraction(1, 2**64))
        return float((lo + hi) / 2)


def _validate(field: NumberField) -> None:
    p = field.min_poly
    lo, hi = field.root_interval
    if len(p) < 2:
        raise ValueError("minimal polynomial must be nonconstant")
    if not lo < hi:
        raise ValueError("root interval needs lo < hi")
    if not is_irreducible(p):
        raise Reducible(f"{list(p)} factors over Q")
    n = polys.count_roots_open(field._monic, lo, hi)
    if n != 1:
        raise NotIsolating(f"({lo}, {hi}) contains {n} real roots of {list(p)}")


def is_irreducible(p: Sequence[int]) -> bool:
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed([int(c) for c in p])), x)
    return poly.degree() >= 1 and poly.is_irreducible


def field_from_poly(min_poly: Sequence[int], root_interval: tuple) -> NumberField:
    return NumberField(min_poly, root_interval)


QQ = NumberField((0, 1), (-1, 1), _checked=True)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as a rational")


class FieldElement:
    """Exact element of a NumberField; immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Iterable):
        n = field.degree
        cs = [_as_fraction(c) for c in coeffs]
        if len(cs) > n:
            cs = list(polys.rem(cs, field._monic))
        cs = cs + [Fraction(0)] * (n - len(cs))
        self.field = field
        self.coeffs = tuple(cs)

    # coercion -------------------------------------------------------------
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is irrational")
        return self.coeffs[0]

    def is_integer(self) -> bool:
        return self.is_rational() and self.coeffs[0].denominator == 1

    def promote(self, field: NumberField) -> "FieldElement":
        if field == self.field:
            return self if field is self.field else FieldElement(field, self.coeffs)
        if self.is_rational():
            return FieldElement(field, [self.coeffs[0]])
        raise FieldMismatch(f"{self.field!r} vs {field!r}")

    def _pair(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return self.field, other.coeffs
            if other.field.is_rational:
                return self.field, other.promote(self.field).coeffs
            if self.field.is_rational:
                return other.field, None
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        return self.field, (_as_fraction(other),)

    def _binary(self, other, fn, reflected=False):
        try:
            field, oc = self._pair(other)
        except TypeError:
            return NotImplemented
        if oc is None:  # self is rational, other lives in a larger field
            a = FieldElement(field, [self.coeffs[0]])
            return a._binary(other, fn, reflected)
        a, b = (oc, self.coeffs) if reflected else (self.coeffs, oc)
        return FieldElement(field, fn(field, a, b))

    def __add__(self, other):
        return self._binary(other, lambda f, a, b: polys.add(a, b))

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, lambda f, a, b: polys.sub(a, b))

    def __rsub__(self, other):
        return self._binary(other, lambda f, a, b: polys.sub(a, b), reflected=True)

    def __mul__(self, other):
        return self._binary(other, lambda f, a, b: polys.rem(polys.mul(a, b), f._monic))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, [-c for c in self.coeffs])

    def __pos__(self):
        return self

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero field element")
        g, s, _ = polys.xgcd(self.coeffs, self.field._monic)
        # min_poly irreducible, so g == 1
        return FieldElement(self.field, s)

    def __truediv__(self, other):
        if isinstance(other, FieldElement):
            field, oc = self._pair(other)
            return self.promote(field) * FieldElement(field, oc if oc is not None else other.coeffs).inverse()
        q = _as_fraction(other)
        if q == 0:
            raise DivisionByZero("division by zero")
        return FieldElement(self.field, [c / q for c in self.coeffs])

    def __rtruediv__(self, other):
        return FieldElement(self.field, [_as_fraction(other)]) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return self.coeffs == other.coeffs
            if self.is_rational() and other.is_rational():
                return self.coeffs[0] == other.coeffs[0]
            if self.field.is_rational or other.field.is_rational:
                return False
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        try:
            q = _as_fraction(other)
        except TypeError:
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == q

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field, self.coeffs))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    # real embedding ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def enclosure(self, width: Fraction) -> tuple[Fraction, Fraction]:
        """Rational interval containing the value, from a theta interval of the given width."""
        if self.field.is_rational:
            v = polys.evaluate(self.coeffs, self.field.rational_root())
            return v, v
        lo, hi = self.field.refined_interval(width)
        return polys.eval_interval(self.coeffs, lo, hi)

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.is_rational():
            return (self.coeffs[0] > 0) - (self.coeffs[0] < 0)
        width = self.field._tight[1] - self.field._tight[0]
        while True:
            a, b = self.enclosure(width)
            if a > 0:
                return 1
            if b < 0:
                return -1
            width /= 16

    def __float__(self):
        if self.is_rational():
            return float(self.coeffs[0])
        a, b = self.enclosure(Fraction(1, 2**80))
        return float((a + b) / 2)

    def __bool__(self):
        return not self.is_zero()

    def embed(self, image_of_gen: "FieldElement") -> "FieldElement":
        """Image under the field homomorphism sending theta to ``image_of_gen``."""
        target = image_of_gen.field
        acc = target.zero()
        for c in reversed(self.coeffs):
            acc = acc * image_of_gen + c
        return acc

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else f"{c}*θ" + (f"^{i}" if i > 1 else ""))
        return "FieldElement(" + (" + ".join(terms) or "0") + ")"


def fe_arith(op: str, a: FieldElement, b: FieldElement) -> FieldElement:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if (isinstance(b, FieldElement) and b.is_zero()) or b == 0:
            raise DivisionByZero("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def fe_sign(a) -> int:
    if isinstance(a, FieldElement):
        return a.sign()
    q = _as_fraction(a)
    return (q > 0) - (q < 0)


def real_root_index(field: NumberField) -> int:
    """Position of theta among the real roots of min_poly in increasing order."""
    lo, _ = field.root_interval
    return polys.count_roots(field._monic, polys.root_bound(field._monic) * -1, lo)


def find_embedding(src: NumberField, dst: NumberField) -> FieldElement | None:
    """Image of src's generator in dst, if src embeds in dst compatibly with both real roots.

    The candidate comes from sympy's subfield machinery and is then verified
    exactly here: it must be a root of src's polynomial lying in src's
    isolating interval.
    """
    if src == dst:
        return dst.gen
    if src.is_rational:
        return FieldElement(dst, [src.rational_root()])
    if dst.degree % src.degree:
        return None
    import sympy
    from sympy.polys.numberfields.subfield import field_isomorphism

    x = sympy.Symbol("x")
    a = sympy.CRootOf(sympy.Poly(list(reversed(src.min_poly)), x), real_root_index(src))
    b = sympy.CRootOf(sympy.Poly(list(reversed(dst.min_poly)), x), real_root_index(dst))
    coeffs = field_isomorphism(a, b)
    if coeffs is None:
        return None
    image = FieldElement(dst, [Fraction(int(c.p), int(c.q)) for c in reversed(coeffs)])
    if polys.evaluate(src._monic, image) != 0:
        return None
    lo, hi = src.root_interval
    if not ((image - lo).sign() > 0 and (image - hi).sign() < 0):
        return None
    return image
