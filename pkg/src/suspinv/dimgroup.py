"""K^0(X,S) as the stationary direct limit Z^k -M-> Z^k -M-> ...

An element is a pair (level, vec); (n, v) and (n+1, M v) name the same class.
The unique trace is lambda^(-n) <w, v> for the left Perron vector w scaled so
the order unit has trace one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .algebra.fields import FieldElement, NumberField, find_embedding
from .algebra.intmat import IntMatrix
from .algebra.perron import perron_data
from .errors import DimensionMismatch, FieldMismatch
from .systems import StationaryBVDiagram


class Positivity(str, enum.Enum):
    STRICTLY_POSITIVE = "strictly_positive"
    ZERO = "zero"
    NOT_POSITIVE = "not_positive"


@dataclass(frozen=True)
class GroupElement:
    level: int
    vec: tuple

    def __post_init__(self):
        object.__setattr__(self, "vec", tuple(int(x) for x in self.vec))
        if self.level < 0:
            raise ValueError("level must be >= 0")

    def __neg__(self):
        return GroupElement(self.level, tuple(-x for x in self.vec))


@dataclass(frozen=True, eq=False)
class DimensionGroup:
    diagram: StationaryBVDiagram
    field: NumberField
    lam: FieldElement
    trace_vec: tuple

    @property
    def k(self) -> int:
        return self.diagram.k

    @property
    def matrix(self) -> IntMatrix:
        return self.diagram.incidence

    def is_unimodular(self) -> bool:
        return abs(self.matrix.det()) == 1

    def element(self, level: int, vec: Sequence[int]) -> GroupElement:
        if len(vec) != self.k:
            raise DimensionMismatch(f"expected {self.k} entries, got {len(vec)}")
        return GroupElement(level, tuple(vec))

    def zero(self) -> GroupElement:
        return GroupElement(0, (0,) * self.k)

    def basis(self) -> list[GroupElement]:
        return [GroupElement(0, tuple(int(i == j) for j in range(self.k))) for i in range(self.k)]

    def _check(self, a: GroupElement) -> None:
        if len(a.vec) != self.k:
            raise DimensionMismatch(f"element has {len(a.vec)} entries, group rank is {self.k}")

    def lift(self, a: GroupElement, level: int) -> tuple:
        """Representative vector of a at a (higher or equal) level."""
        self._check(a)
        if level < a.level:
            raise ValueError("cannot lower the level of an element")
        v = list(a.vec)
        for _ in range(level - a.level):
            v = self.matrix @ v
        return tuple(v)

    def add(self, a: GroupElement, b: GroupElement) -> GroupElement:
        n = max(a.level, b.level)
        return GroupElement(n, tuple(x + y for x, y in zip(self.lift(a, n), self.lift(b, n))))

    def sub(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.add(a, -b)

    def scale(self, c: int, a: GroupElement) -> GroupElement:
        return GroupElement(a.level, tuple(c * x for x in a.vec))

    def is_zero(self, a: GroupElement) -> bool:
        # ker M^j stabilises by j = k, so M^k v = 0 decides v ~ 0
        self._check(a)
        v = list(a.vec)
        for _ in range(self.k):
            if not any(v):
                return True
            v = self.matrix @ v
        return not any(v)

    def equal(self, a: GroupElement, b: GroupElement) -> bool:
        self._check(a)
        self._check(b)
        return self.is_zero(self.sub(a, b))

    def trace(self, a: GroupElement) -> FieldElement:
        self._check(a)
        total = self.field.zero()
        for w, x in zip(self.trace_vec, a.vec):
            if x:
                total = total + w * x
        if a.level:
            total = total * self.lam ** (-a.level)
        return total

    def positive(self, a: GroupElement) -> Positivity:
        if self.is_zero(a):
            return Positivity.ZERO
        if self.trace(a).sign() > 0:
            return Positivity.STRICTLY_POSITIVE
        return Positivity.NOT_POSITIVE

    def order_unit(self) -> GroupElement:
        return GroupElement(0, self.diagram.unit_vec)

    def over(self, field: NumberField) -> "DimensionGroup":
        """The same group with traces rewritten inside ``field``."""
        if field == self.field:
            return self
        image = find_embedding(self.field, field)
        if image is None:
            raise FieldMismatch(f"trace field {self.field!r} does not embed in {field!r}")
        return DimensionGroup(
            self.diagram,
            field,
            self.lam.embed(image),
            tuple(w.embed(image) for w in self.trace_vec),
        )


def dg_from_diagram(d: StationaryBVDiagram) -> DimensionGroup:
    field, lam, left, _right = perron_data(d.incidence)
    norm = sum((w * u for w, u in zip(left, d.unit_vec)), field.zero())
    trace_vec = tuple(w / norm for w in left)
    return DimensionGroup(d, field, lam, trace_vec)


def dg_equal(g: DimensionGroup, a: GroupElement, b: GroupElement) -> bool:
    return g.equal(a, b)


def dg_trace(g: DimensionGroup, a: GroupElement) -> FieldElement:
    return g.trace(a)


def dg_positive(g: DimensionGroup, a: GroupElement) -> Positivity:
    return g.positive(a)


def dg_order_unit(g: DimensionGroup) -> GroupElement:
    return g.order_unit()


def telescope(d: StationaryBVDiagram, p: int) -> StationaryBVDiagram:
    if p < 1:
        raise ValueError("telescoping depth must be >= 1")
    if p == 1:
        return d
    return StationaryBVDiagram(d.k, d.incidence ** p, d.unit_vec)
