"""Elliott invariant of C*(Z, Y, T^t) for the suspension (Y, T) of a base system.

K_0 = K_1 = Z + K^0(X,S) with order unit (1, 0), and the unique trace pairs
(n, z) with n + t * tau(z).  Rational t is refused: the time-t map is then not
minimal and none of the order structure below applies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .algebra.fields import QQ, FieldElement, NumberField
from .dimgroup import DimensionGroup, GroupElement, Positivity, dg_from_diagram
from .errors import RationalTime
from .systems import to_diagram

MINIMALITY_ASSUMPTION = (
    "time-t map assumed minimal: t is irrational, and the exceptional set of t "
    "is countable but not characterised"
)


@dataclass(frozen=True, eq=False)
class TimeParam:
    value: FieldElement

    @classmethod
    def of(cls, t) -> "TimeParam":
        if isinstance(t, TimeParam):
            return t
        if isinstance(t, FieldElement):
            return cls(t)
        return cls(QQ(Fraction(t)))

    @property
    def is_rational(self) -> bool:
        return self.value.is_rational()

    @property
    def field(self) -> NumberField:
        return self.value.field


@dataclass(frozen=True)
class InvElement:
    n: int
    z: GroupElement


@dataclass(frozen=True, eq=False)
class TraceRangeModule:
    """The subgroup union_j unit^(-j) * span_Z(gens) of R; 1 is always a generator."""

    field: NumberField
    unit: FieldElement
    gens: tuple

    def __post_init__(self):
        gens = tuple(self.field(g) if not isinstance(g, FieldElement) else g.promote(self.field) for g in self.gens)
        if not any(g == 1 for g in gens):
            gens = (self.field.one(),) + gens
        object.__setattr__(self, "gens", gens)
        unit = self.unit if isinstance(self.unit, FieldElement) else self.field(self.unit)
        object.__setattr__(self, "unit", unit.promote(self.field))

    @property
    def finitely_generated(self) -> bool:
        return self.unit == 1


@dataclass(frozen=True, eq=False)
class ElliottInvariant:
    system: Any
    base_group: DimensionGroup
    t: TimeParam
    assumptions: tuple = field(default=(MINIMALITY_ASSUMPTION,))

    @property
    def trace_field(self) -> NumberField:
        return self.base_group.field

    @property
    def k0_descriptor(self) -> dict:
        return {"summands": ["Z", "dimension_group"], "order_unit": self.order_unit()}

    @property
    def k1_descriptor(self) -> str:
        # K_1 is abstractly the same group as K_0; it carries no order
        return "isomorphic_to_k0"

    def order_unit(self) -> InvElement:
        return InvElement(1, self.base_group.zero())

    def element(self, n: int, level: int = 0, vec=None) -> InvElement:
        g = self.base_group
        return InvElement(int(n), g.element(level, vec if vec is not None else (0,) * g.k))

    def add(self, a: InvElement, b: InvElement) -> InvElement:
        return InvElement(a.n + b.n, self.base_group.add(a.z, b.z))

    def neg(self, a: InvElement) -> InvElement:
        return InvElement(-a.n, -a.z)

    def rank(self) -> int:
        """Rank of K_0 tensor Q: 1 plus the eventual rank of the incidence matrix."""
        m = self.base_group.matrix
        p = m ** m.rows
        return 1 + _rank(p.tolist())


def _rank(rows) -> int:
    rows = [[Fraction(x) for x in r] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c] / rows[rank][c]
            rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def base_group(system) -> DimensionGroup:
    if isinstance(system, DimensionGroup):
        return system
    return dg_from_diagram(to_diagram(system))


def suspension_invariant(system, t) -> ElliottInvariant:
    t = TimeParam.of(t)
    if t.is_rational:
        raise RationalTime(f"t = {t.value.to_fraction()} is rational; the time-t map is not minimal")
    g = base_group(system)
    if g.field != t.field:
        # promote the trace field into t's field (raises FieldMismatch if impossible)
        g = g.over(t.field)
    return ElliottInvariant(system, g, t)


def inv_trace(inv: ElliottInvariant, e: InvElement) -> FieldElement:
    return inv.t.value * inv.base_group.trace(e.z) + e.n


def inv_positive(inv: ElliottInvariant, e: InvElement) -> Positivity:
    if e.n == 0 and inv.base_group.is_zero(e.z):
        return Positivity.ZERO
    if inv_trace(inv, e).sign() > 0:
        return Positivity.STRICTLY_POSITIVE
    return Positivity.NOT_POSITIVE


def trace_range(inv: ElliottInvariant) -> TraceRangeModule:
    g = inv.base_group
    field_ = inv.trace_field
    # a unimodular incidence matrix makes the limit Z^k itself, so no denominators
    unit = field_.one() if g.is_unimodular() else g.lam
    gens = [field_.one()] + [inv.t.value * g.trace(b) for b in g.basis()]
    return TraceRangeModule(field_, unit, tuple(gens))
