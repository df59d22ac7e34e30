"""Deciding equality of trace ranges and checking isomorphism certificates.

Nothing here searches for isomorphisms.  ``compare_invariants`` only reports a
verdict of ``not_isomorphic`` when a computable invariant differs, and a
verdict of ``isomorphic_certified`` needs an explicit certificate that passes
``verify_iso_certificate``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from sympy import primefactors

from .algebra.fields import FieldElement
from .algebra.intmat import IntMatrix, lattice_basis, rational_coordinates, solve_integer_matrix
from .dimgroup import GroupElement
from .errors import FieldMismatch, MalformedCertificate, RationalTime, UnsupportedUnits
from .invariant import ElliottInvariant, InvElement, TraceRangeModule, inv_trace, trace_range


class Verdict(str, enum.Enum):
    ISOMORPHIC_CERTIFIED = "isomorphic_certified"
    NOT_ISOMORPHIC = "not_isomorphic"
    UNDECIDED = "undecided"


@dataclass
class Condition:
    name: str
    passed: bool | None
    detail: str = ""


@dataclass
class ComparisonReport:
    verdict: Verdict
    reasons: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "conditions": {c.name: c.passed for c in self.reasons},
            "reasons": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.reasons],
        }


# trace ranges ----------------------------------------------------------------

def _common_denominator(elems: Sequence[FieldElement]) -> int:
    d = 1
    for e in elems:
        for c in e.coeffs:
            d = lcm(d, c.denominator)
    return d


def _unit_support(unit: FieldElement) -> frozenset | None:
    """Prime support of a rational-integer unit; None for an irrational unit."""
    if not unit.is_rational():
        return None
    q = unit.to_fraction()
    if q.denominator != 1 or q < 1:
        return None
    return frozenset(primefactors(int(q)))


class _Lattice:
    """Z-span of field elements, stored as an HNF basis of scaled coordinate vectors."""

    def __init__(self, gens: Sequence[FieldElement]):
        self.scale = _common_denominator(gens)
        self.dim = gens[0].field.degree
        self.basis = lattice_basis([[int(c * self.scale) for c in g.coeffs] for g in gens], self.dim)

    def coordinates(self, x: FieldElement) -> list[Fraction] | None:
        return rational_coordinates(self.basis, [c * self.scale for c in x.coeffs])


def _member(x: FieldElement, lattice: _Lattice, support: frozenset) -> bool:
    coords = lattice.coordinates(x)
    if coords is None:
        return False
    for c in coords:
        if any(p not in support for p in primefactors(c.denominator)):
            return False
    return True


def trace_range_equal(r1: TraceRangeModule, r2: TraceRangeModule) -> bool:
    if r1.field != r2.field:
        raise FieldMismatch(f"{r1.field!r} vs {r2.field!r}")
    l1, l2 = _Lattice(r1.gens), _Lattice([g.promote(r1.field) for g in r2.gens])
    s1, s2 = _unit_support(r1.unit), _unit_support(r2.unit)
    if s1 is None or s2 is None:
        # only literally identical modules can be decided with an irrational unit
        if r1.unit == r2.unit and l1.scale == l2.scale and l1.basis == l2.basis:
            return True
        raise UnsupportedUnits(f"irrational denominator unit ({r1.unit!r}, {r2.unit!r})")
    if s1 != s2:
        # 1 lies in both, and only primes of the unit can be inverted
        return False
    return all(_member(g, l2, s2) for g in r1.gens) and all(_member(g, l1, s1) for g in r2.gens)


def range_contains(r: TraceRangeModule, x: FieldElement) -> bool:
    support = _unit_support(r.unit)
    if support is None:
        raise UnsupportedUnits(f"irrational denominator unit {r.unit!r}")
    return _member(x.promote(r.field), _Lattice(r.gens), support)


def rotation_isomorphic(t1: FieldElement, t2: FieldElement) -> bool:
    """A_{t1} and A_{t2} agree iff t1 = +-t2 modulo Z."""
    for t in (t1, t2):
        if t.is_rational():
            raise RationalTime("rotation algebras need irrational angles")
    if t1.field != t2.field:
        raise FieldMismatch(f"{t1.field!r} vs {t2.field!r}")
    return (t1 - t2).is_integer() or (t1 + t2).is_integer()


# certificates ----------------------------------------------------------------

@dataclass(frozen=True)
class IsoCertificate:
    """Candidate map Z + G1 -> Z + G2.

    On the dimension-group summand a class at source level p*j with vector v is
    sent to target level q*j with vector ``block @ v``.  The Z generator goes to
    ``unit_block`` times itself plus the level-0 class ``mixing_column``.
    """

    block: IntMatrix
    source_level_offset: int = 1
    target_level_offset: int = 1
    mixing_column: tuple | None = None
    unit_block: int = 1
    assume_measures_agree: bool = True

    def mixing(self) -> tuple:
        return self.mixing_column if self.mixing_column is not None else (0,) * self.block.rows


def identity_certificate(inv: ElliottInvariant) -> IsoCertificate:
    return IsoCertificate(IntMatrix.identity(inv.base_group.k))


def compose_certificates(first: IsoCertificate, second: IsoCertificate) -> IsoCertificate:
    """Certificate of ``second`` after ``first``."""
    b2c1 = second.block @ list(first.mixing())
    return IsoCertificate(
        second.block @ first.block,
        first.source_level_offset * second.source_level_offset,
        first.target_level_offset * second.target_level_offset,
        tuple(x + first.unit_block * y for x, y in zip(b2c1, second.mixing())),
        first.unit_block * second.unit_block,
        first.assume_measures_agree and second.assume_measures_agree,
    )


def _check_shapes(inv1: ElliottInvariant, inv2: ElliottInvariant, cert: IsoCertificate) -> None:
    k1, k2 = inv1.base_group.k, inv2.base_group.k
    if (cert.block.rows, cert.block.cols) != (k2, k1):
        raise MalformedCertificate(f"block must be {k2}x{k1}, got {cert.block.rows}x{cert.block.cols}")
    if cert.source_level_offset < 1 or cert.target_level_offset < 1:
        raise MalformedCertificate("level offsets must be positive")
    if len(cert.mixing()) != k2:
        raise MalformedCertificate(f"mixing column needs {k2} entries")


def apply_certificate(inv1: ElliottInvariant, inv2: ElliottInvariant, cert: IsoCertificate,
                      e: InvElement) -> InvElement:
    _check_shapes(inv1, inv2, cert)
    p, q = cert.source_level_offset, cert.target_level_offset
    j = -(-e.z.level // p)
    v = inv1.base_group.lift(e.z, p * j)
    image = GroupElement(q * j, tuple(cert.block @ list(v)))
    g2 = inv2.base_group
    mixed = g2.add(image, g2.scale(e.n, GroupElement(0, cert.mixing())))
    return InvElement(cert.unit_block * e.n, mixed)


def _limit_zero(m: IntMatrix, diff: IntMatrix) -> bool:
    """Every column of diff is zero in the direct limit of m."""
    return (m ** m.rows @ diff).is_zero()


def _find_inverse(m1: IntMatrix, m2: IntMatrix, cert: IsoCertificate, bound: int):
    b, p, q = cert.block, cert.source_level_offset, cert.target_level_offset
    for s in range(bound + 1):
        x = solve_integer_matrix(b, m2 ** (q * s))
        if x is None:
            continue
        if not _limit_zero(m1, x @ b - m1 ** (p * s)):
            continue
        if not _limit_zero(m1, x @ (m2 ** q) - (m1 ** p) @ x):
            continue
        return s, x
    return None


def verify_iso_certificate(inv1: ElliottInvariant, inv2: ElliottInvariant,
                           cert: IsoCertificate) -> ComparisonReport:
    _check_shapes(inv1, inv2, cert)
    g1, g2 = inv1.base_group, inv2.base_group
    m1, m2 = g1.matrix, g2.matrix
    p, q = cert.source_level_offset, cert.target_level_offset
    reasons = []

    well_defined = _limit_zero(m2, cert.block @ (m1 ** p) - (m2 ** q) @ cert.block)
    reasons.append(Condition("intertwines_connecting_maps", well_defined,
                             "block * M1^p agrees with M2^q * block in the limit"))

    bound = 2 * max(g1.k, g2.k)
    inverse = _find_inverse(m1, m2, cert, bound) if well_defined else None
    unit_ok = cert.unit_block in (1, -1)
    group_iso = well_defined and unit_ok and inverse is not None
    detail = (f"inverse block found with shift {inverse[0]}" if inverse
              else f"no integer inverse block with shift <= {bound}")
    reasons.append(Condition("group_isomorphism", group_iso, detail))

    image_unit = apply_certificate(inv1, inv2, cert, inv1.order_unit())
    unit_preserved = image_unit.n == 1 and g2.is_zero(image_unit.z)
    reasons.append(Condition("order_unit_preserved", unit_preserved,
                             f"(1, 0) maps to ({image_unit.n}, level {image_unit.z.level} {list(image_unit.z.vec)})"))

    generators = [inv1.order_unit()] + [InvElement(0, b) for b in g1.basis()]
    try:
        traces_ok = all(inv_trace(inv2, apply_certificate(inv1, inv2, cert, e)) == inv_trace(inv1, e)
                        for e in generators)
        trace_detail = f"checked on {len(generators)} generators"
    except FieldMismatch as exc:
        traces_ok, trace_detail = False, f"trace fields differ: {exc}"
    reasons.append(Condition("trace_compatible", traces_ok, trace_detail))

    reasons.append(Condition("invariant_measures_assumed", cert.assume_measures_agree,
                             "M(Y,T) = M(Y,T^t) for both flows is a hypothesis, not checked"))

    passed = group_iso and unit_preserved and traces_ok and cert.assume_measures_agree
    return ComparisonReport(Verdict.ISOMORPHIC_CERTIFIED if passed else Verdict.UNDECIDED, reasons)


def compare_invariants(inv1: ElliottInvariant, inv2: ElliottInvariant) -> ComparisonReport:
    reasons = []
    differ = False

    r1, r2 = inv1.rank(), inv2.rank()
    reasons.append(Condition("k0_rational_rank_equal", r1 == r2, f"{r1} vs {r2}"))
    differ |= r1 != r2
    reasons.append(Condition("torsion_free", True, "direct limits of free groups have no torsion"))
    reasons.append(Condition("k1_matches_k0", True, "K_1 is isomorphic to K_0 on both sides"))

    try:
        same_range = trace_range_equal(trace_range(inv1), trace_range(inv2))
        reasons.append(Condition("trace_range_equal", same_range, "image of K_0 under the unique trace"))
        differ |= not same_range
    except (FieldMismatch, UnsupportedUnits) as exc:
        reasons.append(Condition("trace_range_equal", None, f"{exc.name}: {exc}"))

    reasons.append(Condition("certificate", None, "isomorphism needs a certificate; none supplied"))
    return ComparisonReport(Verdict.NOT_ISOMORPHIC if differ else Verdict.UNDECIDED, reasons)
