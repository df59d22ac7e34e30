"""Topological entropy of time-t maps of suspension flows.

Exact side: h(T^t) = |t| h(S), with h(S) = log(lambda) for a primitive shift
of finite type and 0 for a primitive substitution.  Numerical side: a
deterministic count of (n, eps)-separated points of the suspension, used to
cross-check the scaling law on small examples.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import factorint

from .algebra.fields import QQ, FieldElement, find_embedding
from .algebra.intmat import IntMatrix
from .algebra.perron import check_primitive, perron_data
from .dimgroup import dg_from_diagram
from .errors import HorizonTooLarge, IllegalWord, NotPrimitive
from .systems import SFT, Odometer, PointSystem, Substitution, factors, substitution_to_bv, validate_substitution

DEFAULT_BUDGET = 10**7


def _fraction(x) -> Fraction:
    if isinstance(x, FieldElement):
        return x.to_fraction()
    return Fraction(x)


@dataclass(frozen=True, eq=False)
class ExactEntropy:
    """coefficient * log(base_lambda); the coefficient may be an irrational |t| * c."""

    coefficient: object
    base_lambda: object

    @property
    def is_zero(self) -> bool:
        if _is_zero(self.coefficient):
            return True
        return _as_element(self.base_lambda) == 1

    def __float__(self):
        if self.is_zero:
            return 0.0
        return float(self.coefficient) * math.log(float(self.base_lambda))

    def normalized(self):
        """(coefficient, base) with a rational base reduced to its smallest rational root."""
        if self.is_zero:
            return Fraction(0), Fraction(1)
        c, b = self.coefficient, _as_element(self.base_lambda)
        if not b.is_rational():
            return c, b
        q = b.to_fraction()
        num, den = factorint(q.numerator), factorint(q.denominator)
        k = math.gcd(*num.values(), *den.values()) if (num or den) else 1
        if k <= 1:
            return c, q
        root = Fraction(math.prod(p ** (e // k) for p, e in num.items()),
                        math.prod(p ** (e // k) for p, e in den.items()))
        return c * k, root

    def same_as(self, other: "ExactEntropy") -> bool | None:
        """Exact comparison; None when the bases live in unrelated fields."""
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        (c1, b1), (c2, b2) = self.normalized(), other.normalized()
        b1, b2 = _as_element(b1), _as_element(b2)
        try:
            if b1 != b2:
                return None if not (b1.is_rational() and b2.is_rational()) else False
            return _as_element(c1) == _as_element(c2)
        except Exception:
            return None


def _as_element(x) -> FieldElement:
    return x if isinstance(x, FieldElement) else QQ(Fraction(x))


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, FieldElement) else x == 0


def _abs(t):
    if isinstance(t, FieldElement):
        if t.is_rational():
            return abs(t.to_fraction())
        return abs(t)
    return abs(Fraction(t))


def suspension_entropy(h_base: ExactEntropy, t) -> ExactEntropy:
    coef = _abs(t) * h_base.coefficient
    if isinstance(coef, FieldElement) and coef.is_rational():
        coef = coef.to_fraction()
    return ExactEntropy(coef, h_base.base_lambda)


def sft_entropy(adjacency: IntMatrix) -> ExactEntropy:
    if not check_primitive(adjacency):
        raise NotPrimitive("adjacency matrix is not primitive")
    field, lam, _, _ = perron_data(adjacency)
    base = lam.to_fraction() if field.is_rational else lam
    return ExactEntropy(Fraction(1), base)


def substitution_entropy(s: Substitution) -> ExactEntropy:
    # factor complexity of a primitive substitution is linear, so entropy vanishes
    validate_substitution(s)
    return ExactEntropy(Fraction(0), Fraction(1))


def base_entropy(system) -> ExactEntropy:
    if isinstance(system, SFT):
        return sft_entropy(system.adjacency)
    if isinstance(system, Substitution):
        return substitution_entropy(system)
    if isinstance(system, (Odometer, PointSystem)):
        # equicontinuous systems
        return ExactEntropy(Fraction(0), Fraction(1))
    raise TypeError(f"no entropy rule for {type(system).__name__}")


class MinimalityStatus(str, enum.Enum):
    NON_MINIMAL = "non_minimal"
    UNKNOWN_GENERIC_MINIMAL = "unknown_generic_minimal"


def time_t_minimality_status(t) -> MinimalityStatus:
    t = _as_element(t)
    if t.is_rational():
        return MinimalityStatus.NON_MINIMAL
    return MinimalityStatus.UNKNOWN_GENERIC_MINIMAL


# invariant measure of cylinders ---------------------------------------------------

def block_substitution_matrix(s: Substitution, length: int):
    """States and matrix of the induced substitution on length-``length`` factors."""
    states = sorted(factors(s, length))
    index = {u: i for i, u in enumerate(states)}
    k = len(states)
    rows = [[0] * k for _ in range(k)]
    for j, u in enumerate(states):
        image = s.apply(u)
        for i in range(len(s.rules[u[0]])):
            rows[index[image[i:i + length]]][j] += 1
    return states, IntMatrix.from_rows(rows, k)


def cylinder_measure(system, word: Sequence) -> FieldElement:
    """Measure of the cylinder [word] under the unique invariant measure (Parry measure for SFTs)."""
    word = tuple(word)
    if isinstance(system, PointSystem):
        if word:
            raise IllegalWord("the one-point system has only the empty cylinder")
        return QQ.one()
    if isinstance(system, Odometer):
        cycle = system.base_cycle
        m = Fraction(1)
        for i, d in enumerate(word):
            b = cycle[i % len(cycle)]
            if not (isinstance(d, int) and 0 <= d < b):
                raise IllegalWord(f"digit {d!r} at position {i} outside base {b}")
            m /= b
        return QQ(m)
    if isinstance(system, Substitution):
        return _substitution_cylinder(system, word)
    if isinstance(system, SFT):
        return _parry_cylinder(system, word)
    raise TypeError(f"no measure for {type(system).__name__}")


def _substitution_cylinder(s: Substitution, word: tuple) -> FieldElement:
    g = dg_from_diagram(substitution_to_bv(s))
    if not word:
        return g.field.one()
    if word not in factors(s, len(word)):
        raise IllegalWord(f"{''.join(map(str, word))!r} is not a factor")
    states, m = block_substitution_matrix(s, len(word))
    field, _, _, right = perron_data(m)
    total = sum(right, field.zero())
    freq = right[states.index(word)] / total
    if field != g.field:
        image = find_embedding(field, g.field)
        if image is None:
            raise ArithmeticError("block substitution field does not embed in the trace field")
        freq = freq.embed(image)
    return freq


def sft_edges(a: IntMatrix) -> list[tuple[int, int]]:
    """Edges of the edge shift, indexed row-major with multiplicity: edge -> (source, target)."""
    return [(i, j) for i in range(a.rows) for j in range(a.cols) for _ in range(a[i, j])]


def _parry_cylinder(sft: SFT, word: tuple) -> FieldElement:
    a = sft.adjacency
    field, lam, left, right = perron_data(a)
    if not word:
        return field.one()
    edges = sft_edges(a)
    try:
        path = [edges[e] for e in word]
    except (IndexError, TypeError):
        raise IllegalWord(f"unknown edge in {list(word)}") from None
    if any(path[i][1] != path[i + 1][0] for i in range(len(path) - 1)):
        raise IllegalWord(f"{list(word)} is not a path")
    norm = sum((l * r for l, r in zip(left, right)), field.zero())
    return left[path[0][0]] * right[path[-1][1]] / (norm * lam ** len(path))


def suspension_measure(system, cylinder: Sequence, interval) -> FieldElement:
    a, b = (Fraction(x) for x in interval)
    if not 0 <= a <= b <= 1:
        raise ValueError("need 0 <= a <= b <= 1")
    return cylinder_measure(system, cylinder) * (b - a)


# separated-set estimator ---------------------------------------------------------

def separation_radius(eps: Fraction) -> int:
    """Largest r with 2^-r >= eps: points differing within |i| <= r are eps-apart."""
    r = 0
    while Fraction(1, 2 ** (r + 1)) >= eps:
        r += 1
    return r


def fiber_levels(eps: Fraction, t: Fraction) -> list[Fraction]:
    """Fiber heights pairwise >= eps apart on the circle whose orbits under +t avoid the seam."""
    m = int(1 / eps)
    delta = Fraction(1, 2 * m * t.denominator)
    return [Fraction(i, m) + delta for i in range(m)]


def orbit_window(s: Fraction, t: Fraction, n: int, r: int) -> list[tuple[int, int]]:
    """Base coordinates seen by the first n points of the T^t orbit of height s, as merged intervals."""
    spans = sorted((math.floor(s + j * t) - r, math.floor(s + j * t) + r) for j in range(n))
    merged = []
    for lo, hi in spans:
        if merged and lo <= merged[-1][1] + 1:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return merged


def _count_sft(a: IntMatrix, window: list[tuple[int, int]]) -> int:
    k = a.rows
    reach_cache = {}

    def reach(g):
        if g not in reach_cache:
            p = a ** g
            reach_cache[g] = [[int(p[i, j] > 0) for j in range(k)] for i in range(k)]
        return reach_cache[g]

    x = [1] * k
    prev_hi = None
    for lo, hi in window:
        if prev_hi is not None:
            r = reach(lo - prev_hi - 1)
            x = [sum(x[u] * r[u][v] for u in range(k)) for v in range(k)]
        for _ in range(hi - lo + 1):
            x = [sum(x[u] * a[u, v] for u in range(k)) for v in range(k)]
        prev_hi = hi
    return sum(x)


def _count_substitution(s: Substitution, window: list[tuple[int, int]], budget: int) -> int:
    origin = window[0][0]
    length = window[-1][1] - origin + 1
    positions = [p - origin for lo, hi in window for p in range(lo, hi + 1)]
    words = factors(s, length)
    if len(words) > budget:
        raise HorizonTooLarge(f"{len(words)} words exceed the budget of {budget}")
    if len(positions) == length:
        return len(words)
    return len({tuple(w[p] for p in positions) for w in words})


def count_patterns(base, window: list[tuple[int, int]], budget: int = DEFAULT_BUDGET) -> int:
    """Number of distinct legal base patterns on a union of coordinate intervals."""
    if isinstance(base, PointSystem):
        return 1
    if isinstance(base, SFT):
        return _count_sft(base.adjacency, window)
    if isinstance(base, Substitution):
        return _count_substitution(base, window, budget)
    raise TypeError(f"cannot estimate entropy over {type(base).__name__}")


def separated_count(base, t, n: int, eps, budget: int = DEFAULT_BUDGET) -> int:
    """Size of the explicit (n, eps)-separated set for T^t built on the fiber levels."""
    t, eps = _fraction(t), Fraction(eps)
    r = separation_radius(eps)
    return sum(count_patterns(base, orbit_window(s, t, n, r), budget) for s in fiber_levels(eps, t))


@dataclass(frozen=True)
class EntropyEstimate:
    estimate: float
    naive: float
    n: int
    eps: Fraction
    t: Fraction
    count: int
    count_half: int


def estimate_suspension_entropy(base, t, n: int, eps, budget: int = DEFAULT_BUDGET) -> EntropyEstimate:
    """Growth rate of separated-set sizes between horizons ceil(n/2) and n.

    ``naive`` is (1/n) log N(n); ``estimate`` is the slope of log N between the
    two horizons, which cancels the horizon-independent factor contributed by
    the eps-window and the fiber levels.
    """
    t, eps = _fraction(t), Fraction(eps)
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 < eps < 1:
        raise ValueError("eps must lie in (0, 1)")
    if isinstance(base, SFT) and not check_primitive(base.adjacency):
        raise NotPrimitive("adjacency matrix is not primitive")
    big = separated_count(base, t, n, eps, budget)
    half = (n + 1) // 2
    if n >= 2:
        small = separated_count(base, t, half, eps, budget)
        slope = (math.log(big) - math.log(small)) / (n - half)
    else:
        small, slope = big, math.log(big) / n
    return EntropyEstimate(slope, math.log(big) / n, n, eps, t, big, small)


# explicit metric (used to validate the separated sets) -------------------------------

@dataclass(frozen=True)
class SuspensionPoint:
    """[x, s] with x known on coordinates origin .. origin + len(window) - 1."""

    window: tuple
    origin: int
    fiber: Fraction

    def symbol(self, i: int):
        return self.window[i - self.origin]


def base_distance(x: SuspensionPoint, y: SuspensionPoint, shift_x: int, shift_y: int, radius: int) -> Fraction:
    """2^-k with k the first |i| where S^shift_x x and S^shift_y y differ (searched up to radius)."""
    for k in range(radius + 1):
        for i in {k, -k}:
            if x.symbol(i + shift_x) != y.symbol(i + shift_y):
                return Fraction(1, 2**k)
    return Fraction(1, 2 ** (radius + 1))


def suspension_distance(x: SuspensionPoint, y: SuspensionPoint, time_t: Fraction, step: int, radius: int) -> Fraction:
    """Distance between T^(step*t) x and T^(step*t) y, minimised over seam representatives."""
    reps = []
    for p in (x, y):
        h = p.fiber + step * time_t
        shift, c = math.floor(h), h - math.floor(h)
        rs = [(shift, c)]
        if c == 0:
            rs.append((shift - 1, Fraction(1)))
        reps.append(rs)
    best = None
    for sx, cx in reps[0]:
        for sy, cy in reps[1]:
            d = max(base_distance(x, y, sx, sy, radius), abs(cx - cy))
            # the seam identifies (z, 1) with (Sz, 0): compare across it as well
            if abs(cx - cy) > Fraction(1, 2):
                if cx > cy:
                    d = min(d, max(base_distance(x, y, sx + 1, sy, radius), abs(cx - 1 - cy)))
                else:
                    d = min(d, max(base_distance(x, y, sx, sy + 1, radius), abs(cy - 1 - cx)))
            best = d if best is None else min(best, d)
    return best


def bowen_distance(x: SuspensionPoint, y: SuspensionPoint, t: Fraction, n: int, radius: int) -> Fraction:
    return max(suspension_distance(x, y, t, j, radius) for j in range(n))
