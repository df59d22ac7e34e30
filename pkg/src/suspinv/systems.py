"""Base Cantor minimal systems and their stationary Bratteli-Vershik presentations.

Three kinds of base system are supported: primitive aperiodic substitutions,
(periodic multi-base) odometers and the one-point system.  Shifts of finite
type appear here only as entropy inputs; they have no diagram.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod

from .algebra.intmat import IntMatrix
from .algebra.perron import check_primitive
from .errors import AperiodicityCheckFailed, DegenerateBase, NotPrimitive, NotSquare

APERIODICITY_BOUND = 12


@dataclass(frozen=True)
class Substitution:
    alphabet: tuple
    rules: dict = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        rules = {a: tuple(w) for a, w in dict(self.rules).items()}
        object.__setattr__(self, "rules", rules)
        if set(rules) != set(self.alphabet):
            raise ValueError("rules must cover exactly the alphabet")
        for a, w in rules.items():
            if not w:
                raise ValueError(f"empty image for {a!r}")
            if any(c not in rules for c in w):
                raise ValueError(f"image of {a!r} leaves the alphabet")

    def apply(self, word) -> tuple:
        out = []
        for c in word:
            out.extend(self.rules[c])
        return tuple(out)

    def iterate(self, letter, times: int) -> tuple:
        w = (letter,)
        for _ in range(times):
            w = self.apply(w)
        return w

    def matrix(self) -> IntMatrix:
        """incidence[i][j] = occurrences of letter i in the image of letter j."""
        idx = {a: i for i, a in enumerate(self.alphabet)}
        k = len(self.alphabet)
        rows = [[0] * k for _ in range(k)]
        for j, a in enumerate(self.alphabet):
            for c in self.rules[a]:
                rows[idx[c]][j] += 1
        return IntMatrix.from_rows(rows, k)


@dataclass(frozen=True)
class Odometer:
    base_cycle: tuple

    def __post_init__(self):
        object.__setattr__(self, "base_cycle", tuple(int(b) for b in self.base_cycle))
        if not self.base_cycle:
            raise DegenerateBase("empty base cycle")
        if any(b < 2 for b in self.base_cycle):
            raise DegenerateBase(f"bases must be >= 2, got {list(self.base_cycle)}")


@dataclass(frozen=True)
class PointSystem:
    pass


@dataclass(frozen=True)
class SFT:
    """Edge shift of a nonnegative integer adjacency matrix (entropy inputs only)."""

    adjacency: IntMatrix

    def __post_init__(self):
        if not self.adjacency.is_square:
            raise NotSquare(f"{self.adjacency.rows}x{self.adjacency.cols}")
        if any(x < 0 for x in self.adjacency.entries):
            raise ValueError("adjacency entries must be nonnegative")


@dataclass(frozen=True)
class StationaryBVDiagram:
    k: int
    incidence: IntMatrix
    unit_vec: tuple

    def __post_init__(self):
        object.__setattr__(self, "unit_vec", tuple(int(x) for x in self.unit_vec))
        if self.incidence.rows != self.k or self.incidence.cols != self.k:
            raise NotSquare(f"incidence must be {self.k}x{self.k}")
        if len(self.unit_vec) != self.k or any(x < 1 for x in self.unit_vec):
            raise ValueError("unit vector needs k positive entries")
        if any(x < 0 for x in self.incidence.entries):
            raise ValueError("incidence entries must be nonnegative")
        if not check_primitive(self.incidence):
            raise NotPrimitive("incidence matrix is not primitive")


def factors(s: Substitution, n: int) -> set:
    """All length-n factors of the subshift generated by s.

    Seeds with the length-n factors of the first iterate of each letter that is
    at least n long, then closes under w -> (length-n factors of s(w)) until the
    set stabilises.  Every legal word of length n sits inside the image of a
    legal word of length n, so the closure is the whole language.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if all(len(w) == 1 for w in s.rules.values()):
        raise AperiodicityCheckFailed("no letter grows under the substitution")

    def windows(w):
        return {w[i:i + n] for i in range(len(w) - n + 1)}

    found = set()
    for a in s.alphabet:
        w = (a,)
        for _ in range(n * len(s.alphabet) + 1):
            if len(w) >= n:
                break
            w = s.apply(w)
        found |= windows(w)
    frontier = set(found)
    while frontier:
        new = set()
        for u in frontier:
            new |= windows(s.apply(u))
        frontier = new - found
        found |= frontier
    return found


def factor_complexity(s: Substitution, n: int) -> int:
    return len(factors(s, n))


def validate_substitution(s: Substitution, bound: int = APERIODICITY_BOUND) -> None:
    if not check_primitive(s.matrix()):
        raise NotPrimitive("abelianization matrix is not primitive")
    for n in range(1, bound + 1):
        p = factor_complexity(s, n)
        if p < n + 1:
            raise AperiodicityCheckFailed(f"p({n}) = {p} < {n + 1}: subshift looks periodic")


def substitution_to_bv(s: Substitution, bound: int = APERIODICITY_BOUND) -> StationaryBVDiagram:
    validate_substitution(s, bound)
    k = len(s.alphabet)
    return StationaryBVDiagram(k, s.matrix(), (1,) * k)


def odometer_to_bv(o: Odometer) -> StationaryBVDiagram:
    # one period of the base cycle telescopes to a single 1x1 stationary matrix
    return StationaryBVDiagram(1, IntMatrix.from_rows([[prod(o.base_cycle)]]), (1,))


def point_to_bv(_: PointSystem) -> StationaryBVDiagram:
    return StationaryBVDiagram(1, IntMatrix.from_rows([[1]]), (1,))


def to_diagram(system) -> StationaryBVDiagram:
    if isinstance(system, StationaryBVDiagram):
        return system
    if isinstance(system, Substitution):
        return substitution_to_bv(system)
    if isinstance(system, Odometer):
        return odometer_to_bv(system)
    if isinstance(system, PointSystem):
        return point_to_bv(system)
    raise TypeError(f"{type(system).__name__} has no Bratteli-Vershik presentation")


FIBONACCI = Substitution(("a", "b"), {"a": "ab", "b": "a"})
THUE_MORSE = Substitution(("a", "b"), {"a": "ab", "b": "ba"})
