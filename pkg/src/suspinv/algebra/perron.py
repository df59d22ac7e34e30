"""Exact Perron-Frobenius data of primitive nonnegative integer matrices."""

from __future__ import annotations

from fractions import Fraction

from ..errors import NotPrimitive, NotSquare
from . import polys
from .fields import QQ, FieldElement, NumberField
from .intmat import IntMatrix


def check_primitive(m: IntMatrix) -> bool:
    """True iff some power m^p with p <= (k-1)^2 + 1 is entrywise positive (Wielandt bound)."""
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    if any(x < 0 for x in m.entries):
        raise ValueError("matrix has negative entries")
    k = m.rows
    pattern = [[m[i, j] > 0 for j in range(k)] for i in range(k)]
    power = pattern
    for _ in range((k - 1) ** 2 + 1):
        if all(all(r) for r in power):
            return True
        power = [[any(power[i][l] and pattern[l][j] for l in range(k)) for j in range(k)] for i in range(k)]
    return False


def charpoly(m: IntMatrix) -> tuple[int, ...]:
    """det(xI - m), lowest degree first, by Faddeev-LeVerrier over Q."""
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    n = m.rows
    a = [[Fraction(x) for x in r] for r in m.tolist()]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        prev = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            prev[i][i] += coeffs[n - k + 1]
        mk = prev
        am = [[sum(a[i][l] * mk[l][j] for l in range(n)) for j in range(n)] for i in range(n)]
        coeffs[n - k] = -sum(am[i][i] for i in range(n)) / k
    return tuple(int(c) for c in coeffs)


def irreducible_factors(p) -> list[tuple[int, ...]]:
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed([int(c) for c in p])), x)
    _, facs = poly.factor_list()
    out = []
    for f, _mult in facs:
        out.append(polys.to_integer_primitive(reversed(f.all_coeffs())))
    return out


def _separate(p, iv, q, jv):
    """Refine two isolating intervals of roots of distinct irreducibles until disjoint."""
    pm, qm = polys.monic(p), polys.monic(q)
    while not (iv[1] <= jv[0] or jv[1] <= iv[0]):
        if iv[0] != iv[1]:
            iv = polys.bisect_root(pm, *iv)
        if jv[0] != jv[1]:
            jv = polys.bisect_root(qm, *jv)
    return iv, jv


def spectral_field(m: IntMatrix) -> NumberField:
    """Field generated by the largest real eigenvalue of m, with a canonical isolating interval."""
    best = None
    for f in irreducible_factors(charpoly(m)):
        iv = polys.largest_real_root_interval(f)
        if iv is None:
            continue
        if best is None:
            best = (f, iv)
            continue
        biv, fiv = _separate(best[0], best[1], f, iv)
        best = (f, fiv) if fiv[0] >= biv[1] else (best[0], biv)
    f, iv = best
    if len(f) == 2:
        return QQ
    lo, hi = iv
    return NumberField(f, (lo, hi), _checked=True)


def _nullvector(rows: list[list[FieldElement]]) -> list[FieldElement]:
    """A nonzero vector in the kernel of a square matrix over a field (kernel assumed 1-dimensional)."""
    n = len(rows[0])
    a = [r[:] for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(a)) if not a[i][c].is_zero()), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        raise ArithmeticError("eigenvalue has trivial eigenspace")
    fc = free[0]
    field = rows[0][0].field
    vec = [field.zero() for _ in range(n)]
    vec[fc] = field.one()
    for i, c in enumerate(pivots):
        vec[c] = -a[i][fc]
    return vec


def perron_data(m: IntMatrix):
    """Return (field, lambda, left_vec, right_vec) for a primitive matrix.

    lambda is the generator of ``field`` (or a rational in QQ); both eigenvectors
    are exact with strictly positive entries, unnormalised.
    """
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    if not check_primitive(m):
        raise NotPrimitive("no power of the matrix is strictly positive")
    field = spectral_field(m)
    lam = field.gen
    if field.is_rational:
        lo, hi = polys.largest_real_root_interval(charpoly(m))
        lam = FieldElement(QQ, [lo if lo == hi else _rational_in(lo, hi, charpoly(m))])
    k = m.rows
    shifted = [[field(m[i, j]) - (lam if i == j else 0) for j in range(k)] for i in range(k)]
    right = _positive(_nullvector(shifted))
    shifted_t = [[shifted[j][i] for j in range(k)] for i in range(k)]
    left = _positive(_nullvector(shifted_t))
    return field, lam, left, right


def _rational_in(lo, hi, p) -> Fraction:
    """The rational root of p isolated by (lo, hi)."""
    import sympy

    x = sympy.Symbol("x")
    for r in sympy.Poly(list(reversed(p)), x).ground_roots():
        r = Fraction(int(r.p), int(r.q))
        if lo < r < hi:
            return r
    raise ArithmeticError("no rational root in interval")


def _positive(vec: list[FieldElement]) -> list[FieldElement]:
    if vec[[v.is_zero() for v in vec].index(False)].sign() < 0:
        vec = [-v for v in vec]
    if not all(v.sign() > 0 for v in vec):
        raise ArithmeticError("Perron vector not strictly positive")
    return vec
