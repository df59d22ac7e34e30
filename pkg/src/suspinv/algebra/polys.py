"""Dense univariate polynomials over Q, lowest degree first.

Polynomials are plain tuples of ``Fraction`` (or ``int``) coefficients; the
zero polynomial is the empty tuple.  Only what the number-field and Perron
code needs lives here: Euclidean division, gcds, Sturm sequences and real
root isolation with rational endpoints.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Poly = tuple


def trim(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(Fraction(c) for c in p)


def degree(p: Sequence) -> int:
    return len(trim(p)) - 1


def add(p: Sequence, q: Sequence) -> Poly:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def neg(p: Sequence) -> Poly:
    return tuple(-c for c in trim(p))


def sub(p: Sequence, q: Sequence) -> Poly:
    return add(p, neg(q))


def scale(p: Sequence, c) -> Poly:
    return trim([c * a for a in p])


def mul(p: Sequence, q: Sequence) -> Poly:
    p, q = trim(p), trim(q)
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def divmod_poly(p: Sequence, q: Sequence) -> tuple[Poly, Poly]:
    p, q = list(trim(p)), trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 1)
    while len(p) - 1 >= dq and p:
        c = p[-1] / lead
        shift = len(p) - 1 - dq
        quot[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p = list(trim(p))
    return trim(quot), trim(p)


def rem(p: Sequence, q: Sequence) -> Poly:
    return divmod_poly(p, q)[1]


def monic(p: Sequence) -> Poly:
    p = trim(p)
    if not p:
        return p
    return scale(p, 1 / p[-1])


def gcd(p: Sequence, q: Sequence) -> Poly:
    p, q = trim(p), trim(q)
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def xgcd(p: Sequence, q: Sequence) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*p + t*q = g, g monic."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        quo, r = divmod_poly(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return (), s0, t0
    inv = 1 / r0[-1]
    return scale(r0, inv), scale(s0, inv), scale(t0, inv)


def derivative(p: Sequence) -> Poly:
    return trim([i * c for i, c in enumerate(p)][1:])


def evaluate(p: Sequence, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def eval_interval(p: Sequence, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of p over [lo, hi] by interval Horner evaluation."""
    a = b = Fraction(0)
    for c in reversed(p):
        prods = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(prods) + c, max(prods) + c
    return a, b


def squarefree_part(p: Sequence) -> Poly:
    p = trim(p)
    g = gcd(p, derivative(p))
    return monic(divmod_poly(p, g)[0])


def sturm_sequence(p: Sequence) -> list[Poly]:
    seq = [trim(p), derivative(p)]
    while seq[-1]:
        r = rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(neg(r))
    return seq


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(p: Sequence, lo, hi, seq=None) -> int:
    """Number of distinct real roots of p in the half-open interval (lo, hi]."""
    seq = seq or sturm_sequence(p)
    lo, hi = Fraction(lo), Fraction(hi)
    return _sign_changes(evaluate(s, lo) for s in seq) - _sign_changes(evaluate(s, hi) for s in seq)


def count_roots_open(p: Sequence, lo, hi, seq=None) -> int:
    n = count_roots(p, lo, hi, seq)
    if evaluate(p, Fraction(hi)) == 0:
        n -= 1
    return n


def root_bound(p: Sequence) -> Fraction:
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    p = trim(p)
    lead = abs(p[-1])
    return 1 + max((abs(c) / lead for c in p[:-1]), default=Fraction(0))


def isolate_real_roots(p: Sequence) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals, one per distinct real root, sorted ascending.

    When a root is rational and lands on a bisection point it is returned as a
    degenerate interval (r, r).
    """
    p = squarefree_part(p)
    if len(p) <= 1:
        return []
    seq = sturm_sequence(p)
    bound = root_bound(p)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count_roots_open(p, lo, hi, seq)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if evaluate(p, mid) == 0:
            out.append((mid, mid))
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out)


def largest_real_root_interval(p: Sequence) -> tuple[Fraction, Fraction] | None:
    roots = isolate_real_roots(p)
    return roots[-1] if roots else None


def bisect_root(p: Sequence, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Halve an isolating interval of a simple root whose endpoints are not roots."""
    mid = (lo + hi) / 2
    vm = evaluate(p, mid)
    if vm == 0:
        return mid, mid
    if (evaluate(p, lo) > 0) != (vm > 0):
        return lo, mid
    return mid, hi


def to_integer_primitive(p: Sequence) -> tuple[int, ...]:
    """Scale a rational polynomial to a primitive integer one with positive leading coefficient."""
    from math import gcd as igcd, lcm

    p = trim(p)
    if not p:
        return ()
    den = 1
    for c in p:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = igcd(g, c)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)
