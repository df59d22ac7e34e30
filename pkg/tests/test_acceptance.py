"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import contextlib
import math
import random
import time
from fractions import Fraction

import pytest

from suspinv import (
    FIBONACCI,
    SFT,
    ExactEntropy,
    GroupElement,
    IntMatrix,
    IsoCertificate,
    Odometer,
    PointSystem,
    Positivity,
    TraceRangeModule,
    Verdict,
    dg_equal,
    dg_from_diagram,
    dg_trace,
    estimate_suspension_entropy,
    fe_sign,
    hermite_normal_form,
    inv_positive,
    inv_trace,
    odometer_to_bv,
    rotation_isomorphic,
    smith_normal_form,
    substitution_to_bv,
    suspension_entropy,
    suspension_invariant,
    telescope,
    time_t_minimality_status,
    trace_range,
    trace_range_equal,
    verify_iso_certificate,
)
from suspinv.algebra.intmat import diagonal
from suspinv.entropy import MinimalityStatus
from suspinv.errors import RationalTime
from suspinv.invariant import InvElement

from conftest import elem, sqrt_field


@pytest.fixture
def report(capsys):
    @contextlib.contextmanager
    def line(number, title):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            status = "PASS"
        finally:
            with capsys.disabled():
                print(f"\n[{status}] criterion {number}: {title} ({time.perf_counter() - start:.2f}s)")
    return line


def random_quadratic(rng, k):
    a = Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3, 4]))
    b = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2, 3]))
    return elem(k, a, b)


def test_c1_rotation_classification(report):
    with report(1, "rotation_isomorphic == trace_range_equal on 100 quadratic pairs"):
        rng = random.Random(2024)
        start = time.perf_counter()
        outcomes = set()
        for i in range(100):
            k = sqrt_field(rng.choice([2, 3, 5]))
            t1 = random_quadratic(rng, k)
            # a third of the pairs are related by t -> +-t + n, the rest independent
            if i % 3 == 0:
                t2 = rng.choice([1, -1]) * t1 + rng.randint(-5, 5)
            else:
                t2 = random_quadratic(rng, k)
            lhs = rotation_isomorphic(t1, t2)
            rhs = trace_range_equal(TraceRangeModule(k, 1, (1, t1)), TraceRangeModule(k, 1, (1, t2)))
            assert lhs == rhs
            outcomes.add(lhs)
        assert outcomes == {True, False}
        assert time.perf_counter() - start < 5


def test_c2_one_point_base(report, q2):
    with report(2, "one-point base at t = sqrt2: rank 2, unit trace 1, pairing n + sqrt2 m"):
        inv = suspension_invariant(PointSystem(), q2.gen)
        assert inv.rank() == 2
        assert inv_trace(inv, inv.order_unit()) == 1
        rng = random.Random(5)
        for _ in range(50):
            n, m = rng.randint(-1000, 1000), rng.randint(-1000, 1000)
            assert inv_trace(inv, inv.element(n, 0, (m,))) == n + m * q2.gen


def test_c3_fibonacci_traces(report, q5):
    with report(3, "Fibonacci: trace(e_a) = (sqrt5 - 1)/2, trace(e_a) + trace(e_b) = 1"):
        g = dg_from_diagram(substitution_to_bv(FIBONACCI)).over(q5)
        ta = dg_trace(g, GroupElement(0, (1, 0)))
        tb = dg_trace(g, GroupElement(0, (0, 1)))
        assert ta == elem(q5, Fraction(-1, 2), Fraction(1, 2))
        assert ta + tb == 1


def test_c4_odometer_oracle(report):
    with report(4, "2-odometer: dg_equal and dg_trace agree with v / 2^n"):
        start = time.perf_counter()
        g = dg_from_diagram(odometer_to_bv(Odometer((2,))))
        elems = [(n, v) for n in range(7) for v in range(-64, 65)]
        for n, v in elems:
            assert dg_trace(g, GroupElement(n, (v,))) == Fraction(v, 2 ** n)
        # every element against its reduced form (equal) and a neighbour (unequal),
        # plus a fixed sample of arbitrary pairs
        for n, v in elems:
            q = Fraction(v, 2 ** n)
            m = q.denominator.bit_length() - 1
            assert dg_equal(g, GroupElement(n, (v,)), GroupElement(m, (q.numerator,)))
            assert not dg_equal(g, GroupElement(n, (v,)), GroupElement(n, (v + 1,)))
        rng = random.Random(4)
        for _ in range(3000):
            (n1, v1), (n2, v2) = rng.choice(elems), rng.choice(elems)
            same = Fraction(v1, 2 ** n1) == Fraction(v2, 2 ** n2)
            assert dg_equal(g, GroupElement(n1, (v1,)), GroupElement(n2, (v2,))) == same
        assert time.perf_counter() - start < 1


def test_c5_entropy_scaling(report):
    with report(5, "entropy scaling: exact (3/2) log 2, estimates within 15% at t = 1/2, 1, 2"):
        exact = suspension_entropy(ExactEntropy(1, 2), Fraction(-3, 2))
        assert exact.same_as(ExactEntropy(Fraction(3, 2), 2))
        full = SFT(IntMatrix.from_rows([[2]]))
        for t in (Fraction(1, 2), Fraction(1), Fraction(2)):
            start = time.perf_counter()
            est = estimate_suspension_entropy(full, t, 12, Fraction(1, 10))
            assert time.perf_counter() - start < 60
            target = float(t) * math.log(2)
            assert abs(est.estimate - target) / target < 0.15


def test_c6_normal_forms(report):
    with report(6, "SNF identities and HNF lattice invariance on 200 random 5x5 matrices"):
        rng = random.Random(6)
        for _ in range(200):
            rows = [[rng.randint(-10, 10) for _ in range(5)] for _ in range(5)]
            m = IntMatrix.from_rows(rows)
            u, d, v = smith_normal_form(m)
            assert u @ m @ v == d
            assert abs(u.det()) == 1 and abs(v.det()) == 1
            diag = diagonal(d)
            assert all(d[i, j] == 0 for i in range(5) for j in range(5) if i != j)
            for a, b in zip(diag, diag[1:]):
                assert (b == 0) if a == 0 else b % a == 0
            h = hermite_normal_form(m)
            for _ in range(20):
                mixed = [list(r) for r in rows]
                for _ in range(6):
                    i, j = rng.sample(range(5), 2)
                    c = rng.randint(-3, 3)
                    mixed[i] = [x + c * y for x, y in zip(mixed[i], mixed[j])]
                if rng.random() < 0.5:
                    i, j = rng.sample(range(5), 2)
                    mixed[i], mixed[j] = mixed[j], [-x for x in mixed[i]]
                assert hermite_normal_form(IntMatrix.from_rows(mixed)) == h


def test_c7_telescope_certificate(report, q5):
    with report(7, "Fibonacci vs telescope(Fibonacci, 2) at t = sqrt5 certified"):
        inv1 = suspension_invariant(FIBONACCI, q5.gen)
        inv2 = suspension_invariant(dg_from_diagram(telescope(substitution_to_bv(FIBONACCI), 2)), q5.gen)
        cert = IsoCertificate(IntMatrix.identity(2), source_level_offset=2, target_level_offset=1)
        result = verify_iso_certificate(inv1, inv2, cert)
        conditions = result.to_dict()["conditions"]
        assert conditions["group_isomorphism"] is True
        assert conditions["order_unit_preserved"] is True
        assert conditions["trace_compatible"] is True
        assert result.verdict == Verdict.ISOMORPHIC_CERTIFIED
        assert trace_range_equal(trace_range(inv1), trace_range(inv2))


def _sample(inv, rng):
    k = inv.base_group.k
    return InvElement(rng.randint(-6, 6), GroupElement(rng.randint(0, 3), tuple(rng.randint(-6, 6) for _ in range(k))))


def test_c8_order_axioms(report, q2, q5):
    with report(8, "order axioms on 200 sampled elements for point, 2-odometer, Fibonacci"):
        rng = random.Random(8)
        cases = [(PointSystem(), q2.gen), (Odometer((2,)), q2.gen), (FIBONACCI, q5.gen)]
        for system, t in cases:
            inv = suspension_invariant(system, t)
            elems = [_sample(inv, rng) for _ in range(200)]
            status = {e: inv_positive(inv, e) for e in elems}
            positives = [e for e in elems if status[e] != Positivity.NOT_POSITIVE]
            assert positives
            for a in positives:
                for b in positives[:40]:
                    assert inv_positive(inv, inv.add(a, b)) != Positivity.NOT_POSITIVE
            for e in elems:
                if status[e] != Positivity.NOT_POSITIVE and inv_positive(inv, inv.neg(e)) != Positivity.NOT_POSITIVE:
                    assert status[e] == Positivity.ZERO
                if status[e] == Positivity.STRICTLY_POSITIVE:
                    assert fe_sign(inv_trace(inv, e)) == 1
            zero = inv.element(0)
            assert inv_positive(inv, zero) == Positivity.ZERO
            assert inv_positive(inv, inv.neg(zero)) == Positivity.ZERO


def test_c9_rational_time_guard(report):
    with report(9, "rational t rejected with RationalTime; status non_minimal"):
        rng = random.Random(9)
        for _ in range(20):
            t = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            with pytest.raises(RationalTime):
                suspension_invariant(FIBONACCI, t)
            assert time_t_minimality_status(t) == MinimalityStatus.NON_MINIMAL
