"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""
import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from cyclocns.bigpoly import IntPoly, QuotientRing, evaluate, mul, residue_pow, taylor_shift
from cyclocns.cli import run
from cyclocns.cns import (
    Status,
    coeff_bounds_check,
    decode,
    encode,
    exhaustive_verify,
    expansion_step,
    theorem1_sweep,
)
from cyclocns.cyclotomic import (
    CnsBasis,
    base_polynomial,
    cyclotomic,
    divisors,
    euler_phi,
    power_reduction_holds,
)
from cyclocns.multind import (
    Certificate,
    algebraic_check,
    gcd_certificates,
    independence_verdict,
    int_mult_dependent,
    nagell_search,
    quartic_search,
    recheck_witness,
    theorem2_sweep,
)

X = IntPoly.x()


@pytest.fixture
def criterion(request):
    state = {}

    def record(number, title):
        state["label"] = f"criterion {number:2d}: {title}"

    yield record
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else None
    status = "FAIL" if failed else "PASS"
    ACCEPTANCE_LINES.append(f"[{status}] {state.get('label', request.node.name)}")
    print(f"[{status}] {state.get('label', request.node.name)}")


def test_01_theorem1_finite_check(criterion):
    criterion(1, "finite Petho check phi(k) <= 26, m <= 19 (300 pairs, no failures, < 5 s)")
    start = time.perf_counter()
    rep = theorem1_sweep(26, 19)
    elapsed = time.perf_counter() - start
    assert rep.failures == []
    assert rep.pair_count == rep.pass_count == 300
    assert elapsed < 5
    assert run(["sweep-theorem1", "--phi-max", "26", "--m-max", "19", "--no-timing"]) == 0


def test_02_remark_reproduction(criterion):
    criterion(2, "p1 < p0 at (k=11, m=10) and p1 > p0 at (k=22, m=10)")
    P = base_polynomial(11, 10).P
    assert P[1] == 10987654321 and P[0] == 11111111111 and P[1] < P[0]
    Q = base_polynomial(22, 10).P
    assert Q[1] > Q[0]


def test_03_exhaustive_witness(criterion):
    criterion(3, "box radius 2 for (4,1),(3,3),(4,3),(6,3); X - 2 cycles (< 10 s)")
    start = time.perf_counter()
    for k, m in [(4, 1), (3, 3), (4, 3), (6, 3)]:
        rep = exhaustive_verify(base_polynomial(k, m), 2)
        assert rep.all_terminated and rep.tested == 25
    bad = exhaustive_verify(CnsBasis.from_polynomial(X - 2), 2)
    assert not bad.all_terminated
    assert bad.counterexample_expansion.status is Status.CYCLE
    assert time.perf_counter() - start < 10


def test_04_roundtrip(criterion):
    criterion(4, "decode(encode(g)) == g for 1000 random residues on 5 bases")
    rng = random.Random(2024)
    bases = [base_polynomial(4, 1), base_polynomial(3, 3), base_polynomial(5, 5),
             base_polynomial(8, 9), base_polynomial(12, 5)]
    for basis in bases:
        for _ in range(1000):
            gamma = basis.ring.element([rng.randint(-10**4, 10**4) for _ in range(basis.degree)])
            exp = encode(basis, gamma)
            assert exp.terminated
            assert all(0 <= d < basis.digit_bound for d in exp.digits)
            assert decode(basis, exp.digits) == gamma


def test_05_coefficient_bounds(criterion):
    criterion(5, "coefficient bounds for k <= 30, phi(k)+1 <= m <= phi(k)+10")
    for k in range(3, 31):
        phi = euler_phi(k)
        for m in range(phi + 1, phi + 11):
            assert coeff_bounds_check(k, m), (k, m)


def test_06_cyclotomic_identities(criterion):
    criterion(6, "prod Phi_d = X^k - 1 and power reduction for 2 <= k <= 200 (< 5 s)")
    start = time.perf_counter()
    for k in range(2, 201):
        prod = IntPoly([1])
        for d in divisors(k):
            prod = mul(prod, cyclotomic(d))
        assert prod == X**k - 1
        assert power_reduction_holds(k)
    assert time.perf_counter() - start < 5


def test_07_nagell_search(criterion):
    criterion(7, "Nagell-Ljunggren search x <= 200, k <= 20, q <= 20 gives exactly 3 (< 60 s)")
    start = time.perf_counter()
    sols = {s.astuple() for s in nagell_search(200, 20, 20)}
    assert sols == {(3, 11, 5, 2), (7, 20, 4, 2), (18, 7, 3, 3)}
    assert time.perf_counter() - start < 60


def test_08_quartic_search(criterion):
    criterion(8, "X^2 + 3 = 4Y^q, X <= 1e5, q <= 50: X = 1 family plus (37, 7, 3) (< 30 s)")
    start = time.perf_counter()
    sols = set(quartic_search(10**5, 50))
    assert {s for s in sols if s[0] != 1} == {(37, 7, 3)}
    assert {s for s in sols if s[0] == 1} == {(1, 1, q) for q in range(1, 51)}
    assert time.perf_counter() - start < 30


def test_09_gcd_certificates(criterion):
    criterion(9, "gcd(p_q0, p_q1) = 1 and gcd(p_q3, p_q4) = q*n for q = 17, 19, 23")
    for q in (17, 19, 23):
        g01, g34 = gcd_certificates(q)
        assert g01.coeffs == (1,)
        assert g34.coeffs == (0, q)
        assert str(g34).replace("X", "n") == f"{q}*n"


def test_10_independence_sweeps(criterion):
    criterion(10, "independence sweeps up to 50; k = 6 dependent exactly at n = 1 (< 2 min)")
    start = time.perf_counter()
    for k in (3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 32):
        sweep = theorem2_sweep(k, 50)
        assert len(sweep.verdicts) == 50 * 49 // 2
        assert not sweep.dependent, k
    sweep = theorem2_sweep(6, 50)
    assert {(v.m, v.n) for v in sweep.dependent} == {(m, 1) for m in range(2, 51)}
    assert all(v.witness.verified for v in sweep.dependent)
    assert sweep.passed
    assert not theorem2_sweep(6, 50, n_min=2).dependent
    assert time.perf_counter() - start < 120


def test_11_norm_collision(criterion):
    criterion(11, "(k=3, m=18, n=2): norms 343 = 7^3 dependent, verdict Independent by torsion")
    assert evaluate(cyclotomic(3), 18) == 343 and evaluate(cyclotomic(3), 2) == 7
    assert int_mult_dependent(343, 7) == (1, 3)
    v = independence_verdict(3, 18, 2)
    assert not v.dependent
    assert v.certificate is Certificate.TORSION_RULED_OUT
    assert v.primitive_pair == (1, 3)
    assert algebraic_check(3, 18, 2, 1, 3) is None


def test_12_property_suites(criterion):
    criterion(12, "ring axioms, shift roundtrip, step identity, witness re-check (1000 cases each)")
    rng = random.Random(99)

    def rand_poly():
        return IntPoly([rng.randint(-30, 30) for _ in range(rng.randint(0, 6))])

    for _ in range(1000):
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        assert f + g == g + f and f * g == g * f
        assert (f * g) * h == f * (g * h) and f * (g + h) == f * g + f * h

    for _ in range(1000):
        f, a = rand_poly(), rng.randint(-25, 25)
        assert taylor_shift(taylor_shift(f, a), -a) == f
        x = rng.randint(-10, 10)
        assert evaluate(taylor_shift(f, a), x) == evaluate(f, x + a)

    bases = [base_polynomial(k, m) for k, m in [(4, 1), (3, 3), (5, 6), (8, 9), (22, 10)]]
    for _ in range(1000):
        basis = rng.choice(bases)
        gamma = basis.ring.element([rng.randint(-10**6, 10**6) for _ in range(basis.degree)])
        digit, nxt = expansion_step(basis, gamma)
        assert basis.ring.element(IntPoly([digit]) + X * nxt.to_poly()) == gamma

    dependent = 0
    for _ in range(1000):
        k = rng.choice([3, 4, 5, 6, 6, 8, 9, 10, 12])
        n = 1 if rng.random() < 0.4 else rng.randint(1, 40)
        m = rng.choice([x for x in range(1, 41) if x != n])
        v = independence_verdict(k, m, n)
        if v.dependent:
            dependent += 1
            w = v.witness
            assert w.verified and recheck_witness(k, m, n, w.p, w.q, w.j)
    assert dependent > 50

    ring = QuotientRing(cyclotomic(7))
    a = ring.element([2, -1, 3])
    for _ in range(1000):
        e1, e2 = rng.randint(0, 15), rng.randint(0, 15)
        assert residue_pow(a, e1 + e2) == residue_pow(a, e1) * residue_pow(a, e2)
