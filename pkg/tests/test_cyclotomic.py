from math import gcd

import pytest
import sympy

from cyclocns.bigpoly import IntPoly, evaluate, mul
from cyclocns.cyclotomic import (
    InvalidK,
    base_polynomial,
    cyclotomic,
    divisors,
    euler_phi,
    factorize,
    is_prime_power,
    power_reduction_holds,
    radical,
)

X = IntPoly.x()


def phi_by_counting(k):
    return sum(1 for a in range(1, k + 1) if gcd(a, k) == 1)


def sympy_cyclotomic(k):
    x = sympy.Symbol("x")
    cs = sympy.Poly(sympy.cyclotomic_poly(k, x), x).all_coeffs()
    return IntPoly([int(c) for c in reversed(cs)])


def test_euler_phi_examples():
    assert euler_phi(1) == 1
    assert euler_phi(11) == 10
    assert euler_phi(12) == 4


def test_euler_phi_against_counting():
    for k in range(1, 301):
        assert euler_phi(k) == phi_by_counting(k)


def test_radical_examples():
    assert radical(1) == 1
    assert radical(8) == 2
    assert radical(12) == 6
    for p in (2, 3, 5, 97):
        assert radical(p) == p


def test_factorize_roundtrip():
    for n in range(1, 500):
        prod = 1
        for p, e in factorize(n).items():
            assert sympy.isprime(p)
            prod *= p**e
        assert prod == n


def test_cyclotomic_examples():
    assert cyclotomic(1) == X - 1
    assert cyclotomic(4) == X**2 + 1
    assert cyclotomic(12) == X**4 - X**2 + 1


def test_cyclotomic_against_sympy():
    for k in range(1, 121):
        assert cyclotomic(k) == sympy_cyclotomic(k), k


@pytest.mark.parametrize("k", range(1, 201))
def test_product_over_divisors_and_degree(k):
    prod = IntPoly([1])
    for d in divisors(k):
        prod = mul(prod, cyclotomic(d))
    assert prod == X**k - 1
    assert cyclotomic(k).degree == euler_phi(k)
    assert cyclotomic(k).is_monic()


def test_constant_terms():
    for k in range(2, 201):
        value = evaluate(cyclotomic(k), 1)
        # Phi_k(1) = p for k = p^l, else 1
        assert value == (radical(k) if is_prime_power(k) else 1)
        assert cyclotomic(k)[0] == 1


def test_power_reduction():
    assert power_reduction_holds(9)
    assert power_reduction_holds(12)
    assert power_reduction_holds(2)
    assert all(power_reduction_holds(k) for k in range(2, 201))


def test_base_polynomial_examples():
    b = base_polynomial(4, 1)
    assert b.P == X**2 + 2 * X + 2 and b.digit_bound == 2
    b = base_polynomial(3, 3)
    assert b.P == X**2 + 7 * X + 13 and b.digit_bound == 13
    assert base_polynomial(11, 10).digit_bound == 11111111111
    with pytest.raises(InvalidK):
        base_polynomial(2, 5)


def test_base_polynomial_invariants():
    for k in range(3, 31):
        phi = euler_phi(k)
        for m in range(1, phi + 12):
            b = base_polynomial(k, m)
            assert b.P.degree == phi
            assert b.P.is_monic()
            assert b.digit_bound == abs(evaluate(b.P, 0)) == evaluate(cyclotomic(k), m)
            if m >= phi + 1:
                assert all(c > 0 for c in b.P.coeffs)
