"""Cyclotomic polynomials, small arithmetic functions and CNS base polynomials."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .bigpoly import IntPoly, QuotientRing, divmod_exact, evaluate, substitute_power, taylor_shift


class InvalidK(ValueError):
    pass


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(k: int) -> int:
    result = k
    for p in factorize(k):
        result = result // p * (p - 1)
    return result


def radical(k: int) -> int:
    r = 1
    for p in factorize(k):
        r *= p
    return r


def divisors(k: int) -> list[int]:
    small = [d for d in range(1, isqrt(k) + 1) if k % d == 0]
    return sorted(set(small + [k // d for d in small]))


def is_prime_power(k: int) -> bool:
    return k > 1 and len(factorize(k)) == 1


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> IntPoly:
    """Phi_k, by exact division of X^k - 1 by the Phi_d with d | k, d < k."""
    if k < 1:
        raise ValueError("k must be positive")
    num = IntPoly.monomial(k) - 1
    for d in divisors(k)[:-1]:
        num = divmod_exact(num, cyclotomic(d))
    return num


@dataclass(frozen=True)
class CnsBasis:
    """A monic polynomial P with its digit set {0, ..., digit_bound - 1}.

    ``k`` and ``m`` are set when ``P = Phi_k(m + X)``; bases built from an
    arbitrary monic polynomial leave them as ``None``.
    """

    P: IntPoly
    digit_bound: int
    k: int | None = None
    m: int | None = None

    @classmethod
    def from_polynomial(cls, P: IntPoly) -> CnsBasis:
        P = P if isinstance(P, IntPoly) else IntPoly(P)
        if not P.is_monic() or P.degree < 1:
            raise ValueError(f"{P} is not a monic polynomial of positive degree")
        return cls(P=P, digit_bound=abs(P[0]))

    @property
    def degree(self) -> int:
        return self.P.degree

    @property
    def ring(self) -> QuotientRing:
        return QuotientRing(self.P)


def base_polynomial(k: int, m: int) -> CnsBasis:
    """The basis -m + zeta_k, i.e. P(X) = Phi_k(m + X) with digits 0..Phi_k(m)-1."""
    if k < 3:
        raise InvalidK(f"k must be >= 3, got {k}")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    P = taylor_shift(cyclotomic(k), m)
    return CnsBasis(P=P, digit_bound=abs(evaluate(P, 0)), k=k, m=m)


def power_reduction_holds(k: int) -> bool:
    """Check Phi_k(X) == Phi_rad(k)(X^(k / rad(k)))."""
    if k < 2:
        raise ValueError("k must be >= 2")
    r = radical(k)
    return cyclotomic(k) == substitute_power(cyclotomic(r), k // r)
