"""Multiplicative independence of -m + zeta_k and -n + zeta_k.

The decision procedure is exact for all m, n >= 1:

* norms ``a = Phi_k(m)`` and ``b = Phi_k(n)`` must satisfy ``a**p == b**q``;
* if one norm is 1 the element is a unit, and it is either a root of unity
  (dependent) or of infinite order (independent against a non-unit);
* if the norms are multiplicatively independent integers, so are the bases;
* otherwise every relation is a multiple of the primitive norm relation
  ``(p1, q1)`` and exists iff ``alpha**(p1*L) == beta**(q1*L)`` with
  ``L = lcm(2, k)``, the exponent of the torsion group of Q(zeta_k).
"""
from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, gcd

import gmpy2

from .bigpoly import IntPoly, QuotientRing, Residue, gcd_z, mul, residue_pow, residue_reduce
from .cyclotomic import cyclotomic, divisors

SUPPORTED_PRIMES = (17, 19, 23)

# Solutions (x, y, k, q) of (x^k - 1)/(x - 1) = y^q known in the literature.
KNOWN_NAGELL_SOLUTIONS = frozenset({(3, 11, 5, 2), (7, 20, 4, 2), (18, 7, 3, 3)})
# Nontrivial solutions (X, Y, q), q >= 2, of X^2 + 3 = 4 Y^q.
KNOWN_QUARTIC_SOLUTIONS = frozenset({(37, 7, 3)})

EVIDENCE_NOTE = (
    "bounded computation: numerical evidence only, not a proof for unbounded m, n"
)


class InputTooSmall(ValueError):
    pass


class NotSupportedPrime(ValueError):
    pass


class InvalidInput(ValueError):
    pass


def integer_root(a: int, r: int) -> tuple[int, bool]:
    """Floor of the r-th root of ``a >= 0`` and whether it is exact."""
    root, exact = gmpy2.iroot(a, r)
    return int(root), bool(exact)


@lru_cache(maxsize=4096)
def perfect_power_decompose(a: int) -> tuple[int, int]:
    """Return ``(b, s)`` with ``a == b**s``, ``s`` maximal."""
    if a < 2:
        raise InputTooSmall(f"need a >= 2, got {a}")
    for r in range(a.bit_length() - 1, 1, -1):
        root, exact = integer_root(a, r)
        if exact:
            return root, r
    return a, 1


def int_mult_dependent(a: int, b: int) -> tuple[int, int] | None:
    """Primitive ``(p, q)`` with ``a**p == b**q``, or None if independent."""
    c1, s = perfect_power_decompose(a)
    c2, t = perfect_power_decompose(b)
    if c1 != c2:
        return None
    g = gcd(s, t)
    return t // g, s // g


# -- the p_{q,i}(n) expansion and gcd certificates ---------------------------


def pki_polynomials(q: int, validate: bool = True) -> list[IntPoly]:
    """Coefficients of (-n + zeta_q)^q on 1, zeta_q, ..., zeta_q^(q-2), as polynomials in n.

    ``p_{q,i}(n) = (-n)^(q-i) C(q,i) + q n``, plus 1 for ``i = 0``.
    """
    if q not in SUPPORTED_PRIMES:
        raise NotSupportedPrime(f"q must be one of {SUPPORTED_PRIMES}, got {q}")
    polys = []
    for i in range(q - 1):
        c = [0] * (q - i + 1)
        c[q - i] = (-1) ** (q - i) * comb(q, i)
        c[1] += q
        if i == 0:
            c[0] += 1
        polys.append(IntPoly(c))
    if validate:
        ring = QuotientRing(cyclotomic(q))
        for n0 in (1, 2, 3):
            power = residue_pow(ring.element([-n0, 1]), q)
            if list(power.coeffs) != [f(n0) for f in polys]:
                raise AssertionError(f"p_{q},i disagrees with residue arithmetic at n = {n0}")
    return polys


def gcd_certificates(q: int) -> tuple[IntPoly, IntPoly]:
    """``(gcd(p_{q,0}, p_{q,1}), gcd(p_{q,3}, p_{q,4}))`` over Z[n]."""
    p = pki_polynomials(q)
    return gcd_z(p[0], p[1]), gcd_z(p[3], p[4])


# -- exact identity checks in Z[zeta_k] ------------------------------------


@lru_cache(maxsize=None)
def _ring(k: int) -> QuotientRing:
    return QuotientRing(cyclotomic(k))


def _base(k: int, m: int) -> Residue:
    return _ring(k).element([-m, 1])


def algebraic_check(k: int, m: int, n: int, p: int, q: int) -> int | None:
    """The j in [0, k) with zeta^j (-m + zeta)^p == (-n + zeta)^q, if any."""
    if p < 0 or q < 0 or (p, q) == (0, 0):
        raise InvalidInput("need nonnegative (p, q) != (0, 0)")
    ring = _ring(k)
    lhs = residue_pow(_base(k, m), p)
    rhs = residue_pow(_base(k, n), q)
    zeta = ring.element([0, 1])
    for j in range(k):
        if lhs == rhs:
            return j
        lhs = lhs * zeta
    return None


def _power_by_products(k: int, m: int, e: int) -> IntPoly:
    # Plain repeated multiplication, reduced once at the end.
    f = IntPoly.const(1)
    base = IntPoly([-m, 1])
    for _ in range(e):
        f = mul(f, base)
    return f


def recheck_witness(k: int, m: int, n: int, p: int, q: int, j: int) -> bool:
    """Recompute zeta^j alpha^p == beta^q without binary powering."""
    ring = _ring(k)
    lhs = mul(IntPoly.monomial(j), _power_by_products(k, m, p))
    rhs = _power_by_products(k, n, q)
    return residue_reduce(ring, lhs) == residue_reduce(ring, rhs)


# -- verdicts ----------------------------------------------------------------


@dataclass(frozen=True)
class DependenceWitness:
    """zeta_k^j * (-m + zeta_k)^p == (-n + zeta_k)^q."""

    p: int
    q: int
    j: int
    verified: bool = False


class Certificate(enum.Enum):
    NORM_INDEPENDENT = "norm-independent"
    TORSION_RULED_OUT = "torsion-ruled-out"
    UNIT_CASE = "unit-case"


@dataclass(frozen=True)
class IndependenceVerdict:
    k: int
    m: int
    n: int
    norm_m: int
    norm_n: int
    witness: DependenceWitness | None = None
    certificate: Certificate | None = None
    primitive_pair: tuple[int, int] | None = None
    detail: str = ""

    @property
    def dependent(self) -> bool:
        return self.witness is not None

    @property
    def outcome(self) -> str:
        return "Dependent" if self.dependent else "Independent"


def torsion_exponent(k: int) -> int:
    return k if k % 2 == 0 else 2 * k


def _root_of_unity_order(k: int, x: int) -> int | None:
    # Order of -x + zeta_k if it is a root of unity.
    L = torsion_exponent(k)
    beta = _base(k, x)
    one = _ring(k).one()
    if residue_pow(beta, L) != one:
        return None
    return next(e for e in divisors(L) if residue_pow(beta, e) == one)


def _dependent(k, m, n, a, b, p, q, j, detail, pair=None) -> IndependenceVerdict:
    w = DependenceWitness(p, q, j, recheck_witness(k, m, n, p, q, j))
    return IndependenceVerdict(k, m, n, a, b, witness=w, primitive_pair=pair, detail=detail)


def independence_verdict(k: int, m: int, n: int) -> IndependenceVerdict:
    """Decide whether -m + zeta_k and -n + zeta_k are multiplicatively dependent."""
    if k < 3:
        raise InvalidInput(f"k must be >= 3, got {k}")
    if m < 1 or n < 1:
        raise InvalidInput("m and n must be positive")
    if m == n:
        raise InvalidInput("m and n must differ")
    phi = cyclotomic(k)
    a, b = phi(m), phi(n)

    if a == 1 or b == 1:
        if a == 1 and b == 1:
            raise AssertionError("two distinct units among -x + zeta_k")
        unit, other = (n, m) if b == 1 else (m, n)
        order = _root_of_unity_order(k, unit)
        if order is None:
            return IndependenceVerdict(
                k, m, n, a, b,
                certificate=Certificate.UNIT_CASE,
                detail=f"-{unit} + zeta_{k} is a unit of infinite order; "
                f"the norm {phi(other)} > 1 forces both exponents to vanish",
            )
        p, q = (0, order) if b == 1 else (order, 0)
        return _dependent(
            k, m, n, a, b, p, q, 0,
            f"-{unit} + zeta_{k} is a root of unity of order {order}",
        )

    pair = int_mult_dependent(a, b)
    if pair is None:
        return IndependenceVerdict(
            k, m, n, a, b,
            certificate=Certificate.NORM_INDEPENDENT,
            detail=f"norms {a} and {b} are multiplicatively independent integers",
        )

    p1, q1 = pair
    L = torsion_exponent(k)
    alpha, beta = _base(k, m), _base(k, n)
    if residue_pow(alpha, p1 * L) != residue_pow(beta, q1 * L):
        return IndependenceVerdict(
            k, m, n, a, b,
            certificate=Certificate.TORSION_RULED_OUT,
            primitive_pair=pair,
            detail=f"{a}^{p1} = {b}^{q1}, but alpha^{p1}/beta^{q1} is not a root of unity",
        )
    for u in range(1, L + 1):
        j = algebraic_check(k, m, n, u * p1, u * q1)
        if j is not None:
            return _dependent(
                k, m, n, a, b, u * p1, u * q1, j,
                f"alpha^{p1}/beta^{q1} is a root of unity", pair,
            )
    raise AssertionError("torsion test passed but no witness was found")


# -- sweeps and Diophantine searches ----------------------------------------


@dataclass(frozen=True)
class IndependenceSweep:
    k: int
    range_max: int
    n_min: int
    verdicts: tuple[IndependenceVerdict, ...] = field(default_factory=tuple)
    note: str = EVIDENCE_NOTE

    @property
    def dependent(self) -> list[IndependenceVerdict]:
        return [v for v in self.verdicts if v.dependent]

    @property
    def anomalies(self) -> list[IndependenceVerdict]:
        """Dependent verdicts outside the k = 6, n = 1 family, or unverified witnesses."""
        return [
            v for v in self.dependent
            if not (v.k == 6 and v.n == 1) or not v.witness.verified
        ]

    @property
    def passed(self) -> bool:
        return not self.anomalies


def _verdict(args):
    return independence_verdict(*args)


def theorem2_sweep(k: int, range_max: int, n_min: int = 1, jobs: int = 1) -> IndependenceSweep:
    """Verdicts for all n_min <= n < m <= range_max, ordered by (n, m)."""
    if k < 3:
        raise InvalidInput(f"k must be >= 3, got {k}")
    work = [(k, m, n) for n in range(max(n_min, 1), range_max + 1)
            for m in range(n + 1, range_max + 1)]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            verdicts = tuple(pool.map(_verdict, work, chunksize=64))
    else:
        verdicts = tuple(map(_verdict, work))
    return IndependenceSweep(k, range_max, n_min, verdicts)


@dataclass(frozen=True)
class NagellSolution:
    x: int
    y: int
    k: int
    q: int

    def holds(self) -> bool:
        return (self.x**self.k - 1) // (self.x - 1) == self.y**self.q and self.y > 1

    def astuple(self) -> tuple[int, int, int, int]:
        return self.x, self.y, self.k, self.q


def nagell_search(x_max: int, k_max: int, q_max: int) -> list[NagellSolution]:
    """All (x, y, k, q) with (x^k - 1)/(x - 1) = y^q inside the box, sorted."""
    out = []
    for x in range(2, x_max + 1):
        v = 1 + x
        for k in range(3, k_max + 1):
            v = v * x + 1
            if not gmpy2.is_power(v):
                continue
            for q in range(2, min(q_max, v.bit_length()) + 1):
                y, exact = integer_root(v, q)
                if exact and y > 1:
                    out.append(NagellSolution(x, y, k, q))
    return sorted(out, key=NagellSolution.astuple)


def quartic_search(x_max: int, q_max: int) -> list[tuple[int, int, int]]:
    """Solutions (X, Y, q) of X^2 + 3 = 4 Y^q with 1 <= X <= x_max.

    The q = 1 family is reported only at X = 1; elsewhere q >= 2.
    """
    out = []
    for X in range(1, x_max + 1, 2):
        v = (X * X + 3) // 4
        if v == 1:
            out.extend((X, 1, q) for q in range(1, q_max + 1))
            continue
        if not gmpy2.is_power(v):
            continue
        for q in range(2, min(q_max, v.bit_length()) + 1):
            Y, exact = integer_root(v, q)
            if exact:
                out.append((X, Y, q))
    return out


LEMMA_ENDGAME_CASES = (
    # (k, m, n, p, q): the norm collisions left over from X^2 + 3 = 4 Y^q
    (3, 18, 2, 1, 3),
    (3, -19, 2, 1, 3),
    (3, 18, -3, 1, 3),
    (3, -19, -3, 1, 3),
    (6, -18, -2, 1, 3),
    (6, 19, -2, 1, 3),
    (6, -18, 3, 1, 3),
    (6, 19, 3, 1, 3),
)


def lemma_endgame_checks() -> dict[tuple[int, int, int, int, int], int | None]:
    """Run algebraic_check on every leftover case; all should be None."""
    return {case: algebraic_check(*case) for case in LEMMA_ENDGAME_CASES}
