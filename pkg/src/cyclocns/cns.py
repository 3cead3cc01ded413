"""Canonical number system checks: the Petho criterion, digit expansions and sweeps."""
from __future__ import annotations

import enum
import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .bigpoly import IntPoly, NotMonic, Residue, divmod_monic, residue_reduce
from .cyclotomic import CnsBasis, base_polynomial, cyclotomic, euler_phi

DEFAULT_MAX_STEPS = 10**6
DEFAULT_BOX_BUDGET = 10**6


class PreconditionViolated(ValueError):
    pass


class DigitOutOfRange(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def default_max_steps() -> int:
    value = os.environ.get("CYCLO_MAX_STEPS")
    return int(value) if value else DEFAULT_MAX_STEPS


@dataclass(frozen=True)
class CriterionReport:
    monotone_ok: bool
    p0_ok: bool
    no_unit_root_ok: bool
    first_violation: str | None = None

    @property
    def passed(self) -> bool:
        return self.monotone_ok and self.p0_ok and self.no_unit_root_ok


def cyclotomic_order_bound(d: int) -> int:
    # phi(j) >= sqrt(j / 2), so phi(j) > d whenever j > 2 * d**2.
    return 2 * d * d + 4


def has_cyclotomic_factor(P: IntPoly) -> bool:
    """True iff some Phi_j divides P, i.e. P has a root of unity as a root."""
    if P.is_zero():
        raise ValueError("zero polynomial")
    d = P.degree
    for j in range(1, cyclotomic_order_bound(d) + 1):
        if euler_phi(j) > d:
            continue
        _, r = divmod_monic(P, cyclotomic(j))
        if r.is_zero():
            return True
    return False


def petho_check(P: IntPoly) -> CriterionReport:
    """Check 0 < p_{d-1} <= ... <= p_0, p_0 >= 2 and no cyclotomic factor."""
    if not P.is_monic():
        raise NotMonic(f"{P} is not monic")
    if P.degree < 1:
        raise ValueError("P must have positive degree")
    d = P.degree
    violations = []

    monotone_ok = P[d - 1] > 0
    if not monotone_ok:
        violations.append(f"p_{d - 1} = {P[d - 1]} is not positive")
    else:
        # chain p_{d-1}, ..., p_0 must be nondecreasing
        for i in range(d - 2, -1, -1):
            if P[i] < P[i + 1]:
                violations.append(f"p_{i + 1} = {P[i + 1]} > p_{i} = {P[i]}")
                monotone_ok = False
                break

    p0_ok = P[0] >= 2
    if not p0_ok:
        violations.append(f"p_0 = {P[0]} < 2")
    no_unit_root_ok = not has_cyclotomic_factor(P)
    if not no_unit_root_ok:
        violations.append("P has a root of unity as a root")
    return CriterionReport(
        monotone_ok=monotone_ok,
        p0_ok=p0_ok,
        no_unit_root_ok=no_unit_root_ok,
        first_violation=violations[0] if violations else None,
    )


def coeff_bounds_check(k: int, m: int) -> bool:
    """Check (m-1)^d C(phi,d) / 2 <= p~_d <= (m+1)^d C(phi,d) for d = 1..phi(k).

    ``p~_d`` is the coefficient of ``X**(phi(k) - d)`` in ``Phi_k(m + X)``.
    """
    phi = euler_phi(k)
    if m <= phi:
        raise PreconditionViolated(f"need m >= phi(k) + 1 = {phi + 1}, got m = {m}")
    P = base_polynomial(k, m).P
    for d in range(1, phi + 1):
        pd = P[phi - d]
        c = comb(phi, d)
        if 2 * pd < (m - 1) ** d * c or pd > (m + 1) ** d * c:
            return False
    return True


class Ordering(enum.Enum):
    LESS = "<"
    EQUAL = "="
    GREATER = ">"


def remark_boundary(k: int, m: int) -> Ordering:
    """Compare p_1 with p_0 in Phi_k(m + X)."""
    P = base_polynomial(k, m).P
    p1, p0 = P[1], P[0]
    if p1 < p0:
        return Ordering.LESS
    return Ordering.EQUAL if p1 == p0 else Ordering.GREATER


# -- digit expansions -------------------------------------------------------


class Status(enum.Enum):
    TERMINATED = "terminated"
    CYCLE = "cycle"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class DigitExpansion:
    """Digits least significant first.

    For ``CYCLE`` the digits are those emitted before the repeat was seen and
    ``cycle_entry``/``cycle_length`` locate the loop among the visited
    residues.
    """

    digits: tuple[int, ...]
    status: Status
    steps: int
    cycle_entry: int | None = None
    cycle_length: int | None = None

    @property
    def terminated(self) -> bool:
        return self.status is Status.TERMINATED


def _as_residue(basis: CnsBasis, gamma) -> Residue:
    if isinstance(gamma, Residue):
        if gamma.ring.modulus != basis.P:
            raise ValueError("residue does not belong to the basis ring")
        return gamma
    if isinstance(gamma, int):
        gamma = [gamma]
    return residue_reduce(basis.ring, IntPoly(gamma))


def _step(P: tuple[int, ...], p0: int, b: int, a: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    digit = a[0] % b
    t = (a[0] - digit) // p0
    d = len(a)
    nxt = [a[i + 1] - t * P[i + 1] for i in range(d - 1)]
    nxt.append(-t)
    return digit, tuple(nxt)


def expansion_step(basis: CnsBasis, gamma) -> tuple[int, Residue]:
    """One division step: gamma = digit + X * gamma' in Z[X]/(P)."""
    gamma = _as_residue(basis, gamma)
    if basis.digit_bound < 2:
        raise PreconditionViolated("|p_0| must be >= 2")
    P = basis.P.coeffs
    digit, nxt = _step(P, P[0], basis.digit_bound, gamma.coeffs)
    return digit, Residue(gamma.ring, nxt)


def encode(basis: CnsBasis, gamma, max_steps: int | None = None) -> DigitExpansion:
    """Iterate the division step until zero, a repeated residue or the step fuse."""
    gamma = _as_residue(basis, gamma)
    if basis.digit_bound < 2:
        raise PreconditionViolated("|p_0| must be >= 2")
    if max_steps is None:
        max_steps = default_max_steps()
    P = basis.P.coeffs
    p0, b = P[0], basis.digit_bound
    a = gamma.coeffs
    seen: dict[tuple[int, ...], int] = {}
    digits: list[int] = []
    steps = 0
    while any(a):
        if a in seen:
            entry = seen[a]
            return DigitExpansion(tuple(digits), Status.CYCLE, steps, entry, steps - entry)
        if steps >= max_steps:
            return DigitExpansion(tuple(digits), Status.BUDGET_EXCEEDED, steps)
        seen[a] = steps
        digit, a = _step(P, p0, b, a)
        digits.append(digit)
        steps += 1
    return DigitExpansion(tuple(digits), Status.TERMINATED, steps)


def decode(basis: CnsBasis, digits: Sequence[int]) -> Residue:
    for dgt in digits:
        if not 0 <= dgt < basis.digit_bound:
            raise DigitOutOfRange(f"digit {dgt} outside [0, {basis.digit_bound})")
    return residue_reduce(basis.ring, IntPoly(digits))


# -- bounded verification and sweeps ---------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    basis: CnsBasis
    box_radius: int
    tested: int
    counterexample: Residue | None = None
    counterexample_expansion: DigitExpansion | None = None

    @property
    def all_terminated(self) -> bool:
        return self.counterexample is None


def _first_failure(args):
    P, b, max_steps, chunk = args
    basis = CnsBasis(P=IntPoly(P), digit_bound=b)
    for tested, coeffs in enumerate(chunk, 1):
        exp = encode(basis, list(coeffs), max_steps)
        if not exp.terminated:
            return tested, coeffs, exp
    return len(chunk), None, None


def exhaustive_verify(
    basis: CnsBasis,
    box_radius: int,
    max_steps: int | None = None,
    budget: int = DEFAULT_BOX_BUDGET,
    jobs: int = 1,
) -> VerificationReport:
    """Encode every residue with all coefficients in [-box_radius, box_radius]."""
    if box_radius < 1:
        raise ValueError("box_radius must be positive")
    if basis.digit_bound < 2:
        raise PreconditionViolated("|p_0| must be >= 2")
    d = basis.degree
    total = (2 * box_radius + 1) ** d
    if total > budget:
        raise BudgetExceeded(f"{total} residues exceed the budget of {budget}")
    if max_steps is None:
        max_steps = default_max_steps()
    r = range(-box_radius, box_radius + 1)
    points = list(itertools.product(r, repeat=d))
    size = max(1, -(-len(points) // (4 * max(jobs, 1))))
    chunks = [points[i:i + size] for i in range(0, len(points), size)]
    work = [(basis.P.coeffs, basis.digit_bound, max_steps, c) for c in chunks]

    tested = 0
    for n, coeffs, exp in _map(_first_failure, work, jobs):
        tested += n
        if coeffs is not None:
            return VerificationReport(
                basis, box_radius, tested, basis.ring.element(list(coeffs)), exp
            )
    return VerificationReport(basis, box_radius, tested)


def _map(fn, items, jobs: int):
    # Ordered results regardless of the worker count.
    if jobs <= 1 or len(items) <= 1:
        return map(fn, items)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


@dataclass(frozen=True)
class PairResult:
    k: int
    m: int
    report: CriterionReport


@dataclass(frozen=True)
class SweepReport:
    phi_max: int
    m_max: int
    results: tuple[PairResult, ...] = field(default_factory=tuple)

    @property
    def pair_count(self) -> int:
        return len(self.results)

    @property
    def pass_count(self) -> int:
        return sum(r.report.passed for r in self.results)

    @property
    def failures(self) -> list[PairResult]:
        return [r for r in self.results if not r.report.passed]


def sweep_pairs(phi_max: int, m_max: int) -> list[tuple[int, int]]:
    """All (k, m) with k >= 3, phi(k) <= phi_max and phi(k) + 1 <= m <= m_max."""
    pairs = []
    for k in range(3, cyclotomic_order_bound(max(phi_max, 0)) + 1):
        phi = euler_phi(k)
        if phi > phi_max:
            continue
        pairs.extend((k, m) for m in range(phi + 1, m_max + 1))
    return pairs


def _check_pair(pair: tuple[int, int]) -> PairResult:
    k, m = pair
    return PairResult(k, m, petho_check(base_polynomial(k, m).P))


def theorem1_sweep(phi_max: int, m_max: int, jobs: int = 1) -> SweepReport:
    pairs = sweep_pairs(phi_max, m_max)
    return SweepReport(phi_max, m_max, tuple(_map(_check_pair, pairs, jobs)))
