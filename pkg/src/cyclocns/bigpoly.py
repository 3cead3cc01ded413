"""Dense integer polynomials and arithmetic in Z[X]/(P) for monic P.

Coefficients are stored least significant first.  Every value is immutable;
all operations return fresh objects.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


class PolyError(ArithmeticError):
    pass


class NonExactDivision(PolyError):
    pass


class DivisionByZero(PolyError, ZeroDivisionError):
    pass


class ZeroPolynomial(PolyError, ValueError):
    pass


class BothZero(PolyError, ValueError):
    pass


class RingMismatch(PolyError, ValueError):
    pass


class NotMonic(PolyError, ValueError):
    pass


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of ``X**i``; the zero polynomial is the
    empty tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> IntPoly:
        return cls((0,) * degree + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly.const(1), self
        while e:
            if e & 1:
                result = mul(result, base)
            e >>= 1
            if e:
                base = mul(base, base)
        return result

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "X" if i == 1 else f"X^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(f) -> IntPoly:
    if isinstance(f, IntPoly):
        return f
    if isinstance(f, int):
        return IntPoly.const(f)
    return IntPoly(f)


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    n = max(len(f), len(g))
    return IntPoly(f[i] + g[i] for i in range(n))


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    if f.is_zero() or g.is_zero():
        return IntPoly()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] += a * b
    return IntPoly(out)


def _long_division(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    # Integer long division; requires lc(g) to divide each leading term met.
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    rem = list(f.coeffs)
    dg, lg = g.degree, g.lc
    if len(rem) <= dg:
        return IntPoly(), f
    quot = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        t, r = divmod(c, lg)
        if r:
            raise NonExactDivision(f"leading coefficient {lg} does not divide {c}")
        quot[i - dg] = t
        for j, b in enumerate(g.coeffs):
            rem[i - dg + j] -= t * b
    return IntPoly(quot), IntPoly(rem)


def divmod_monic(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Quotient and remainder of ``f`` by a monic ``g``."""
    if g.is_zero():
        raise DivisionByZero("division by the zero polynomial")
    if not g.is_monic():
        raise NotMonic(f"divisor {g} is not monic")
    return _long_division(f, g)


def divmod_exact(f: IntPoly, g: IntPoly) -> IntPoly:
    """Return ``q`` with ``f == q * g``; raise NonExactDivision otherwise."""
    q, r = _long_division(f, g)
    if not r.is_zero():
        raise NonExactDivision(f"nonzero remainder {r} dividing {f} by {g}")
    return q


def evaluate(f: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def taylor_shift(f: IntPoly, a: int) -> IntPoly:
    """Return ``f(X + a)`` by repeated synthetic division."""
    c = list(f.coeffs)
    n = len(c) - 1
    if a == 0 or n < 1:
        return f
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            c[j] += a * c[j + 1]
    return IntPoly(c)


def substitute_power(f: IntPoly, t: int) -> IntPoly:
    """Return ``f(X**t)``."""
    if t < 1:
        raise ValueError("t must be positive")
    if t == 1 or f.is_zero():
        return f
    out = [0] * ((len(f) - 1) * t + 1)
    for i, c in enumerate(f.coeffs):
        out[i * t] = c
    return IntPoly(out)


def derivative(f: IntPoly) -> IntPoly:
    return IntPoly(i * c for i, c in enumerate(f.coeffs) if i > 0)


def content_and_primitive(f: IntPoly) -> tuple[int, IntPoly]:
    """Split ``f = c * p`` with ``p`` primitive and ``lc(p) > 0``.

    The sign of ``f`` is carried by the content.
    """
    if f.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    c = 0
    for a in f.coeffs:
        c = gcd(c, a)
    if f.lc < 0:
        c = -c
    return c, IntPoly(a // c for a in f.coeffs)


def pseudo_remainder(f: IntPoly, g: IntPoly) -> IntPoly:
    """``lc(g)**(deg f - deg g + 1) * f`` reduced modulo ``g``."""
    if g.is_zero():
        raise DivisionByZero("pseudo-division by zero")
    if f.degree < g.degree:
        return f
    rem = list(f.coeffs)
    dg, lg = g.degree, g.lc
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i]
        rem = [lg * a for a in rem]
        if c:
            for j, b in enumerate(g.coeffs):
                rem[i - dg + j] -= c * b
        rem.pop()
    return IntPoly(rem)


def _normalize(f: IntPoly) -> IntPoly:
    return -f if f.lc < 0 else f


def gcd_z(f: IntPoly, g: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[X], normalized to a positive leading coefficient.

    Computed as gcd(contents) times the gcd of primitive parts, the latter
    by a primitive pseudo-remainder sequence.
    """
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd of two zero polynomials")
    if f.is_zero():
        return _normalize(g)
    if g.is_zero():
        return _normalize(f)
    cf, pf = content_and_primitive(f)
    cg, pg = content_and_primitive(g)
    c = gcd(cf, cg)
    if pf.degree < pg.degree:
        pf, pg = pg, pf
    while not pg.is_zero():
        r = pseudo_remainder(pf, pg)
        pf = pg
        pg = IntPoly() if r.is_zero() else content_and_primitive(r)[1]
    _, h = content_and_primitive(pf)
    return h * c


@dataclass(frozen=True)
class QuotientRing:
    """The ring Z[X]/(modulus) for a monic modulus of degree >= 1."""

    modulus: IntPoly

    def __post_init__(self):
        if not isinstance(self.modulus, IntPoly):
            object.__setattr__(self, "modulus", IntPoly(self.modulus))
        if self.modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if not self.modulus.is_monic():
            raise NotMonic(f"modulus {self.modulus} is not monic")

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def element(self, coeffs: Sequence[int] | IntPoly | int) -> Residue:
        return residue_reduce(self, _coerce(coeffs))

    def zero(self) -> Residue:
        return Residue(self, (0,) * self.degree)

    def one(self) -> Residue:
        return self.element(1)

    def gen_power(self, j: int) -> Residue:
        """The class of ``X**j`` (``j >= 0``)."""
        return residue_pow(self.element(IntPoly.x()), j)


@dataclass(frozen=True)
class Residue:
    """Canonical reduced representative: exactly ``deg(modulus)`` coefficients."""

    ring: QuotientRing
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if len(self.coeffs) != self.ring.degree:
            raise ValueError(
                f"residue needs {self.ring.degree} coefficients, got {len(self.coeffs)}"
            )

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __add__(self, other: Residue) -> Residue:
        _same_ring(self, other)
        return Residue(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Residue:
        return Residue(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other: Residue) -> Residue:
        return self + (-other)

    def __mul__(self, other: Residue) -> Residue:
        return residue_mul(self, other)

    def __pow__(self, e: int) -> Residue:
        return residue_pow(self, e)


def _same_ring(a: Residue, b: Residue) -> None:
    if a.ring != b.ring:
        raise RingMismatch("residues live in different rings")


def residue_reduce(ring: QuotientRing, f: IntPoly) -> Residue:
    _, r = divmod_monic(f, ring.modulus)
    d = ring.degree
    return Residue(ring, tuple(r[i] for i in range(d)))


def residue_mul(a: Residue, b: Residue) -> Residue:
    _same_ring(a, b)
    return residue_reduce(a.ring, mul(a.to_poly(), b.to_poly()))


def residue_pow(a: Residue, e: int) -> Residue:
    if e < 0:
        raise ValueError("negative exponent")
    result, base = a.ring.one(), a
    while e:
        if e & 1:
            result = residue_mul(result, base)
        e >>= 1
        if e:
            base = residue_mul(base, base)
    return result
