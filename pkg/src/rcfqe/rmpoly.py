"""Multivariate polynomials viewed as univariate in one distinguished variable.

The distinguished variable is implicit: an RMPoly is just a coefficient
tuple, lowest degree first with trailing zeros stripped, where each
coefficient is an MPoly over the remaining variables.  Elimination always
works on the innermost variable, so conversions in this package use
variable 0 as the distinguished one, but the representation itself is
index-agnostic.

As with UPoly, the zero polynomial has degree 0 by convention.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .mpoly import MPoly, Valuation
from .upoly import UPoly


class RMPoly:
    """Univariate polynomial whose coefficients are multivariate polynomials."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[MPoly] = ()):
        cs = list(coeffs)
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs: tuple[MPoly, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "RMPoly":
        return cls(())

    @classmethod
    def const(cls, c: MPoly | Fraction | int) -> "RMPoly":
        if not isinstance(c, MPoly):
            c = MPoly.const(c)
        return cls((c,))

    @classmethod
    def x(cls) -> "RMPoly":
        return cls((MPoly.zero(), MPoly.const(1)))

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree in the distinguished variable; 0 for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    def lead_coeff(self) -> MPoly:
        return self.coeffs[-1] if self.coeffs else MPoly.zero()

    def drop_lead(self) -> "RMPoly":
        """The polynomial with its leading coefficient removed."""
        return RMPoly(self.coeffs[:-1])

    @property
    def is_const(self) -> bool:
        """True when the degree is 0, i.e. a single multivariate coefficient."""
        return len(self.coeffs) <= 1

    def const_coeff(self) -> MPoly:
        """The coefficient of a degree-0 polynomial."""
        if len(self.coeffs) > 1:
            raise ValueError("polynomial has positive degree")
        return self.coeffs[0] if self.coeffs else MPoly.zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RMPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "RMPoly") -> "RMPoly":
        if not isinstance(other, RMPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return RMPoly(out)

    def __neg__(self) -> "RMPoly":
        return RMPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RMPoly") -> "RMPoly":
        if not isinstance(other, RMPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "RMPoly | MPoly | Fraction | int") -> "RMPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(other)
        if isinstance(other, MPoly):
            if other.is_zero:
                return RMPoly.zero()
            return RMPoly(tuple(c * other for c in self.coeffs))
        if not isinstance(other, RMPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RMPoly.zero()
        out = [MPoly.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return RMPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RMPoly":
        if n < 0:
            raise ValueError("exponents are nonnegative")
        out = RMPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "RMPoly":
        return RMPoly(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        chunks = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c.is_zero:
                continue
            if e == 0:
                chunks.append(f"({c})")
            elif e == 1:
                chunks.append(f"({c})*x")
            else:
                chunks.append(f"({c})*x^{e}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"RMPoly({str(self)!r})"


def univariate_in(p: MPoly, var: int) -> RMPoly:
    """View p as univariate in var; coefficients keep their original indices."""
    deg = p.degree_in(var)
    return RMPoly(tuple(p.coeff_of(var, i) for i in range(deg + 1)))


def to_mpoly(p: RMPoly, var: int) -> MPoly:
    """Rebuild a multivariate polynomial from its univariate view in var."""
    out = MPoly.zero()
    for i, c in enumerate(p.coeffs):
        out = out + c * MPoly.var(var, i) if i else out + c
    return out


def to_upoly(p: RMPoly, v: Valuation) -> UPoly:
    """Evaluate every coefficient under a valuation of the other variables."""
    return UPoly(tuple(c.eval(v) for c in p.coeffs))


def pseudo_divmod(p: RMPoly, q: RMPoly) -> tuple[RMPoly, RMPoly, int]:
    """Pseudo-division: lc(q)**e * p == quo * q + rem with deg rem < deg q.

    e is max(0, deg p - deg q + 1), counted from the nominal degrees, so the
    identity holds verbatim even when leading coefficients vanish under a
    later substitution.  q must be nonzero.
    """
    if q.is_zero:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    e = max(0, p.degree - q.degree + 1)
    lq = q.lead_coeff()
    dq = q.degree
    quo = [MPoly.zero()] * max(1, e)
    rem = list(p.coeffs)
    steps = e
    while steps > 0:
        steps -= 1
        if len(rem) - 1 >= dq and rem:
            k = len(rem) - 1 - dq
            head = rem[-1]
            # Scale everything so the head eliminates without division.
            rem = [c * lq for c in rem]
            quo = [c * lq for c in quo]
            quo[k] = quo[k] + head
            for i in range(dq + 1):
                rem[k + i] = rem[k + i] - head * q.coeffs[i]
            rem.pop()
            while rem and rem[-1].is_zero:
                rem.pop()
        else:
            # Degree already dropped below q: keep scaling to honor the
            # advertised exponent e.
            rem = [c * lq for c in rem]
            quo = [c * lq for c in quo]
    return RMPoly(quo), RMPoly(rem), e


def pseudo_rem(p: RMPoly, q: RMPoly) -> RMPoly:
    return pseudo_divmod(p, q)[1]


def scaled_pseudo_rem(p: RMPoly, q: RMPoly) -> tuple[RMPoly, int]:
    """Remainder of fraction-free elimination, up to a positive rational.

    Eliminates the head of p against q as in pseudo_divmod, but skips the
    idle scalings, tracks no quotient, and divides the remainder by its
    positive rational content after every step so integer coefficients do
    not compound.  Returns the reduced remainder and the number k of
    elimination steps performed: the result is a positive rational multiple
    of lc(q)**k times the Euclidean remainder of p by q, wherever lc(q) is
    nonzero.
    """
    if q.is_zero:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    lq = q.lead_coeff()
    dq = q.degree
    rem = list(p.coeffs)
    k = 0
    while rem and len(rem) - 1 >= dq:
        j = len(rem) - 1 - dq
        head = rem[-1]
        rem = [c * lq for c in rem]
        for i in range(dq + 1):
            rem[j + i] = rem[j + i] - head * q.coeffs[i]
        rem.pop()
        while rem and rem[-1].is_zero:
            rem.pop()
        rem = _divide_content(rem)
        k += 1
    return RMPoly(rem), k


def _divide_content(coeffs: list[MPoly]) -> list[MPoly]:
    num = 0
    den = 1
    for c in coeffs:
        if c.is_zero:
            continue
        fc = c.content()
        num = math.gcd(num, abs(fc.numerator))
        den = den * fc.denominator // math.gcd(den, fc.denominator)
    if num in (0, 1) and den == 1:
        return coeffs
    scale = Fraction(den, num)
    return [c * scale for c in coeffs]


def product(ps: Sequence[RMPoly]) -> RMPoly:
    out = RMPoly.const(1)
    for p in ps:
        out = out * p
    return out


def content_normalize(p: RMPoly) -> RMPoly:
    """Divide out the positive rational content of all coefficients.

    The result has the same sign as p everywhere, which is the only property
    the sign-based algorithms in this package rely on.
    """
    if p.is_zero:
        return p
    num = 0
    den = 1
    for c in p.coeffs:
        k = c.content()
        num = math.gcd(num, k.numerator)
        den = den * k.denominator // math.gcd(den, k.denominator)
    if num == 0:
        return p
    scale = Fraction(den, num)
    if scale == 1:
        return p
    return RMPoly(tuple(c * scale for c in p.coeffs))
