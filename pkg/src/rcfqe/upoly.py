"""Dense univariate polynomials over exact rationals.

Coefficients are stored lowest degree first with no trailing zeros, so the
zero polynomial is the empty tuple.  By convention the zero polynomial has
degree 0, matching how degree is consumed by the sign-change bookkeeping in
this package.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .mpoly import Rat, Sign, sign_of


class UPoly:
    """Univariate polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "UPoly":
        return cls(())

    @classmethod
    def const(cls, c: Fraction | int) -> "UPoly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "UPoly":
        return cls((0, 1))

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned degree 0."""
        return len(self.coeffs) - 1 if self.coeffs else 0

    def lead_coeff(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x: "UPoly | Fraction | int") -> "UPoly":
        if isinstance(x, UPoly):
            return x
        return UPoly.const(x)

    def __add__(self, other: "UPoly | Fraction | int") -> "UPoly":
        if not isinstance(other, (UPoly, int, Fraction)):
            return NotImplemented
        other = UPoly._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UPoly":
        return UPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UPoly | Fraction | int") -> "UPoly":
        if not isinstance(other, (UPoly, int, Fraction)):
            return NotImplemented
        return self + (-UPoly._coerce(other))

    def __rsub__(self, other: "UPoly | Fraction | int") -> "UPoly":
        return UPoly._coerce(other) - self

    def __mul__(self, other: "UPoly | Fraction | int") -> "UPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return UPoly(tuple(k * c for k in self.coeffs)) if c else UPoly.zero()
        if not isinstance(other, UPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return UPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise ValueError("exponents are nonnegative")
        out = UPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "UPoly":
        return UPoly(tuple(c * i for i, c in enumerate(self.coeffs) if i))

    def eval(self, x: Fraction | int) -> Fraction:
        x = Fraction(x)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def shift(self, k: int) -> "UPoly":
        """Multiply by x**k."""
        if k < 0:
            raise ValueError("shift amount is nonnegative")
        if self.is_zero:
            return self
        return UPoly((Fraction(0),) * k + self.coeffs)

    def primitive(self) -> "UPoly":
        """Divide out the positive rational content; sign is preserved."""
        if self.is_zero:
            return self
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        scale = Fraction(den, num)
        return UPoly(tuple(c * scale for c in self.coeffs))

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        lc = self.lead_coeff()
        return UPoly(tuple(c / lc for c in self.coeffs))

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        chunks: list[str] = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{e}" if mag == 1 else f"{mag}*x^{e}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"UPoly({str(self)!r})"


def divmod_exact(a: UPoly, b: UPoly) -> tuple[UPoly, UPoly]:
    """Euclidean quotient and remainder over the rationals."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db, lb = b.degree, b.lead_coeff()
    quo = [Fraction(0)] * max(0, len(rem) - db)
    while len(rem) - 1 >= db and rem:
        # Strip exact-zero leads exposed by previous elimination steps.
        if not rem[-1]:
            rem.pop()
            continue
        k = len(rem) - 1 - db
        q = rem[-1] / lb
        quo[k] = q
        for i in range(db + 1):
            rem[k + i] -= q * b.coeffs[i]
        rem.pop()
    return UPoly(quo), UPoly(rem)


def rem(a: UPoly, b: UPoly) -> UPoly:
    return divmod_exact(a, b)[1]


def _int_primitive(coeffs: list[int]) -> list[int]:
    g = 0
    for v in coeffs:
        g = math.gcd(g, v)
    if g in (0, 1):
        return coeffs
    return [v // g for v in coeffs]


def _int_coeffs(p: UPoly) -> list[int]:
    # Clear denominators and divide out the integer content.
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return _int_primitive([int(c * den) for c in p.coeffs])


def _int_prem_primitive(a: list[int], b: list[int]) -> list[int]:
    # Fraction-free remainder of a by b with the content divided out after
    # every elimination step, keeping coefficient bit-size under control.
    db = len(b) - 1
    lb = b[-1]
    rem_ = list(a)
    while rem_ and len(rem_) - 1 >= db:
        head = rem_[-1]
        j = len(rem_) - 1 - db
        if lb != 1:
            rem_ = [c * lb for c in rem_]
        for i in range(db + 1):
            rem_[j + i] -= head * b[i]
        rem_.pop()
        while rem_ and rem_[-1] == 0:
            rem_.pop()
        rem_ = _int_primitive(rem_)
    return rem_


def gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic greatest common divisor (zero if both arguments are zero).

    Runs a primitive pseudo-remainder sequence in plain integers, so no
    rational arithmetic happens until the final monic normalization.
    """
    ia = _int_coeffs(a)
    ib = _int_coeffs(b)
    while ib:
        ia, ib = ib, _int_prem_primitive(ia, ib)
    return UPoly(ia).monic()


def squarefree_part(p: UPoly) -> UPoly:
    """The product of the distinct irreducible factors of p, made monic."""
    if p.is_zero or p.degree == 0:
        return p.monic()
    g = gcd(p, p.derivative())
    q, r = divmod_exact(p, g)
    if not r.is_zero:
        raise ArithmeticError("squarefree division left a remainder")
    return q.monic()


def product(ps: Sequence[UPoly]) -> UPoly:
    out = UPoly.const(1)
    for p in ps:
        out = out * p
    return out
