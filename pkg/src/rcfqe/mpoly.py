"""Sparse multivariate polynomials over exact rationals.

Variables are nonnegative integers, used de Bruijn style throughout the
package: variable 0 is the innermost bound variable wherever binding
applies.  A polynomial is a canonical finite map from monomials to nonzero
rational coefficients, so equal polynomials always have identical
representations and equality is plain dict comparison.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

Rat = Fraction

# A monomial maps variable indices to positive exponents, stored as a
# tuple of (variable, exponent) pairs sorted by variable index.
Monomial = tuple[tuple[int, int], ...]

# Values for variables 0, 1, 2, ...; indices past the end read as 0.
Valuation = Sequence[Fraction]

# One of -1, 0, +1.
Sign = int


def sign_of(x: Fraction | int) -> Sign:
    """Sign of an exact number as -1, 0 or +1."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def valuation_get(v: Valuation, var: int) -> Fraction:
    """Value of a variable under a valuation; missing entries are 0."""
    if var < 0:
        raise ValueError("variable indices are nonnegative")
    return Fraction(v[var]) if var < len(v) else Fraction(0)


def _mono_key(mono: Monomial) -> tuple[int, Monomial]:
    # Graded lexicographic: total degree first, then the sorted pair tuple.
    return (sum(e for _, e in mono), mono)


_mono_mul_cache: dict[tuple[Monomial, Monomial], Monomial] = {}


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    key = (a, b)
    hit = _mono_mul_cache.get(key)
    if hit is None:
        merged = dict(a)
        for v, e in b:
            merged[v] = merged.get(v, 0) + e
        hit = tuple(sorted(merged.items()))
        if len(_mono_mul_cache) > 200000:
            _mono_mul_cache.clear()
        _mono_mul_cache[key] = hit
    return hit


def _intern_coeffs(terms: dict[Monomial, Fraction | int]) -> None:
    # Integral coefficients are stored as plain int: Python's numeric tower
    # keeps the arithmetic exact, and int operations skip the gcd
    # normalization Fraction performs on every step.  Equality and hashing
    # agree between the two representations, so callers never notice.
    for m, c in terms.items():
        if type(c) is Fraction and c.denominator == 1:
            terms[m] = c.numerator


class MPoly:
    """Canonical sparse multivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash", "_canon")

    def __init__(self, terms: Mapping[Monomial, Fraction | int] | None = None):
        clean: dict[Monomial, Fraction | int] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if not c:
                    continue
                key = tuple(sorted((int(v), int(e)) for v, e in mono))
                for v, e in key:
                    if v < 0 or e <= 0:
                        raise ValueError(f"bad monomial entry ({v}, {e})")
                acc = clean.get(key, 0) + c
                if acc:
                    clean[key] = acc
                else:
                    clean.pop(key, None)
        _intern_coeffs(clean)
        self._terms = clean
        self._hash: int | None = None
        self._canon: tuple["MPoly", Sign] | None = None

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction | int]) -> "MPoly":
        # Internal fast path: terms must already be canonical and zero-free.
        _intern_coeffs(terms)
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        p._canon = None
        return p

    @classmethod
    def zero(cls) -> "MPoly":
        return cls._raw({})

    @classmethod
    def const(cls, c: Fraction | int) -> "MPoly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, i: int, power: int = 1) -> "MPoly":
        if i < 0:
            raise ValueError("variable indices are nonnegative")
        if power < 0:
            raise ValueError("exponents are nonnegative")
        if power == 0:
            return cls.const(1)
        return cls._raw({((i, power),): 1})

    # -- basic queries ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_const(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def const_value(self) -> Fraction | None:
        """The value of a constant polynomial, or None if non-constant."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1 and () in self._terms:
            return Fraction(self._terms[()])
        return None

    def total_degree(self) -> int:
        if not self._terms:
            return 0
        return max(sum(e for _, e in m) for m in self._terms)

    def max_var(self) -> int:
        """Largest variable index appearing, or -1 for constants."""
        top = -1
        for mono in self._terms:
            for v, _ in mono:
                if v > top:
                    top = v
        return top

    def variables(self) -> set[int]:
        return {v for mono in self._terms for v, _ in mono}

    def terms(self) -> Iterator[tuple[Monomial, Fraction | int]]:
        """Terms in descending graded-lexicographic order."""
        for mono in sorted(self._terms, key=_mono_key, reverse=True):
            yield mono, self._terms[mono]

    # -- equality ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x: "MPoly | Fraction | int") -> "MPoly":
        if isinstance(x, MPoly):
            return x
        return MPoly.const(x)

    def __add__(self, other: "MPoly | Fraction | int") -> "MPoly":
        if not isinstance(other, (MPoly, int, Fraction)):
            return NotImplemented
        other = MPoly._coerce(other)
        out = dict(self._terms)
        for mono, c in other._terms.items():
            acc = out.get(mono, 0) + c
            if acc:
                out[mono] = acc
            else:
                out.pop(mono, None)
        return MPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "MPoly | Fraction | int") -> "MPoly":
        if not isinstance(other, (MPoly, int, Fraction)):
            return NotImplemented
        return self + (-MPoly._coerce(other))

    def __rsub__(self, other: "MPoly | Fraction | int") -> "MPoly":
        return MPoly._coerce(other) - self

    def __mul__(self, other: "MPoly | Fraction | int") -> "MPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly.zero()
            return MPoly._raw({m: k * other for m, k in self._terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        out: dict[Monomial, Fraction | int] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = _mono_mul(ma, mb)
                acc = out.get(mono, 0) + ca * cb
                if acc:
                    out[mono] = acc
                else:
                    out.pop(mono, None)
        return MPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("exponents are nonnegative")
        out = MPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- evaluation and variable surgery -------------------------------------

    def eval(self, v: Valuation) -> Fraction:
        """Evaluate under a valuation (missing variables read as 0)."""
        total = Fraction(0)
        for mono, c in self._terms.items():
            acc = c
            for var, e in mono:
                acc *= valuation_get(v, var) ** e
                if not acc:
                    break
            total += acc
        return total

    def degree_in(self, var: int) -> int:
        """Degree in one variable; 0 for the zero polynomial."""
        deg = 0
        for mono in self._terms:
            for v, e in mono:
                if v == var and e > deg:
                    deg = e
        return deg

    def coeff_of(self, var: int, power: int) -> "MPoly":
        """Coefficient of var**power: a polynomial not mentioning var."""
        if power < 0:
            raise ValueError("exponents are nonnegative")
        out: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            got = 0
            rest = []
            for v, e in mono:
                if v == var:
                    got = e
                else:
                    rest.append((v, e))
            if got == power:
                out[tuple(rest)] = c
        return MPoly._raw(out)

    def lower_vars(self) -> "MPoly":
        """Decrement every variable index by one.

        Rejects polynomials mentioning variable 0, since there is no index
        below it.
        """
        out: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            shifted = []
            for v, e in mono:
                if v == 0:
                    raise ValueError("cannot lower a polynomial mentioning variable 0")
                shifted.append((v - 1, e))
            out[tuple(shifted)] = c
        return MPoly._raw(out)

    def content(self) -> Fraction:
        """Positive gcd of the rational coefficients (0 for the zero poly)."""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            num = math.gcd(num, abs(c.numerator))
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def single_term(self) -> tuple[Monomial, Fraction | int] | None:
        """The (monomial, coefficient) pair when there is exactly one term."""
        if len(self._terms) == 1:
            return next(iter(self._terms.items()))
        return None

    def constant_term(self) -> Fraction:
        return Fraction(self._terms.get((), 0))

    def lead_term(self) -> tuple[Monomial, Fraction | int]:
        """Greatest term in graded-lexicographic order; poly must be nonzero."""
        if not self._terms:
            raise ValueError("the zero polynomial has no terms")
        mono = max(self._terms, key=_mono_key)
        return mono, self._terms[mono]

    def sign_canonical(self) -> tuple["MPoly", Sign]:
        """A positive-rational-multiple normal form and the flip to reach it.

        Returns (q, s) with content 1, positive leading coefficient, and
        sign(self(x)) == s * sign(q(x)) at every point.  Two polynomials are
        positive-rational multiples of each other up to sign exactly when
        their normal forms coincide.
        """
        if self._canon is None:
            if not self._terms:
                self._canon = (self, 1)
            else:
                q = self * (1 / self.content())
                if q.lead_term()[1] < 0:
                    self._canon = (-q, -1)
                else:
                    self._canon = (q, 1)
        return self._canon

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        return format_mpoly(self)

    def __repr__(self) -> str:
        return f"MPoly({format_mpoly(self)!r})"


def format_mpoly(p: MPoly, names: Sequence[str] | None = None) -> str:
    """Render a polynomial as re-parsable text.

    Variable i prints as names[i] when provided, else as "v{i}".
    """

    def var_name(i: int) -> str:
        if names is not None and i < len(names):
            return names[i]
        return f"v{i}"

    if p.is_zero:
        return "0"
    chunks: list[str] = []
    for mono, c in p.terms():
        factors = [
            var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in mono
        ]
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)
