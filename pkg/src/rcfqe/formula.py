"""First-order formulas over real polynomial arithmetic.

Atoms compare a polynomial with zero.  Quantifiers bind variables de
Bruijn style: the bound variable of the innermost enclosing binder is
variable 0, and free variables continue above the binder depth.  The
n-ary binder forms bind variables 0 through n-1 at once and behave
exactly like n nested single binders.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Union

from .branching import Assumps, infer_sign
from .mpoly import MPoly, Sign, Valuation


class Rel(Enum):
    """Relation of a polynomial to zero."""

    EQ = "="
    LESS = "<"
    LEQ = "<="


@dataclass(frozen=True)
class TrueF:
    pass


@dataclass(frozen=True)
class FalseF:
    pass


@dataclass(frozen=True)
class Atom:
    rel: Rel
    poly: MPoly


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Neg:
    arg: "Formula"


@dataclass(frozen=True)
class Exists:
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    body: "Formula"


@dataclass(frozen=True)
class ExistsN:
    count: int
    body: "Formula"


@dataclass(frozen=True)
class ForallN:
    count: int
    body: "Formula"


Formula = Union[
    TrueF, FalseF, Atom, And, Or, Neg, Exists, Forall, ExistsN, ForallN
]

TRUE = TrueF()
FALSE = FalseF()


def neg_f(f: Formula) -> Formula:
    """Negation with the obvious collapses."""
    if isinstance(f, TrueF):
        return FALSE
    if isinstance(f, FalseF):
        return TRUE
    if isinstance(f, Neg):
        return f.arg
    return Neg(f)


def and_f(a: Formula, b: Formula) -> Formula:
    if isinstance(a, FalseF) or isinstance(b, FalseF):
        return FALSE
    if isinstance(a, TrueF):
        return b
    if isinstance(b, TrueF):
        return a
    return And(a, b)


def or_f(a: Formula, b: Formula) -> Formula:
    if isinstance(a, TrueF) or isinstance(b, TrueF):
        return TRUE
    if isinstance(a, FalseF):
        return b
    if isinstance(b, FalseF):
        return a
    return Or(a, b)


def and_all(fs: Iterable[Formula]) -> Formula:
    """Conjunction of fs with duplicates dropped, TRUE when empty."""
    out: Formula = TRUE
    seen: set[Formula] = set()
    for f in fs:
        if f in seen:
            continue
        seen.add(f)
        out = and_f(out, f)
    return out


def or_all(fs: Iterable[Formula]) -> Formula:
    """Disjunction of fs with duplicates dropped, FALSE when empty.

    The tree is balanced by pairwise folding, so recursive formula walks
    stay at logarithmic depth however many disjuncts there are.
    """
    parts: list[Formula] = []
    seen: set[Formula] = set()
    for f in fs:
        if f in seen:
            continue
        seen.add(f)
        parts.append(f)
    if not parts:
        return FALSE
    while len(parts) > 1:
        nxt = [
            or_f(parts[i], parts[i + 1]) if i + 1 < len(parts) else parts[i]
            for i in range(0, len(parts), 2)
        ]
        parts = nxt
    return parts[0]


def count_quantifiers(f: Formula) -> int:
    """Total number of bound variables in the formula."""
    if isinstance(f, (TrueF, FalseF, Atom)):
        return 0
    if isinstance(f, (And, Or)):
        return count_quantifiers(f.left) + count_quantifiers(f.right)
    if isinstance(f, Neg):
        return count_quantifiers(f.arg)
    if isinstance(f, (Exists, Forall)):
        return 1 + count_quantifiers(f.body)
    if isinstance(f, (ExistsN, ForallN)):
        return f.count + count_quantifiers(f.body)
    raise TypeError(f"not a formula: {f!r}")


def is_quantifier_free(f: Formula) -> bool:
    return count_quantifiers(f) == 0


def max_var(f: Formula, depth: int = 0) -> int:
    """Largest free variable index, or -1 when the formula is closed.

    Indices are reported relative to the outside of the formula: a
    variable bound by an enclosing binder inside f does not count, and a
    free occurrence of variable k at binder depth d counts as k - d.
    """
    if isinstance(f, (TrueF, FalseF)):
        return -1
    if isinstance(f, Atom):
        top = -1
        for v in f.poly.variables():
            if v >= depth:
                top = max(top, v - depth)
        return top
    if isinstance(f, (And, Or)):
        return max(max_var(f.left, depth), max_var(f.right, depth))
    if isinstance(f, Neg):
        return max_var(f.arg, depth)
    if isinstance(f, (Exists, Forall)):
        return max_var(f.body, depth + 1)
    if isinstance(f, (ExistsN, ForallN)):
        return max_var(f.body, depth + f.count)
    raise TypeError(f"not a formula: {f!r}")


def _atom_true(rel: Rel, s: Sign) -> bool:
    if rel is Rel.EQ:
        return s == 0
    if rel is Rel.LESS:
        return s < 0
    return s <= 0


def eval_qf(f: Formula, v: Valuation) -> bool:
    """Truth of a quantifier-free formula at a point."""
    if isinstance(f, TrueF):
        return True
    if isinstance(f, FalseF):
        return False
    if isinstance(f, Atom):
        c = f.poly.eval(v)
        return _atom_true(f.rel, 1 if c > 0 else -1 if c < 0 else 0)
    if isinstance(f, And):
        return eval_qf(f.left, v) and eval_qf(f.right, v)
    if isinstance(f, Or):
        return eval_qf(f.left, v) or eval_qf(f.right, v)
    if isinstance(f, Neg):
        return not eval_qf(f.arg, v)
    raise ValueError("formula contains a quantifier")


def atom_polys(f: Formula) -> list[MPoly]:
    """Distinct atom polynomials in first-occurrence order.

    The formula must be quantifier-free; binders would change what the
    variable indices inside atoms refer to.
    """
    out: list[MPoly] = []
    seen: set[MPoly] = set()

    def walk(g: Formula) -> None:
        if isinstance(g, (TrueF, FalseF)):
            return
        if isinstance(g, Atom):
            if g.poly not in seen:
                seen.add(g.poly)
                out.append(g.poly)
            return
        if isinstance(g, (And, Or)):
            walk(g.left)
            walk(g.right)
            return
        if isinstance(g, Neg):
            walk(g.arg)
            return
        raise ValueError("formula contains a quantifier")

    walk(f)
    return out


def eval_with_signs(f: Formula, signs: Mapping[MPoly, Sign]) -> bool:
    """Truth of a quantifier-free formula given each atom polynomial's sign."""
    if isinstance(f, TrueF):
        return True
    if isinstance(f, FalseF):
        return False
    if isinstance(f, Atom):
        return _atom_true(f.rel, signs[f.poly])
    if isinstance(f, And):
        return eval_with_signs(f.left, signs) and eval_with_signs(f.right, signs)
    if isinstance(f, Or):
        return eval_with_signs(f.left, signs) or eval_with_signs(f.right, signs)
    if isinstance(f, Neg):
        return not eval_with_signs(f.arg, signs)
    raise ValueError("formula contains a quantifier")


def assumps_to_formula(assumps: Assumps) -> Formula:
    """The conjunction asserting each assumed sign.

    A zero sign becomes an equation, a negative sign a strict comparison
    of the polynomial with zero, and a positive sign a strict comparison
    of its negation.  Entries whose sign already follows from the earlier
    ones are dropped; the constraint region is unchanged.
    """
    parts: list[Formula] = []
    for i, (p, s) in enumerate(assumps):
        if infer_sign(assumps[:i], p) == s:
            continue
        if s == 0:
            parts.append(Atom(Rel.EQ, p))
        elif s < 0:
            parts.append(Atom(Rel.LESS, p))
        else:
            parts.append(Atom(Rel.LESS, -p))
    return and_all(parts)
