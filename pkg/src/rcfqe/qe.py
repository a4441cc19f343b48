"""Quantifier elimination, one innermost quantifier at a time.

A universal quantifier over a quantifier-free body is eliminated directly:
the body's truth at any point depends only on the sign vector of its atom
polynomials, so the body holds for all values of the bound variable
exactly when every realized sign vector satisfies it.  Sign determination
lists the realized vectors per branch of assumptions on the remaining
variables, and the branches where all vectors satisfy the body are
returned as a disjunction of their assumption formulas.  An existential
quantifier reduces to the universal one through negation.
"""

from __future__ import annotations

from .formula import (
    And,
    Atom,
    Exists,
    ExistsN,
    FalseF,
    Forall,
    ForallN,
    Formula,
    Neg,
    Or,
    TrueF,
    and_f,
    atom_polys,
    eval_with_signs,
    assumps_to_formula,
    neg_f,
    or_all,
    or_f,
)
from .rmpoly import RMPoly, univariate_in
from .signdet import sign_determination

# A trace is a list of (event, detail) pairs appended in elimination order.
Trace = list[tuple[str, str]]


def elim_forall(f: Formula, trace: Trace | None = None) -> Formula:
    """Eliminate variable 0 from a universally quantified quantifier-free body.

    The result mentions only the remaining variables, shifted down by one:
    what was variable k+1 inside the binder is variable k in the result.
    """
    polys = atom_polys(f)
    if not polys:
        # No atoms means no variables at all; the body is a constant.
        return f
    lowered: list[RMPoly] = []
    for p in polys:
        rp = univariate_in(p, 0)
        lowered.append(RMPoly(tuple(c.lower_vars() for c in rp.coeffs)))
    kept: list[Formula] = []
    total = 0
    for sd in sign_determination(lowered):
        total += 1
        if all(
            eval_with_signs(f, dict(zip(polys, vec))) for vec in sd.vectors
        ):
            kept.append(assumps_to_formula(sd.assumps))
    if trace is not None:
        trace.append(
            (
                "forall",
                f"{len(polys)} atom polynomials, "
                f"{total} branches, {len(kept)} kept",
            )
        )
    return or_all(kept)


def elim_exist(f: Formula, trace: Trace | None = None) -> Formula:
    """Eliminate variable 0 from an existentially quantified body."""
    return neg_f(elim_forall(neg_f(f), trace))


def qe(f: Formula, trace: Trace | None = None) -> Formula:
    """Quantifier-free equivalent of f over the reals.

    Quantifiers are eliminated innermost first; each elimination shifts
    the remaining variables down past the removed binder, so free
    variables of f keep their indices in the result.
    """
    if isinstance(f, (TrueF, FalseF, Atom)):
        return f
    if isinstance(f, And):
        return and_f(qe(f.left, trace), qe(f.right, trace))
    if isinstance(f, Or):
        return or_f(qe(f.left, trace), qe(f.right, trace))
    if isinstance(f, Neg):
        return neg_f(qe(f.arg, trace))
    if isinstance(f, Forall):
        return elim_forall(qe(f.body, trace), trace)
    if isinstance(f, Exists):
        return elim_exist(qe(f.body, trace), trace)
    if isinstance(f, ForallN):
        out = qe(f.body, trace)
        for _ in range(f.count):
            out = elim_forall(out, trace)
        return out
    if isinstance(f, ExistsN):
        out = qe(f.body, trace)
        for _ in range(f.count):
            out = elim_exist(out, trace)
        return out
    raise TypeError(f"not a formula: {f!r}")
