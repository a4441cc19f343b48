"""Sign determination: all realized sign vectors of a polynomial family.

Given polynomials in one distinguished variable with coefficients in outer
variables, this computes, per branch of coefficient-sign assumptions, the
complete list of sign vectors the family takes as the distinguished
variable runs over the reals.  Within one branch the list is constant:
the vectors at the two infinities plus the vectors at the roots of a
single covering polynomial, whose root set hits every sign-invariant
region boundary and every bounded region's interior through a root of the
derivative factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .branching import (
    Assumps,
    Branch,
    branch_on_lead_coeffs,
    infer_sign,
    record,
)
from .errors import InvariantViolation
from .mateq import matrix_equations
from .mpoly import Sign
from .rmpoly import RMPoly


@dataclass(frozen=True)
class SignDet:
    """One branch of a sign determination.

    vectors holds the sign vectors realized on the branch, aligned with
    the input polynomial order: first the vector toward positive infinity,
    then toward negative infinity, then one per realized root class.
    """

    assumps: Assumps
    vectors: tuple[tuple[Sign, ...], ...]


def root_cover_poly(qs: Sequence[RMPoly]) -> RMPoly:
    """Product of the nonzero polynomials times that product's derivative.

    Its roots include every root of every nonzero q and, between any two
    consecutive such roots, a critical point of the product, so every sign
    vector realized anywhere is realized at one of its roots or in the
    unbounded tails.  Zero polynomials are excluded: they sign to zero
    everywhere and would otherwise collapse the product.  The result is
    zero exactly when no q has positive degree, in which case every sign
    vector is constant and the tails alone cover everything.
    """
    prod = RMPoly.const(1)
    for q in qs:
        if not q.is_zero:
            prod = prod * q
    return prod * prod.derivative()


def limit_signs(
    qs: Sequence[RMPoly], assumps: Assumps
) -> tuple[tuple[Sign, ...], tuple[Sign, ...]]:
    """Sign vectors toward positive and negative infinity.

    Every nonzero q must have a leading coefficient whose sign is known on
    the branch; toward positive infinity the sign is that of the leading
    coefficient, toward negative infinity it flips on odd degree.
    """
    pos: list[Sign] = []
    neg: list[Sign] = []
    for q in qs:
        if q.is_zero:
            pos.append(0)
            neg.append(0)
            continue
        s = infer_sign(assumps, q.lead_coeff())
        if s is None or s == 0:
            raise InvariantViolation("limit sign needs a resolved leading sign")
        pos.append(s)
        neg.append(s if q.degree % 2 == 0 else -s)
    return tuple(pos), tuple(neg)


def sign_determination(
    qs: Sequence[RMPoly], assumps: Assumps = ()
) -> list[SignDet]:
    """All branches of realized sign vectors for the family qs.

    First splits until every polynomial is zero or has a resolved leading
    sign, then on each branch either reads the vectors off the limits alone
    (when nothing has positive degree) or solves the root-classification
    systems over the covering polynomial.  Branches whose assumptions hold
    nowhere may appear; they are harmless because their assumption sets
    translate to unsatisfiable constraints.
    """
    out: list[SignDet] = []
    for br in branch_on_lead_coeffs(qs, assumps):
        pos, neg = limit_signs(br.polys, br.assumps)
        cover = root_cover_poly(br.polys)
        if cover.is_zero:
            out.append(SignDet(br.assumps, (pos, neg)))
            continue
        # The cover's leading coefficient is deg * (product of resolved
        # leading coefficients) squared, hence positive on this branch;
        # recording that spares the query chains a spurious head split.
        a1 = br.assumps
        lc = cover.lead_coeff()
        if infer_sign(a1, lc) is None:
            a1 = record(a1, lc, 1)
            if a1 is None:
                continue
        for a2, meq in matrix_equations(
            cover, list(br.polys), a1, eqs_divide_p=True
        ):
            out.append(SignDet(a2, (pos, neg) + meq.signs))
    return out
