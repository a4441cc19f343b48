"""Tarski queries for polynomials with coefficients in outer variables.

The univariate Tarski query counts roots weighted by the sign of a second
polynomial.  Here both polynomials have coefficients that are themselves
polynomials in outer variables, so the count is computed per branch of
sign assumptions: within one branch every leading coefficient in play has
a known sign, the pseudo-remainder chain mirrors the Euclidean one up to
positive factors, and the count falls out of the same sign-change
statistic.
"""

from __future__ import annotations

from typing import Sequence

from .branching import (
    Assumps,
    branch_on_lead_coeff,
    infer_sign,
    signed_prem_sequences,
)
from .errors import InvariantViolation
from .mpoly import Sign
from .rmpoly import RMPoly, product, to_upoly
from .sturm import sign_change_statistic, tarski_query_sets


def _constant_coeffs(p: RMPoly) -> bool:
    return all(c.is_const for c in p.coeffs)


def branch_tarski_queries(
    p: RMPoly,
    eqs: Sequence[RMPoly],
    others: Sequence[RMPoly],
    assumps: Assumps = (),
    eqs_divide_p: bool = False,
) -> list[tuple[Assumps, int]]:
    """Per-branch values of the restricted Tarski query.

    The query counts, over the real roots x of p where every polynomial in
    eqs vanishes, the sign of the product of the polynomials in others,
    summed.  p must be nonzero.  The set of common roots is the root set of
    p**2 + sum of squares of eqs (of p alone when eqs is empty), so the
    count is the plain Tarski query of that polynomial against the product,
    evaluated through a branched signed pseudo-remainder chain.

    eqs_divide_p promises that every nonzero member of eqs divides p, in
    which case p**2 is left out of the sum: the common roots are then the
    common roots of eqs alone, and the chain runs at a lower degree.  The
    caller is responsible for the promise.

    Returns (assumptions, value) pairs whose assumption sets extend the
    given ones; on every branch whose assumptions hold somewhere, the value
    is the true count throughout that region.
    """
    if p.is_zero:
        raise ValueError("Tarski query needs a nonzero root polynomial")
    if (
        _constant_coeffs(p)
        and all(_constant_coeffs(q) for q in eqs)
        and all(_constant_coeffs(q) for q in others)
    ):
        value = tarski_query_sets(
            to_upoly(p, ()),
            [to_upoly(q, ()) for q in eqs],
            [to_upoly(q, ()) for q in others],
        )
        return [(assumps, value)]
    # With no equational constraints the chain can run over p itself; the
    # sum of squares is only needed to intersect root sets, and keeping the
    # chain degree down matters because branching grows with chain length.
    # Under the divisibility promise the p**2 term is redundant as well.
    live_eqs = [q for q in eqs if not q.is_zero]
    if not live_eqs:
        big = p
    else:
        big = RMPoly.zero() if eqs_divide_p else p * p
        for q in live_eqs:
            big = big + q * q
    seed = big.derivative() * product(list(others))
    out: list[tuple[Assumps, int]] = []
    for a, seq in signed_prem_sequences(big, seed, assumps):
        # The chain resolved every element's leading coefficient except the
        # first; resolve it the same way, truncating assumed-zero heads so
        # nominal degrees are true degrees on the branch.
        for a2, head in branch_on_lead_coeff(seq[0], a):
            elems = ([] if head.is_zero else [head]) + seq[1:]
            lead_signs: list[Sign] = []
            degrees: list[int] = []
            for el in elems:
                s = infer_sign(a2, el.lead_coeff())
                if s is None or s == 0:
                    raise InvariantViolation(
                        "sequence element with unresolved leading sign"
                    )
                lead_signs.append(s)
                degrees.append(el.degree)
            out.append((a2, sign_change_statistic(lead_signs, degrees)))
    return out


def threaded_tarski_queries(
    p: RMPoly,
    polys: Sequence[RMPoly],
    subsets: Sequence[tuple[tuple[int, ...], tuple[int, ...]]],
    assumps: Assumps = (),
    eqs_divide_p: bool = False,
) -> list[tuple[Assumps, tuple[int, ...]]]:
    """Evaluate one query per subset pair, threading assumptions in order.

    Each subset pair (I, J) selects index tuples into polys: I the
    polynomials forced to vanish, J the ones whose sign product is summed.
    Later queries run under the assumptions accumulated by earlier ones, so
    each returned branch carries a value tuple aligned with subsets.
    eqs_divide_p is forwarded to each query; pass it only when every
    nonzero member of polys divides p.
    """
    acc: list[tuple[Assumps, tuple[int, ...]]] = [(assumps, ())]
    for idx_eqs, idx_others in subsets:
        eqs = [polys[i] for i in idx_eqs]
        others = [polys[j] for j in idx_others]
        nxt: list[tuple[Assumps, tuple[int, ...]]] = []
        seen: set[tuple[frozenset, tuple[int, ...]]] = set()
        for a0, vals in acc:
            for a1, v in branch_tarski_queries(p, eqs, others, a0, eqs_divide_p):
                # Branches agreeing on the assumption set cover the same
                # region, so one representative per value tuple suffices.
                key = (frozenset(a1), vals + (v,))
                if key not in seen:
                    seen.add(key)
                    nxt.append((a1, vals + (v,)))
        acc = nxt
    return acc
