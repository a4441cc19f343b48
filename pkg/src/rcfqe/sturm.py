"""Univariate root counting via signed remainder sequences.

The central quantity is the Tarski query

    N(p, q) = sum over real roots x of p of sign(q(x)),

computed exactly from sign changes of the sequence seeded with (p, p'q):
the count equals (changes at -infinity) - (changes at +infinity), and the
signs at the two infinities are read off leading coefficients and degrees.
"""

from __future__ import annotations

from typing import Sequence

from .mpoly import Sign, sign_of
from .upoly import UPoly, gcd, rem, squarefree_part


def sign_changes(signs: Sequence[Sign]) -> int:
    """Number of sign changes in a sequence, ignoring zeros."""
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def signed_remainder_sequence(p: UPoly, q: UPoly) -> list[UPoly]:
    """The sequence p, q, -rem(p, q), ... stopping before the zero remainder.

    A zero q yields just [p].  The elements are the exact negated Euclidean
    remainders with no rescaling.
    """
    if q.is_zero:
        return [p]
    seq = [p, q]
    while True:
        nxt = -rem(seq[-2], seq[-1])
        if nxt.is_zero:
            return seq
        seq.append(nxt)


def sign_change_statistic(lead_signs: Sequence[Sign], degrees: Sequence[int]) -> int:
    """Sign changes at -infinity minus sign changes at +infinity.

    Takes a remainder sequence abstractly, as the signs of its leading
    coefficients and its degrees: at +infinity each element has the sign of
    its leading coefficient, at -infinity that sign flipped on odd degrees.
    """
    if len(lead_signs) != len(degrees):
        raise ValueError("leading signs and degrees must align")
    at_pos = list(lead_signs)
    at_neg = [s if d % 2 == 0 else -s for s, d in zip(lead_signs, degrees)]
    return sign_changes(at_neg) - sign_changes(at_pos)


def _statistic_of(seq: Sequence[UPoly]) -> int:
    return sign_change_statistic(
        [sign_of(s.lead_coeff()) for s in seq], [s.degree for s in seq]
    )


_query_cache: dict[tuple, int] = {}
_sqfree_cache: dict[UPoly, UPoly] = {}


def _squarefree_cached(p: UPoly) -> UPoly:
    hit = _sqfree_cache.get(p)
    if hit is None:
        hit = squarefree_part(p)
        if len(_sqfree_cache) > 10000:
            _sqfree_cache.clear()
        _sqfree_cache[p] = hit
    return hit


def tarski_query(p: UPoly, q: UPoly) -> int:
    """N(p, q): the sum of sign(q(x)) over the distinct real roots x of p.

    p must be nonzero.  Internally the remainder chain is content-normalized
    after each step; rescaling by positive rationals preserves every leading
    sign and degree the statistic reads.  Results are memoized: the same
    root polynomial is queried against many sign products when sign systems
    are folded together.
    """
    if p.is_zero:
        raise ValueError("Tarski query needs a nonzero root polynomial")
    key = (p, q)
    hit = _query_cache.get(key)
    if hit is not None:
        return hit
    seed = p.derivative() * q
    if seed.is_zero:
        value = 0
    else:
        seq = [p, seed.primitive()]
        while True:
            nxt = -rem(seq[-2], seq[-1])
            if nxt.is_zero:
                break
            seq.append(nxt.primitive())
        value = _statistic_of(seq)
    if len(_query_cache) > 100000:
        _query_cache.clear()
    _query_cache[key] = value
    return value


def distinct_root_count(p: UPoly) -> int:
    """Number of distinct real roots of a nonzero polynomial."""
    return tarski_query(p, UPoly.const(1))


def tarski_query_sets(
    p: UPoly, eqs: Sequence[UPoly], others: Sequence[UPoly]
) -> int:
    """Tarski query restricted to roots of p where every member of eqs vanishes.

    Returns the sum of sign(prod(others)(x)) over the distinct real x with
    p(x) = 0 and q(x) = 0 for all q in eqs.  Those x are the real roots of
    gcd(p, *eqs), so the query reduces to a plain one on its squarefree part.
    """
    if p.is_zero:
        raise ValueError("Tarski query needs a nonzero root polynomial")
    key = (p, tuple(eqs), tuple(others))
    hit = _query_cache.get(key)
    if hit is not None:
        return hit
    g = p
    for q in eqs:
        g = gcd(g, q)
        if g.degree == 0:
            _query_cache[key] = 0
            return 0
    g = _squarefree_cached(g)
    prod = UPoly.const(1)
    for q in others:
        prod = prod * q
    value = tarski_query(g, prod)
    _query_cache[key] = value
    return value
