"""Reference implementations by interval methods, for testing.

Everything here recomputes quantities the main algorithms obtain from
remainder sequences, using an unrelated technique: real roots are isolated
into rational boxes by coefficient-sign-variation bisection, signs at
roots are read off refined boxes, and quantified statements over one
variable are decided by enumerating the sign vectors realized at and
between the isolated roots.  Exactness comes from rational arithmetic
throughout; no step of the main elimination path is reused beyond basic
polynomial arithmetic.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .errors import RefinementLimitExceeded
from .formula import (
    Atom,
    Formula,
    Rel,
    atom_polys,
    eval_qf,
    eval_with_signs,
    max_var,
    neg_f,
)
from .mpoly import MPoly, Sign, Valuation, sign_of
from .rmpoly import RMPoly, univariate_in
from .upoly import UPoly, gcd, squarefree_part

REFINE_CAP = 64

# A box is (a, b) with a == b for an exact rational root, otherwise an
# open interval containing exactly one root, both endpoints non-roots of
# the isolated polynomial.
Box = tuple[Fraction, Fraction]


def cauchy_bound(p: UPoly) -> Fraction:
    """A rational B with every real root of p strictly inside (-B, B)."""
    if p.is_zero or p.degree == 0:
        return Fraction(1)
    lc = abs(p.lead_coeff())
    return 1 + max(abs(c) / lc for c in p.coeffs[:-1])


def _compose_linear(p: UPoly, a: Fraction, c: Fraction) -> UPoly:
    """p(a + c*x) by Horner."""
    arg = UPoly((a, c))
    out = UPoly.zero()
    for coeff in reversed(p.coeffs):
        out = out * arg + UPoly.const(coeff)
    return out


def _shift_one(p: UPoly) -> UPoly:
    """p(x + 1) by Horner."""
    return _compose_linear(p, Fraction(1), Fraction(1))


def descartes_count(p: UPoly, a: Fraction, b: Fraction) -> int:
    """Sign-variation bound on the roots of p in the open interval (a, b).

    The bound is never below the true count, has the same parity, and is
    exact when it is 0 or 1.
    """
    if a >= b:
        raise ValueError("interval must be nonempty")
    q = _compose_linear(p, a, b - a)
    rev = UPoly(tuple(reversed(q.coeffs)))
    t = _shift_one(rev)
    count = 0
    prev = 0
    for c in t.coeffs:
        s = sign_of(c)
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _isolate_squarefree(sf: UPoly, a: Fraction, b: Fraction) -> list[Box]:
    """Boxes for all roots of squarefree sf in (a, b), in ascending order."""
    v = descartes_count(sf, a, b)
    if v == 0:
        return []
    if v == 1:
        return [(a, b)]
    m = (a + b) / 2
    out = _isolate_squarefree(sf, a, m)
    if sf.eval(m) == 0:
        out.append((m, m))
    out.extend(_isolate_squarefree(sf, m, b))
    return out


def isolate_roots(p: UPoly) -> list[Box]:
    """Disjoint rational boxes around every real root of p, ascending.

    A box with equal endpoints is an exact rational root; otherwise the
    open interval contains exactly one root of p.
    """
    if p.is_zero:
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = squarefree_part(p)
    if sf.degree == 0:
        return []
    bound = cauchy_bound(sf)
    return _isolate_squarefree(sf, -bound, bound)


def refine_box(sf: UPoly, box: Box) -> Box:
    """Halve a one-root box of squarefree sf, keeping the root."""
    a, b = box
    if a == b:
        return box
    m = (a + b) / 2
    if sf.eval(m) == 0:
        return (m, m)
    if descartes_count(sf, a, m) == 1:
        return (a, m)
    return (m, b)


def sign_at_root(q: UPoly, sf: UPoly, box: Box) -> Sign:
    """Sign of q at the unique root of squarefree sf inside box.

    Whether the root is also a root of q is settled through gcd(sf, q);
    if not, the box is refined until q has no root inside it, at which
    point q keeps one sign across the box.
    """
    a, b = box
    if a == b:
        return sign_of(q.eval(a))
    if q.is_zero:
        return 0
    d = gcd(sf, q)
    if d.degree > 0:
        for _ in range(REFINE_CAP):
            v = descartes_count(d, a, b)
            if v == 0:
                break
            if v == 1:
                return 0
            a, b = refine_box(sf, (a, b))
            if a == b:
                return sign_of(q.eval(a))
        else:
            raise RefinementLimitExceeded("could not settle common-root test")
    for _ in range(REFINE_CAP):
        if descartes_count(q, a, b) == 0:
            return sign_of(q.eval((a + b) / 2))
        a, b = refine_box(sf, (a, b))
        if a == b:
            return sign_of(q.eval(a))
    raise RefinementLimitExceeded("could not separate the root from roots of q")


def oracle_tarski_query(p: UPoly, q: UPoly) -> int:
    """Sum of sign(q) over the distinct real roots of p, by root isolation."""
    if p.is_zero:
        raise ValueError("Tarski query needs a nonzero root polynomial")
    sf = squarefree_part(p)
    if sf.degree == 0:
        return 0
    return sum(sign_at_root(q, sf, box) for box in isolate_roots(p))


def _separate(sf: UPoly, boxes: list[Box]) -> list[Box]:
    """Refine boxes until consecutive ones have a strict gap between them."""
    out = list(boxes)
    for i in range(len(out) - 1):
        for _ in range(REFINE_CAP):
            if out[i][1] < out[i + 1][0]:
                break
            if out[i][0] != out[i][1]:
                out[i] = refine_box(sf, out[i])
            if out[i + 1][0] != out[i + 1][1]:
                out[i + 1] = refine_box(sf, out[i + 1])
        else:
            raise RefinementLimitExceeded("could not separate adjacent boxes")
    return out


def consistent_sign_vectors(polys: Sequence[UPoly]) -> set[tuple[Sign, ...]]:
    """All sign vectors the family takes over the real line.

    Sample points are the isolated roots of the product of the nonconstant
    members, one rational point in each gap between consecutive roots, and
    one point beyond each end.
    """
    prod = UPoly.const(1)
    for p in polys:
        if not p.is_zero and p.degree > 0:
            prod = prod * p
    if prod.degree == 0:
        return {tuple(sign_of(p.eval(Fraction(0))) for p in polys)}
    sf = squarefree_part(prod)
    boxes = _separate(sf, _isolate_squarefree(sf, -cauchy_bound(sf), cauchy_bound(sf)))
    if not boxes:
        # No real roots anywhere, so one sample point sees the only vector.
        return {tuple(sign_of(p.eval(Fraction(0))) for p in polys)}
    vectors: set[tuple[Sign, ...]] = set()
    for box in boxes:
        vectors.add(tuple(sign_at_root(p, sf, box) for p in polys))
    samples: list[Fraction] = [boxes[0][0] - 1, boxes[-1][1] + 1]
    for left, right in zip(boxes, boxes[1:]):
        samples.append((left[1] + right[0]) / 2)
    for t in samples:
        vectors.add(tuple(sign_of(p.eval(t)) for p in polys))
    return vectors


def _substitute_outer(p: MPoly, outer: Valuation) -> UPoly:
    """Fix all variables except 0 to outer values, leaving var 0 symbolic."""
    rp = univariate_in(p, 0)
    v = (Fraction(0),) + tuple(Fraction(x) for x in outer)
    return UPoly(tuple(c.eval(v) for c in rp.coeffs))


def oracle_forall_truth(body: Formula, outer: Valuation) -> bool:
    """Decide (for all values of variable 0) body, at concrete outer values.

    body must be quantifier-free; outer[i] is the value of variable i+1.
    The body's truth at a point depends only on the signs of its atom
    polynomials, so it holds universally exactly when every realized sign
    vector satisfies it.
    """
    polys = atom_polys(body)
    if not polys:
        return eval_qf(body, ())
    upolys = [_substitute_outer(p, outer) for p in polys]
    return all(
        eval_with_signs(body, dict(zip(polys, vec)))
        for vec in consistent_sign_vectors(upolys)
    )


def oracle_exists_truth(body: Formula, outer: Valuation) -> bool:
    """Decide (exists a value of variable 0) body, at concrete outer values."""
    return not oracle_forall_truth(neg_f(body), outer)


def sampled_equiv(
    f: Formula, g: Formula, points: Sequence[Fraction | int]
) -> bool:
    """Whether two quantifier-free formulas agree on a grid of points.

    The grid is the full cartesian power of points over every free
    variable of either formula.
    """
    nvars = max(max_var(f), max_var(g)) + 1
    pts = [Fraction(x) for x in points]
    if nvars == 0:
        return eval_qf(f, ()) == eval_qf(g, ())

    def rec(prefix: tuple[Fraction, ...]) -> bool:
        if len(prefix) == nvars:
            return eval_qf(f, prefix) == eval_qf(g, prefix)
        return all(rec(prefix + (x,)) for x in pts)

    return rec(())


# -- random instance generators, deterministic under a seeded Random --------


def random_upoly(
    rng: random.Random, max_degree: int = 5, coeff_bound: int = 9
) -> UPoly:
    """Random nonzero univariate polynomial with small integer coefficients."""
    while True:
        deg = rng.randint(0, max_degree)
        coeffs = [rng.randint(-coeff_bound, coeff_bound) for _ in range(deg + 1)]
        p = UPoly(coeffs)
        if not p.is_zero:
            return p


def random_mpoly(
    rng: random.Random,
    nvars: int = 2,
    max_terms: int = 4,
    max_exp: int = 2,
    coeff_bound: int = 4,
) -> MPoly:
    """Random multivariate polynomial; may be zero."""
    out = MPoly.zero()
    for _ in range(rng.randint(1, max_terms)):
        mono = tuple(
            (v, e)
            for v in range(nvars)
            if (e := rng.randint(0, max_exp)) > 0
        )
        out = out + MPoly({mono: rng.randint(-coeff_bound, coeff_bound)})
    return out


def random_rmpoly(
    rng: random.Random,
    nvars_outer: int = 1,
    max_degree: int = 3,
    max_terms: int = 2,
    max_exp: int = 2,
    coeff_bound: int = 3,
) -> RMPoly:
    """Random polynomial in the distinguished variable with outer coefficients."""
    coeffs = []
    for _ in range(rng.randint(1, max_degree + 1)):
        coeffs.append(
            random_mpoly(rng, nvars_outer, max_terms, max_exp, coeff_bound)
            if nvars_outer
            else MPoly.const(rng.randint(-coeff_bound, coeff_bound))
        )
    return RMPoly(coeffs)


def random_qf_formula(
    rng: random.Random, nvars: int = 2, depth: int = 3, **poly_kw
) -> Formula:
    """Random quantifier-free formula over nvars variables."""
    from .formula import and_f, or_f

    if depth == 0 or rng.random() < 0.35:
        p = random_mpoly(rng, nvars, **poly_kw)
        rel = rng.choice((Rel.EQ, Rel.LESS, Rel.LEQ))
        return Atom(rel, p)
    kind = rng.randrange(3)
    if kind == 0:
        return neg_f(random_qf_formula(rng, nvars, depth - 1, **poly_kw))
    left = random_qf_formula(rng, nvars, depth - 1, **poly_kw)
    right = random_qf_formula(rng, nvars, depth - 1, **poly_kw)
    return and_f(left, right) if kind == 1 else or_f(left, right)
