"""Sign assumptions on coefficient polynomials, and case splits over them.

Eliminating a variable requires knowing the signs of leading coefficients,
which are polynomials in the remaining variables.  Rather than deciding
those signs, the algorithms branch: each branch carries a tuple of
(polynomial, sign) assumptions that every later step may consult, and the
final answer is assembled per branch.  Assumptions only ever accumulate
along a branch, and lookups return the first match, so recorded facts are
never reinterpreted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .mpoly import MPoly, Sign, Valuation, sign_of
from .rmpoly import RMPoly, content_normalize, scaled_pseudo_rem
from .upoly import UPoly, divmod_exact as udivmod, gcd as ugcd

# Each entry asserts sign_of(p(point)) == s for the points of the branch.
Assumps = tuple[tuple[MPoly, Sign], ...]


def lookup_sign(assumps: Assumps, p: MPoly) -> Sign | None:
    """First recorded sign for p, or None if p was never assumed."""
    for q, s in assumps:
        if q == p:
            return s
    return None


def known_sign(assumps: Assumps, p: MPoly) -> Sign | None:
    """Sign of p when decidable: constants directly, otherwise by lookup."""
    c = p.const_value()
    if c is not None:
        return sign_of(c)
    return lookup_sign(assumps, p)


def satisfies(assumps: Assumps, v: Valuation) -> bool:
    """Whether a concrete point realizes every assumed sign."""
    return all(sign_of(p.eval(v)) == s for p, s in assumps)


def semidefinite_sign(p: MPoly) -> tuple[Sign, bool] | None:
    """(sign, strict) when p visibly never crosses zero, else None.

    Applies when every monomial has all-even exponents and every
    coefficient shares one sign: p then stays on that sign's side of zero,
    strictly so when a constant term bounds it away from zero.
    """
    sgn: Sign = 0
    has_const = False
    for mono, c in p._terms.items():  # noqa: SLF001  (hot path, same package)
        if any(e % 2 for _, e in mono):
            return None
        s = 1 if c > 0 else -1
        if sgn and s != sgn:
            return None
        sgn = s
        if not mono:
            has_const = True
    if sgn == 0:
        return None
    return sgn, has_const


def _var_sign(assumps: Assumps, var: int) -> Sign | None:
    probe = MPoly.var(var)
    for q, s in assumps:
        if q == probe:
            return s
    return None


def _monomial_sign(
    assumps: Assumps, mono: tuple[tuple[int, int], ...], coeff: Fraction | int
) -> Sign | None:
    """Sign of a one-term polynomial forced by the assumptions, if any."""
    # A recorded zero of a one-variable term zeroes that variable, hence
    # every monomial mentioning it.
    for q, sq in assumps:
        st = q.single_term()
        if st is None or sq != 0:
            continue
        support_q = {v for v, _ in st[0]}
        if len(support_q) == 1 and support_q <= {v for v, _ in mono}:
            return 0
    # Per-variable evaluation from recorded bare-variable signs.
    out: Sign = 1 if coeff > 0 else -1
    pending = []
    for v, e in mono:
        sv = _var_sign(assumps, v)
        if sv is None:
            pending.append((v, e))
            continue
        if sv == 0:
            return 0
        if e % 2:
            out *= sv
    if not pending:
        return out
    # Leftover variables with even exponents only need to be nonzero, which
    # any nonzero single-term assumption covering them certifies.
    if all(e % 2 == 0 for _, e in pending):
        need = {v for v, _ in pending}
        for q, sq in assumps:
            st = q.single_term()
            if st is None or sq == 0:
                continue
            if need <= {v for v, _ in st[0]}:
                return out
    return None


def infer_sign(assumps: Assumps, p: MPoly) -> Sign | None:
    """Sign of p forced by the assumptions.

    Tries the cheap syntactic rules first, then the exact one-variable
    realizability check.  Returns None when nothing applies; never guesses.
    """
    s = _cheap_sign(assumps, p)
    if s is not None:
        return s
    ok = _univar_realizable(assumps, p)
    if ok is not None and len(ok) == 1:
        return next(iter(ok))
    return None


def _cheap_sign(assumps: Assumps, p: MPoly) -> Sign | None:
    """Sign of p forced by the assumptions through cheap syntactic rules.

    Checks, in order: constants and recorded facts, strict semidefinite
    shape, one-term reasoning over recorded variable signs, agreement with
    a recorded positive-rational multiple, and being the square of a
    recorded nonzero polynomial.  Every rule here stays derivable when the
    assumptions grow.  Returns None when nothing applies; never guesses.
    """
    s = known_sign(assumps, p)
    if s is not None:
        return s
    sd = semidefinite_sign(p)
    if sd is not None and sd[1]:
        return sd[0]
    st = p.single_term()
    if st is not None:
        m = _monomial_sign(assumps, st[0], st[1])
        if m is not None:
            return m
    canon, flip = p.sign_canonical()
    for q, sq in assumps:
        qc, qflip = q.sign_canonical()
        if qc == canon:
            return flip * qflip * sq
    # Squares of polynomials already assumed nonzero are positive; this
    # resolves the head of a sum-of-squares chain whose base was recorded.
    deg2 = p.total_degree()
    if deg2 and deg2 % 2 == 0:
        for q, sq in assumps:
            if sq != 0 and q.total_degree() * 2 == deg2 and canon == q.sign_canonical()[0] ** 2:
                return flip
    return None


def record(assumps: Assumps, p: MPoly, s: Sign) -> Assumps | None:
    """Append the fact sign(p) = s, or None when it makes the set dead.

    The fact is stored against p's normal form, so positive-rational
    multiples of one polynomial collapse to a single entry and branches
    that learn the same facts in the same order carry identical assumption
    tuples.  Facts already derivable are skipped.  A new fact that
    contradicts a derivable one, or that lets an earlier entry be re-derived
    with a different sign, proves the assumptions hold nowhere; None tells
    the caller to drop the branch rather than carry an inconsistent set.
    """
    canon, flip = p.sign_canonical()
    cs = flip * s
    prior = _cheap_sign(assumps, canon)
    if prior is not None:
        return assumps if prior == cs else None
    new: Assumps = ((canon, cs),)
    for g, sg in assumps:
        d = _cheap_sign(new, g)
        if d is not None and d != sg:
            return None
    return assumps + new


def resolve_sign(assumps: Assumps, p: MPoly) -> tuple[Sign | None, Assumps | None]:
    """Sign of p forced by the assumptions, recording when needed.

    The syntactic rules re-derive their conclusions under any extension of
    the assumptions, so their results need no trace.  A sign forced only by
    the exact one-variable check may stop being derivable once more facts
    push the check over its size budget, so that conclusion is recorded
    before returning.  The second component is None when recording exposed
    the assumptions as unsatisfiable; the caller should drop the branch.
    """
    s = _cheap_sign(assumps, p)
    if s is not None:
        return s, assumps
    ok = _univar_realizable(assumps, p)
    if ok is not None and len(ok) == 1:
        s = next(iter(ok))
        return s, record(assumps, p, s)
    return None, assumps


_UNIVAR_FILTER_CAP = 8
_UNIVAR_DEGREE_CAP = 16
_univar_cache: dict[tuple, frozenset[Sign]] = {}


def _univar_realizable(assumps: Assumps, p: MPoly) -> frozenset[Sign] | None:
    """Realizable signs of a one-variable p under the one-variable facts.

    None means the check does not apply: p mentions several variables or
    none, or the constraint system is large enough that the exact check
    would cost more than the branches it prunes.
    """
    vs = p.variables()
    if len(vs) != 1:
        return None
    v = next(iter(vs))
    dp = p.total_degree()
    if dp > _UNIVAR_DEGREE_CAP:
        return None
    ranked = sorted(
        ((g, sg) for g, sg in assumps if g.variables() == {v}),
        key=lambda gs: (gs[0].total_degree(), hash(gs[0]), gs[1]),
    )
    # Constraints that fit the budget, smallest first.  Ignoring the rest
    # only widens the answer, which stays sound for pruning and forcing.
    kept: list[tuple[MPoly, Sign]] = []
    total = dp
    for g, sg in ranked:
        d = g.total_degree()
        if len(kept) == _UNIVAR_FILTER_CAP or total + d > _UNIVAR_DEGREE_CAP:
            break
        kept.append((g, sg))
        total += d
    return _realizable_signs(tuple(kept), p, v)


def _realizable_signs(
    cons: tuple[tuple[MPoly, Sign], ...], p: MPoly, v: int
) -> frozenset[Sign]:
    """Signs p can take where every constraint in cons holds, exactly.

    All polynomials involved depend on the single variable v, so the
    question is univariate and the machinery of this package answers it
    without any further branching: every coefficient is constant once v is
    read as the distinguished variable, and the realized sign vectors of
    the family come straight off the constant-coefficient query path.
    """
    canon, flip = p.sign_canonical()
    key = (cons, canon)
    hit = _univar_cache.get(key)
    if hit is None:
        from .signdet import sign_determination

        def as_rmpoly(g: MPoly) -> RMPoly:
            u = _upoly_in(g, v)
            return RMPoly(tuple(MPoly.const(c) for c in u.coeffs))

        fam = [as_rmpoly(g) for g, _ in cons] + [as_rmpoly(canon)]
        want = tuple(s for _, s in cons)
        out = set()
        for det in sign_determination(fam):
            for vec in det.vectors:
                if vec[:-1] == want:
                    out.add(vec[-1])
        hit = frozenset(out)
        if len(_univar_cache) > 20000:
            _univar_cache.clear()
        _univar_cache[key] = hit
    if flip > 0:
        return hit
    return frozenset(-s for s in hit)


def branch_signs(assumps: Assumps, p: MPoly) -> list[Sign]:
    """Candidate signs for p worth exploring, positive then negative then zero.

    Signs refuted by infer_sign or by semidefiniteness are dropped, and for
    a polynomial in one variable the candidates are cut down further to the
    signs actually realizable alongside the one-variable assumptions; every
    point satisfying the assumptions realizes one of the returned signs, so
    skipping the others loses nothing.  An empty list means the assumptions
    hold nowhere.
    """
    s = infer_sign(assumps, p)
    if s is not None:
        candidates = [s]
    else:
        sd = semidefinite_sign(p)
        candidates = [sd[0], 0] if sd is not None else [1, -1, 0]
    if len(candidates) > 1:
        ok = _univar_realizable(assumps, p)
        if ok is not None:
            candidates = [c for c in candidates if c in ok]
    return candidates


@dataclass(frozen=True)
class Branch:
    """One case of a split: sign assumptions plus the simplified polynomials.

    Every polynomial is either zero or has a leading coefficient whose sign
    is nonzero under the assumptions; coefficients assumed zero have been
    truncated away, so nominal degrees are true degrees on the branch.
    """

    assumps: Assumps
    polys: tuple[RMPoly, ...]


def branch_on_lead_coeff(
    p: RMPoly, assumps: Assumps = ()
) -> list[tuple[Assumps, RMPoly]]:
    """Split until p's leading coefficient has a known nonzero sign.

    Returns (assumptions, polynomial) pairs.  In each, the polynomial is p
    with every leading coefficient that is zero on the branch truncated
    away; it is either zero or has a definitely nonzero leading coefficient.
    New cases are explored positive first, then negative, then zero.
    """
    if p.is_zero:
        return [(assumps, p)]
    c = p.lead_coeff()
    s, a0 = resolve_sign(assumps, c)
    if s is not None:
        if a0 is None:
            return []
        if s == 0:
            return branch_on_lead_coeff(p.drop_lead(), a0)
        return [(a0, p)]
    out: list[tuple[Assumps, RMPoly]] = []
    for sg in branch_signs(assumps, c):
        a2 = record(assumps, c, sg)
        if a2 is None:
            continue
        if sg == 0:
            out.extend(branch_on_lead_coeff(p.drop_lead(), a2))
        else:
            out.append((a2, p))
    return out


def branch_on_lead_coeffs(
    ps: Sequence[RMPoly], assumps: Assumps = ()
) -> list[Branch]:
    """Split until every polynomial in ps has a resolved leading coefficient.

    Assumptions thread left to right: later polynomials are resolved under
    the accumulated assumptions of earlier ones, so each returned branch
    covers all of ps consistently.
    """
    branches = [Branch(assumps, ())]
    for p in ps:
        nxt: list[Branch] = []
        for br in branches:
            for a2, p2 in branch_on_lead_coeff(p, br.assumps):
                nxt.append(Branch(a2, br.polys + (p2,)))
        branches = nxt
    return branches


def signed_pseudo_rem(p: RMPoly, q: RMPoly) -> RMPoly:
    """Pseudo-remainder of p by q, scaled to act like a negated remainder.

    Fraction-free elimination leaves a positive multiple of lc(q)**k times
    the Euclidean remainder, with k the number of steps taken.  Multiplying
    by -1 when k is even and by -lc(q) when k is odd makes the total power
    of lc(q) even, so the result is a positive multiple of the negated
    Euclidean remainder at every point where lc(q) is nonzero.  The
    positive rational content is divided out afterwards, which changes no
    sign anywhere.
    """
    if q.is_zero:
        raise ZeroDivisionError("pseudo-division by the zero polynomial")
    rem, k = scaled_pseudo_rem(p, q)
    if k % 2 == 0:
        out = -rem
    else:
        out = rem * (-q.lead_coeff())
    return content_normalize(out)


def _upoly_in(c: MPoly, var: int) -> UPoly:
    """A single-variable coefficient polynomial as a dense univariate."""
    return UPoly(
        tuple(
            c.coeff_of(var, k).const_value() or Fraction(0)
            for k in range(c.degree_in(var) + 1)
        )
    )


def _mpoly_from(u: UPoly, var: int) -> MPoly:
    out = MPoly.const(u.coeffs[0])
    for k, coeff in enumerate(u.coeffs[1:], start=1):
        if coeff:
            out = out + MPoly.var(var, k) * coeff
    return out


def _content_split(r: RMPoly) -> tuple[MPoly, RMPoly] | None:
    """Common single-variable polynomial content of the coefficients.

    Returns (g, reduced) with r equal to g times reduced coefficientwise
    and g of positive degree, when every coefficient is a polynomial in one
    shared outer variable; None otherwise or when the content is trivial.
    Dividing a chain element by g and branching on g's sign keeps the whole
    sequence a pointwise positive multiple of the Euclidean one while
    stopping the coefficient degrees from compounding step over step.
    """
    var: int | None = None
    for c in r.coeffs:
        vs = c.variables()
        if len(vs) > 1:
            return None
        if vs:
            v = next(iter(vs))
            if var is None:
                var = v
            elif v != var:
                return None
    if var is None:
        return None
    ups = [_upoly_in(c, var) for c in r.coeffs]
    g = UPoly.zero()
    for u in ups:
        g = ugcd(g, u)
        if not g.is_zero and g.degree == 0:
            return None
    if g.is_zero or g.degree == 0:
        return None
    g = g.primitive()
    reduced = RMPoly(
        tuple(
            _mpoly_from(udivmod(u, g)[0], var) if not u.is_zero else MPoly.zero()
            for u in ups
        )
    )
    return _mpoly_from(g, var), content_normalize(reduced)


def _reduced_remainders(
    p: RMPoly, q: RMPoly, assumps: Assumps
) -> list[tuple[Assumps, RMPoly]]:
    """The next chain element after (p, q), content-reduced, per branch.

    When the signed pseudo-remainder carries a nontrivial coefficient
    content g, each branch fixes a sign for g: where g is zero the element
    vanishes identically, elsewhere the quotient times that sign keeps the
    element's pointwise sign.
    """
    r = signed_pseudo_rem(p, q)
    ext = _content_split(r)
    if ext is None:
        return [(assumps, r)]
    g, red = ext
    s, a0 = resolve_sign(assumps, g)
    if s is not None:
        if a0 is None:
            return []
        return [(a0, RMPoly.zero() if s == 0 else red * s)]
    out: list[tuple[Assumps, RMPoly]] = []
    for sg in branch_signs(assumps, g):
        a2 = record(assumps, g, sg)
        if a2 is None:
            continue
        out.append((a2, RMPoly.zero() if sg == 0 else red * sg))
    return out


def signed_prem_sequences(
    p: RMPoly, q: RMPoly, assumps: Assumps = ()
) -> list[tuple[Assumps, list[RMPoly]]]:
    """All branches of the signed pseudo-remainder sequence starting (p, q).

    On each branch, wherever its assumptions hold, the returned sequence is
    elementwise a positive multiple of the Euclidean signed remainder
    sequence of the (branch-simplified) seed pair.  Every element after the
    first has a leading coefficient with known nonzero sign under the
    branch assumptions; the first element is passed through untouched.
    """
    if q.is_zero:
        return [(assumps, [p])]
    c = q.lead_coeff()
    s, a0 = resolve_sign(assumps, c)
    if s is not None:
        if a0 is None:
            return []
        if s == 0:
            return signed_prem_sequences(p, q.drop_lead(), a0)
        out: list[tuple[Assumps, list[RMPoly]]] = []
        for a2, r in _reduced_remainders(p, q, a0):
            out.extend(
                (a3, [p] + seq) for a3, seq in signed_prem_sequences(q, r, a2)
            )
        return out
    out = []
    for sg in branch_signs(assumps, c):
        a2 = record(assumps, c, sg)
        if a2 is None:
            continue
        if sg == 0:
            out.extend(signed_prem_sequences(p, q.drop_lead(), a2))
        else:
            out.extend(signed_prem_sequences(p, q, a2))
    return out
