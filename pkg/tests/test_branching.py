from fractions import Fraction

from rcfqe.branching import (
    Branch,
    branch_on_lead_coeff,
    branch_on_lead_coeffs,
    branch_signs,
    infer_sign,
    known_sign,
    lookup_sign,
    satisfies,
    semidefinite_sign,
    signed_prem_sequences,
    signed_pseudo_rem,
)
from rcfqe.mpoly import MPoly, sign_of
from rcfqe.oracles import random_rmpoly
from rcfqe.rmpoly import RMPoly, to_upoly
from rcfqe.upoly import rem

from conftest import fresh_rng

F = Fraction
y = MPoly.var(0)
z = MPoly.var(1)

GRID = [F(-2), F(-1), F(-1, 2), F(0), F(1, 2), F(1), F(2)]


class TestLookup:
    def test_lookup_first_match(self):
        a = ((y, 1), (y, -1))
        assert lookup_sign(a, y) == 1
        assert lookup_sign(a, z) is None

    def test_known_sign_constants(self):
        assert known_sign((), MPoly.const(-3)) == -1
        assert known_sign((), MPoly.zero()) == 0
        assert known_sign((), y) is None
        assert known_sign(((y, 1),), y) == 1

    def test_satisfies(self):
        a = ((y, 1), (z, 0))
        assert satisfies(a, (F(2), F(0)))
        assert not satisfies(a, (F(2), F(1)))
        assert not satisfies(a, (F(-2), F(0)))
        assert satisfies((), (F(5),))


class TestSemidefinite:
    def test_recognized(self):
        assert semidefinite_sign(y * y) == (1, False)
        assert semidefinite_sign(y * y + 1) == (1, True)
        assert semidefinite_sign(-(y * y) - 1) == (-1, True)
        assert semidefinite_sign(y * y * z * z + MPoly.const(3)) == (1, True)
        assert semidefinite_sign(MPoly.const(5)) == (1, True)

    def test_rejected(self):
        assert semidefinite_sign(y * y + y) is None
        assert semidefinite_sign(y * y - 1) is None
        assert semidefinite_sign(y) is None
        assert semidefinite_sign(MPoly.zero()) is None

    def test_never_lies_on_grid(self):
        rng = fresh_rng(30)
        from rcfqe.oracles import random_mpoly

        for _ in range(200):
            p = random_mpoly(rng, nvars=2)
            sd = semidefinite_sign(p)
            if sd is None:
                continue
            s, strict = sd
            for a in GRID:
                for b in GRID:
                    v = sign_of(p.eval((a, b)))
                    assert v == s or (not strict and v == 0)


class TestInferSign:
    def test_recorded_and_const(self):
        assert infer_sign((), MPoly.const(7)) == 1
        assert infer_sign(((y, -1),), y) == -1
        assert infer_sign((), y) is None

    def test_strict_semidefinite_only(self):
        assert infer_sign((), y * y + 1) == 1
        assert infer_sign((), y * y) is None

    def test_monomial_from_var_signs(self):
        assert infer_sign(((y, 1),), y * y * y) == 1
        assert infer_sign(((y, -1),), y * y * y) == -1
        assert infer_sign(((y, -1),), y * y) == 1
        assert infer_sign(((y, -1),), -(y * y)) == -1
        assert infer_sign(((y, 0),), y * z) == 0

    def test_even_power_needs_only_nonzero(self):
        assert infer_sign(((y * y, 1),), MPoly.var(0, 4)) == 1
        assert infer_sign(((y * y, 1),), -MPoly.var(0, 4)) == -1
        # a recorded zero of y^2 zeroes every power of y
        assert infer_sign(((y * y, 0),), MPoly.var(0, 4)) == 0
        # no certificate at all: no inference
        assert infer_sign(((y + z, 1),), MPoly.var(0, 4)) is None

    def test_scalar_multiple(self):
        assert infer_sign(((y * y, 1),), -(y * y)) == -1
        a = ((y * 2 - z * 4, 1),)
        assert infer_sign(a, -y * 3 + z * 6) == -1
        assert infer_sign(a, y - z * 2) == 1

    def test_sound_on_grid(self):
        # wherever the assumptions hold, the inferred sign is the real sign
        rng = fresh_rng(31)
        from rcfqe.oracles import random_mpoly

        for _ in range(300):
            p = random_mpoly(rng, nvars=2)
            q = random_mpoly(rng, nvars=2)
            base = rng.choice([1, -1, 0])
            a = ((q, base),)
            s = infer_sign(a, p)
            if s is None:
                continue
            for u in GRID:
                for w in GRID:
                    if satisfies(a, (u, w)):
                        assert sign_of(p.eval((u, w))) == s


class TestBranchSigns:
    def test_shapes(self):
        assert branch_signs((), y) == [1, -1, 0]
        assert branch_signs((), y * y) == [1, 0]
        assert branch_signs((), y * y + 1) == [1]
        assert branch_signs(((y, 1),), y) == [1]

    def test_covers_grid(self):
        rng = fresh_rng(32)
        from rcfqe.oracles import random_mpoly

        for _ in range(200):
            p = random_mpoly(rng, nvars=1)
            allowed = set(branch_signs((), p))
            for u in GRID:
                assert sign_of(p.eval((u,))) in allowed


def poly_in_x(*coeffs):
    """RMPoly from constant-first coefficients given as MPoly or int."""
    return RMPoly(
        tuple(c if isinstance(c, MPoly) else MPoly.const(c) for c in coeffs)
    )


class TestBranchLeadCoeff:
    def test_three_way_split(self):
        p = poly_in_x(2, y)  # y*x + 2
        got = branch_on_lead_coeff(p)
        assert got == [
            (((y, 1),), p),
            (((y, -1),), p),
            (((y, 0),), poly_in_x(2)),
        ]

    def test_semidefinite_lead_two_way(self):
        p = poly_in_x(1, y * y)
        got = branch_on_lead_coeff(p)
        assert got == [
            (((y * y, 1),), p),
            (((y * y, 0),), poly_in_x(1)),
        ]

    def test_known_lead_passes_through(self):
        p = poly_in_x(1, y)
        assert branch_on_lead_coeff(p, ((y, 1),)) == [(((y, 1),), p)]
        q = poly_in_x(y, 3)
        assert branch_on_lead_coeff(q) == [((), q)]

    def test_zero_lead_recurses(self):
        # (y)*x^2 + 0*x + 5: the zero branch retries on the constant
        p = poly_in_x(5, 0, y)
        got = branch_on_lead_coeff(p)
        assert (((y, 0),), poly_in_x(5)) in got
        assert len(got) == 3

    def test_zero_poly(self):
        assert branch_on_lead_coeff(RMPoly.zero()) == [((), RMPoly.zero())]

    def test_branches_cover_and_truncate_soundly(self):
        rng = fresh_rng(33)
        for _ in range(150):
            p = random_rmpoly(rng)
            got = branch_on_lead_coeff(p)
            for t in GRID:
                hit = [b for b in got if satisfies(b[0], (t,))]
                # some branch applies, and on it the truncation is exact
                assert hit
                for a, q in hit:
                    assert to_upoly(q, (t,)) == to_upoly(p, (t,))
                    if not q.is_zero:
                        s = infer_sign(a, q.lead_coeff())
                        assert s == sign_of(q.lead_coeff().eval((t,)))
                        assert s != 0


class TestBranchLeadCoeffs:
    def test_threads_assumptions(self):
        ps = [poly_in_x(2, y), poly_in_x(0, z)]
        for br in branch_on_lead_coeffs(ps):
            assert isinstance(br, Branch)
            assert len(br.polys) == 2
            for q in br.polys:
                if not q.is_zero:
                    assert infer_sign(br.assumps, q.lead_coeff()) not in (None, 0)

    def test_no_duplicate_assumption_polys(self):
        ps = [poly_in_x(2, y), poly_in_x(-1, y), poly_in_x(0, y * y)]
        for br in branch_on_lead_coeffs(ps):
            polys = [p for p, _ in br.assumps]
            assert len(polys) == len(set(polys))

    def test_empty(self):
        assert branch_on_lead_coeffs([]) == [Branch((), ())]


class TestSignedPseudoRem:
    def test_hand_case(self):
        # p = y^2*x + 1, q = y^3*x + y^2 gives y^7 - y^6 after the sign fix
        p = poly_in_x(1, y * y)
        q = poly_in_x(y * y, y * y * y)
        r = signed_pseudo_rem(p, q)
        assert r == poly_in_x(MPoly.var(0, 7) - MPoly.var(0, 6))

    def test_positive_multiple_of_negated_remainder(self):
        rng = fresh_rng(34)
        for _ in range(200):
            p = random_rmpoly(rng)
            q = random_rmpoly(rng)
            if q.is_zero:
                continue
            r = signed_pseudo_rem(p, q)
            for t in GRID:
                if q.lead_coeff().eval((t,)) == 0:
                    continue
                want = -rem(to_upoly(p, (t,)), to_upoly(q, (t,)))
                got = to_upoly(r, (t,))
                if want.is_zero:
                    assert got.is_zero
                    continue
                assert got.degree == want.degree
                scale = got.lead_coeff() / want.lead_coeff()
                assert scale > 0
                assert got == want * scale


class TestSignedPremSequences:
    def test_hand_case_membership(self):
        p = poly_in_x(1, y * y)
        q = poly_in_x(y * y, y * y * y)
        # the remainder y**7 - y**6 is pure content, so the chain carries
        # its sign as the constant element and the assumption records it
        tail = MPoly.var(0, 7) - MPoly.var(0, 6)
        seqs = signed_prem_sequences(p, q)
        generic = [
            (a, seq) for a, seq in seqs if seq == [p, q, poly_in_x(1)]
        ]
        assert generic
        a, _ = generic[0]
        assert (y * y * y, 1) in a
        assert (tail, 1) in a
        # where the head is positive but the content negative, the constant
        # flips; where the head is negative the content sign is forced
        assert any(
            seq == [p, q, poly_in_x(-1)] and (tail, -1) in a2
            for a2, seq in seqs
        )
        assert any(
            seq == [p, q, poly_in_x(-1)] and (y * y * y, -1) in a2
            for a2, seq in seqs
        )

    def test_zero_second(self):
        p = poly_in_x(1, y)
        assert signed_prem_sequences(p, RMPoly.zero()) == [((), [p])]

    def test_first_element_unresolved(self):
        # the first element's leading sign is the caller's concern
        p = poly_in_x(0, y)
        q = poly_in_x(1)
        for a, seq in signed_prem_sequences(p, q):
            assert seq[0] == p

    def test_chain_invariants_sampled(self):
        rng = fresh_rng(35)
        for _ in range(60):
            p = random_rmpoly(rng, max_degree=3)
            q = random_rmpoly(rng, max_degree=3)
            if p.is_zero or q.is_zero:
                continue
            for a, seq in signed_prem_sequences(p, q):
                assert seq[0] == p
                for t in GRID:
                    if not satisfies(a, (t,)):
                        continue
                    # every element past the second behaves as the signed
                    # remainder of the two before it
                    for i in range(len(seq) - 2):
                        ua = to_upoly(seq[i], (t,))
                        ub = to_upoly(seq[i + 1], (t,))
                        uc = to_upoly(seq[i + 2], (t,))
                        if ub.is_zero:
                            continue
                        want = -rem(ua, ub)
                        assert sign_of(uc.eval(F(0))) * 0 == 0  # uc well formed
                        if want.is_zero:
                            assert uc.is_zero
                        else:
                            assert uc.degree == want.degree
                            assert uc.lead_coeff() / want.lead_coeff() > 0
