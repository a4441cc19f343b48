from fractions import Fraction

import pytest

from rcfqe.branching import satisfies
from rcfqe.errors import InvariantViolation
from rcfqe.mateq import (
    BASE_SIGNS,
    BASE_SUBSETS,
    MatEq,
    base_mateq,
    combine_mateqs,
    mat_entry,
    matrix_equations,
    reduce_mateq,
    solve_exact,
)
from rcfqe.mpoly import MPoly
from rcfqe.oracles import isolate_roots, random_upoly, sign_at_root
from rcfqe.rmpoly import RMPoly, to_upoly
from rcfqe.upoly import squarefree_part

from conftest import fresh_rng

F = Fraction
y = MPoly.var(0)

GRID = [F(-2), F(-1), F(-1, 2), F(0), F(1, 2), F(1), F(2)]


def poly_in_x(*coeffs):
    return RMPoly(
        tuple(c if isinstance(c, MPoly) else MPoly.const(c) for c in coeffs)
    )


def oracle_sign_classes(p, qs):
    """Count roots of p per realized sign vector of qs, by root isolation."""
    sf = squarefree_part(p)
    counts: dict[tuple, int] = {}
    if sf.degree == 0:
        return counts
    for box in isolate_roots(p):
        vec = tuple(sign_at_root(q, sf, box) for q in qs)
        counts[vec] = counts.get(vec, 0) + 1
    return counts


class TestMatEntry:
    def test_zero_indicator(self):
        assert mat_entry(((0,), ()), (0, 1)) == 1
        assert mat_entry(((0,), ()), (1, 1)) == 0

    def test_sign_product(self):
        assert mat_entry(((), (0, 1)), (1, -1)) == -1
        assert mat_entry(((), (1,)), (1, -1)) == -1
        assert mat_entry(((), ()), (-1, -1)) == 1

    def test_mixed(self):
        assert mat_entry(((0,), (1,)), (0, -1)) == -1
        assert mat_entry(((1,), (0,)), (1, 0)) == 0


class TestSolveExact:
    def test_identity(self):
        assert solve_exact([[1, 0], [0, 1]], [3, 4]) == (F(3), F(4))

    def test_fractions(self):
        got = solve_exact([[2, 1], [1, -1]], [1, 1])
        assert got == (F(2, 3), F(-1, 3))

    def test_singular_raises(self):
        with pytest.raises(InvariantViolation):
            solve_exact([[1, 1], [1, 1]], [1, 1])

    def test_shape_checked(self):
        with pytest.raises(ValueError):
            solve_exact([[1, 0]], [1, 2])


class TestBaseMateq:
    def test_query_against_self(self):
        # roots of x: just 0; the sign of x there is 0
        x = poly_in_x(0, 1)
        branches = base_mateq(x, x)
        assert len(branches) == 1
        a, m = branches[0]
        assert a == ()
        assert m.signs == ((0,),)
        assert m.solution == (F(1),)

    def test_query_against_one(self):
        x = poly_in_x(0, 1)
        branches = base_mateq(x, poly_in_x(1))
        assert len(branches) == 1
        _, m = branches[0]
        assert m.signs == ((1,),)
        assert m.solution == (F(1),)

    def test_two_roots(self):
        # x^2 - x has roots 0 and 1; against q = x both signs 0 and +1 occur
        p = poly_in_x(0, -1, 1)
        branches = base_mateq(p, poly_in_x(0, 1))
        assert len(branches) == 1
        _, m = branches[0]
        assert set(zip(m.signs, m.solution)) == {((1,), F(1)), ((0,), F(1))}

    def test_solution_solves_system(self):
        p = poly_in_x(0, -1, 1)
        _, m = base_mateq(p, poly_in_x(-3, 1))[0]
        for row, v in zip(m.matrix, m.rhs):
            assert sum(e * w for e, w in zip(row, m.solution)) == v


class TestReduce:
    def test_drops_unrealized_columns(self):
        # x^2 + 1 has no real roots: everything reduces away
        p = poly_in_x(1, 0, 1)
        _, m = base_mateq(p, poly_in_x(0, 1))[0]
        assert m.signs == ()
        assert m.solution == ()
        assert m.matrix == ()

    def test_idempotent(self):
        p = poly_in_x(0, -1, 1)
        _, m = base_mateq(p, poly_in_x(0, 1))[0]
        assert reduce_mateq(m) == m

    def test_rejects_inconsistent_counts(self):
        # a hand-built system whose solution column count is realized but
        # whose restricted rows cannot be re-solved consistently
        bad = MatEq(
            polys=(poly_in_x(0, 1),),
            signs=((1,), (-1,)),
            subsets=(((), ()), ((), (0,))),
            matrix=((1, 1), (1, -1)),
            rhs=(2, 0),
            solution=(F(1), F(2)),
        )
        with pytest.raises(InvariantViolation):
            reduce_mateq(bad)


class TestCombine:
    def test_hand_case(self):
        # roots of x^2 - x are {0, 1}; signs of (x, x - 1) there are
        # (0, -1) and (1, 0), one root each
        p = poly_in_x(0, -1, 1)
        _, ma = base_mateq(p, poly_in_x(0, 1))[0]
        _, mb = base_mateq(p, poly_in_x(-1, 1))[0]
        combined = combine_mateqs(p, ma, mb)
        assert len(combined) == 1
        _, m = combined[0]
        assert set(zip(m.signs, m.solution)) == {
            ((0, -1), F(1)),
            ((1, 0), F(1)),
        }

    def test_kronecker_entries(self):
        # every unreduced combined entry is the product of the two factors
        p = poly_in_x(0, -1, 1)
        _, ma = base_mateq(p, poly_in_x(0, 1))[0]
        _, mb = base_mateq(p, poly_in_x(-1, 1))[0]
        shift = len(ma.polys)
        signs = tuple(sa + sb for sa in ma.signs for sb in mb.signs)
        subsets = tuple(
            (ia + tuple(i + shift for i in ib), ja + tuple(j + shift for j in jb))
            for ia, ja in ma.subsets
            for ib, jb in mb.subsets
        )
        for r, sub in enumerate(subsets):
            ra, rb = divmod(r, len(mb.subsets))
            for c, sv in enumerate(signs):
                ca, cb = divmod(c, len(mb.signs))
                assert mat_entry(sub, sv) == (
                    ma.matrix[ra][ca] * mb.matrix[rb][cb]
                )


class TestMatrixEquations:
    def test_needs_polynomials(self):
        with pytest.raises(ValueError):
            matrix_equations(poly_in_x(0, 1), [])

    def test_three_roots_frozen(self):
        # 12x^3 - 12x has roots -1, 0, 1; signs of (x, x - 1) there are
        # (-1, -1), (0, -1) and (1, 0)
        p = poly_in_x(0, -12, 0, 12)
        branches = matrix_equations(p, [poly_in_x(0, 1), poly_in_x(-1, 1)])
        assert len(branches) == 1
        _, m = branches[0]
        assert set(zip(m.signs, m.solution)) == {
            ((-1, -1), F(1)),
            ((0, -1), F(1)),
            ((1, 0), F(1)),
        }

    def test_matches_oracle_on_constant_instances(self):
        rng = fresh_rng(50)
        for _ in range(40):
            p = random_upoly(rng, max_degree=4)
            qs_u = [random_upoly(rng, max_degree=3) for _ in range(rng.randint(1, 2))]
            p_r = RMPoly(tuple(MPoly.const(c) for c in p.coeffs))
            qs_r = [RMPoly(tuple(MPoly.const(c) for c in q.coeffs)) for q in qs_u]
            branches = matrix_equations(p_r, qs_r)
            assert len(branches) == 1
            a, m = branches[0]
            assert a == ()
            want = oracle_sign_classes(p, qs_u)
            assert dict(zip(m.signs, m.solution)) == want
            # counts are positive integers summing to the distinct root count
            assert all(w.denominator == 1 and w > 0 for w in m.solution)
            assert sum(m.solution) == sum(want.values())

    def test_outer_variable_branches(self):
        # roots of x^2 - y classified against x: for y > 0 both signs
        # appear, at y = 0 only the zero sign, for y < 0 nothing
        p = poly_in_x(-y, MPoly.zero(), MPoly.const(1))
        branches = matrix_equations(p, [poly_in_x(0, 1)])
        expected = {
            F(1): {((1,), F(1)), ((-1,), F(1))},
            F(0): {((0,), F(1))},
            F(-1): set(),
        }
        for t, want in expected.items():
            hits = [m for a, m in branches if satisfies(a, (t,))]
            assert hits, t
            for m in hits:
                assert set(zip(m.signs, m.solution)) == want

    def test_solution_solves_system_on_every_branch(self):
        p = poly_in_x(-y, y, MPoly.const(1))
        branches = matrix_equations(p, [poly_in_x(y, 1), poly_in_x(0, 1)])
        assert branches
        for _, m in branches:
            for row, v in zip(m.matrix, m.rhs):
                assert sum(e * w for e, w in zip(row, m.solution)) == v
