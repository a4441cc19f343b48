"""Checks for the interval-based reference implementations.

The oracle is validated here against brute facts only: polynomials built
from known rational roots, hand-evaluable sign counts, and formulas whose
truth is classical.  Nothing in this module touches the remainder-sequence
path, so a green run certifies the oracle independently before other
modules are judged against it.
"""

from fractions import Fraction

import pytest

from rcfqe.formula import Atom, Rel
from rcfqe.mpoly import MPoly
from rcfqe.oracles import (
    cauchy_bound,
    consistent_sign_vectors,
    descartes_count,
    isolate_roots,
    oracle_exists_truth,
    oracle_forall_truth,
    oracle_tarski_query,
    random_mpoly,
    random_qf_formula,
    random_upoly,
    refine_box,
    sampled_equiv,
    sign_at_root,
)
from rcfqe.parser import parse_formula
from rcfqe.upoly import UPoly, squarefree_part

from conftest import fresh_rng

X = UPoly.x()
F = Fraction


def from_roots(*roots):
    p = UPoly.const(1)
    for r in roots:
        p = p * (X - UPoly.const(F(r)))
    return p


def box_contains(box, r):
    a, b = box
    if a == b:
        return a == r
    return a < r < b


class TestCauchyBound:
    def test_known_roots_inside(self):
        p = from_roots(3, -5)
        b = cauchy_bound(p)
        assert b > 5

    def test_random_products(self):
        rng = fresh_rng(1)
        for _ in range(50):
            roots = [F(rng.randint(-20, 20), rng.randint(1, 5)) for _ in range(3)]
            p = from_roots(*roots)
            b = cauchy_bound(p)
            assert all(-b < r < b for r in roots)


class TestDescartes:
    def test_exact_when_single(self):
        p = X * X - 2
        assert descartes_count(p, F(0), F(2)) == 1
        assert descartes_count(p, F(-2), F(0)) == 1
        assert descartes_count(p, F(3), F(4)) == 0

    def test_empty_interval_rejected(self):
        with pytest.raises(ValueError):
            descartes_count(X, F(1), F(1))


class TestIsolation:
    def test_three_rational_roots(self):
        p = from_roots(1, 2, 3)
        boxes = isolate_roots(p)
        assert len(boxes) == 3
        for box, r in zip(boxes, (F(1), F(2), F(3))):
            assert box_contains(box, r)

    def test_no_real_roots(self):
        assert isolate_roots(X * X + 1) == []

    def test_multiplicity_collapses(self):
        p = from_roots(1, 1, -2)
        boxes = isolate_roots(p)
        assert len(boxes) == 2
        assert box_contains(boxes[0], F(-2))
        assert box_contains(boxes[1], F(1))

    def test_boxes_disjoint_and_ascending(self):
        rng = fresh_rng(2)
        for _ in range(30):
            roots = sorted(
                {F(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(4)}
            )
            p = from_roots(*roots)
            boxes = isolate_roots(p)
            assert len(boxes) == len(roots)
            for box, r in zip(boxes, roots):
                assert box_contains(box, r)
            for (_, b1), (a2, _) in zip(boxes, boxes[1:]):
                assert b1 <= a2

    def test_zero_poly_rejected(self):
        with pytest.raises(ValueError):
            isolate_roots(UPoly.zero())


class TestRefine:
    def test_root_kept_and_width_shrinks(self):
        p = X * X - 2
        sf = squarefree_part(p)
        (box,) = [b for b in isolate_roots(p) if b[0] >= 0]
        for _ in range(10):
            new = refine_box(sf, box)
            assert new[1] - new[0] <= (box[1] - box[0]) / 2 or new[0] == new[1]
            # 1.414... stays inside
            assert new[0] * new[0] <= 2 <= new[1] * new[1] or new[0] == new[1]
            box = new


class TestSignAtRoot:
    def test_at_sqrt2(self):
        sf = X * X - 2
        (box,) = [b for b in isolate_roots(sf) if b[0] >= 0]
        assert sign_at_root(X - 1, sf, box) == 1
        assert sign_at_root(X - 2, sf, box) == -1
        assert sign_at_root(sf, sf, box) == 0
        assert sign_at_root(UPoly.zero(), sf, box) == 0

    def test_shared_factor_detected(self):
        # q vanishes at sqrt(2) but not at -sqrt(2)
        sf = X * X - 2
        q = (X * X - 2) * (X + 5)
        boxes = isolate_roots(sf)
        assert sign_at_root(q, sf, boxes[0]) == 0
        assert sign_at_root(q, sf, boxes[1]) == 0

    def test_exact_box(self):
        sf = from_roots(F(1, 2))
        assert sign_at_root(X + 1, sf, (F(1, 2), F(1, 2))) == 1


class TestOracleTarskiQuery:
    def test_hand_values(self):
        p = X * X - 1
        assert oracle_tarski_query(p, X + 2) == 2
        assert oracle_tarski_query(p, X) == 0
        assert oracle_tarski_query(p, UPoly.const(1)) == 2
        assert oracle_tarski_query(X * (X - 1) * (X + 1), UPoly.const(1)) == 3
        assert oracle_tarski_query(X * X + 1, X) == 0

    def test_rational_root_grid(self):
        rng = fresh_rng(3)
        for _ in range(40):
            roots = sorted(
                {F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(3)}
            )
            p = from_roots(*roots)
            q = random_upoly(rng, max_degree=3)
            want = sum(
                (q.eval(r) > 0) - (q.eval(r) < 0) for r in roots
            )
            assert oracle_tarski_query(p, q) == want


class TestConsistentSignVectors:
    def test_single_line(self):
        assert consistent_sign_vectors([X]) == {(-1,), (0,), (1,)}

    def test_two_points(self):
        got = consistent_sign_vectors([X, X - 1])
        assert got == {(-1, -1), (0, -1), (1, -1), (1, 0), (1, 1)}

    def test_no_roots(self):
        assert consistent_sign_vectors([X * X + 1]) == {(1,)}

    def test_constants_and_zero(self):
        got = consistent_sign_vectors([UPoly.const(-3), UPoly.zero(), X])
        assert got == {(-1, 0, -1), (-1, 0, 0), (-1, 0, 1)}

    def test_shared_root(self):
        got = consistent_sign_vectors([X, X * X])
        assert got == {(-1, 1), (0, 0), (1, 1)}


class TestQuantifierOracle:
    def test_closed_classics(self):
        f, _ = parse_formula("x*x + 1 > 0", free=["x"])
        assert oracle_forall_truth(f, ())
        f, _ = parse_formula("x > 0", free=["x"])
        assert not oracle_forall_truth(f, ())
        assert oracle_exists_truth(f, ())
        f, _ = parse_formula("x*x = 2", free=["x"])
        assert oracle_exists_truth(f, ())
        f, _ = parse_formula("x*x = -1", free=["x"])
        assert not oracle_exists_truth(f, ())

    def test_outer_values(self):
        # body in x with one outer variable y: x*x + y*y > 0
        body, _ = parse_formula("x*x + y*y > 0", free=["x", "y"])
        assert not oracle_forall_truth(body, (F(0),))
        assert oracle_forall_truth(body, (F(1),))
        assert oracle_forall_truth(body, (F(-1, 2),))

    def test_no_atom_polynomials(self):
        body, _ = parse_formula("0 = 0")
        assert oracle_forall_truth(body, ())


class TestSampledEquiv:
    def test_same_formula(self):
        f, _ = parse_formula("x > 0", free=["x"])
        g, _ = parse_formula("0 < x", free=["x"])
        assert sampled_equiv(f, g, [-1, 0, 1])

    def test_differs_at_zero(self):
        f, _ = parse_formula("x > 0", free=["x"])
        g, _ = parse_formula("x >= 0", free=["x"])
        assert not sampled_equiv(f, g, [-1, 0, 1])
        assert sampled_equiv(f, g, [-1, 1])


class TestGenerators:
    def test_deterministic(self):
        a = [random_upoly(fresh_rng(7)) for _ in range(5)]
        b = [random_upoly(fresh_rng(7)) for _ in range(5)]
        assert a == b

    def test_upoly_nonzero(self):
        rng = fresh_rng(8)
        for _ in range(100):
            assert not random_upoly(rng).is_zero

    def test_mpoly_bounds(self):
        rng = fresh_rng(9)
        for _ in range(100):
            p = random_mpoly(rng, nvars=3, max_exp=2)
            assert p.max_var() <= 2
            for mono, _ in p.terms():
                assert all(e <= 2 for _, e in mono)

    def test_formula_quantifier_free(self):
        from rcfqe.formula import is_quantifier_free

        rng = fresh_rng(10)
        for _ in range(50):
            assert is_quantifier_free(random_qf_formula(rng))
