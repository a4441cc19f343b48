"""Matrix equations relating Tarski queries to sign distributions of roots.

For one polynomial q and a root set, the three queries against q**0, q**1
and q**2 relate linearly to the number of roots where q is positive,
negative and zero.  For several polynomials the relation is the Kronecker
product of the one-polynomial systems, with the right-hand side given by
queries over subsets.  Solving the system recovers which sign vectors are
realized; dropping unrealized columns and re-deriving a minimal row basis
keeps the systems small as polynomials are added one at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .branching import Assumps
from .errors import InvariantViolation
from .mpoly import Sign
from .rmpoly import RMPoly
from .tarski import threaded_tarski_queries

# A subset pair (I, J): index tuples into the polynomial list, selecting
# which polynomials are forced to vanish and which contribute their sign.
SubsetPair = tuple[tuple[int, ...], tuple[int, ...]]


def mat_entry(subset: SubsetPair, signs: Sequence[Sign]) -> int:
    """Value of the query indicator for one sign class.

    On roots whose sign vector is signs, the product over I of the
    zero-indicators times the product over J of the signs is constant;
    this is that constant.
    """
    idx_eqs, idx_others = subset
    out = 1
    for i in idx_eqs:
        if signs[i] != 0:
            return 0
    for j in idx_others:
        out *= signs[j]
    return out


def solve_exact(
    matrix: Sequence[Sequence[Fraction | int]], rhs: Sequence[Fraction | int]
) -> tuple[Fraction, ...]:
    """Solve a square system exactly by Gaussian elimination."""
    n = len(rhs)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ValueError("system must be square and aligned with rhs")
    aug = [[Fraction(x) for x in row] + [Fraction(v)] for row, v in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col]), None)
        if pivot is None:
            raise InvariantViolation("singular matrix in sign-count solve")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(row[n] for row in aug)


@dataclass(frozen=True)
class MatEq:
    """One solved system: matrix * solution = rhs.

    Columns are labeled by candidate sign vectors over polys (signs), rows
    by the subset pairs whose Tarski queries form rhs.  solution[j] is the
    number of roots realizing sign vector j, so after reduction every
    stored sign vector is realized by at least one root.
    """

    polys: tuple[RMPoly, ...]
    signs: tuple[tuple[Sign, ...], ...]
    subsets: tuple[SubsetPair, ...]
    matrix: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]
    solution: tuple[Fraction, ...]


BASE_SIGNS: tuple[tuple[Sign, ...], ...] = ((1,), (-1,), (0,))
BASE_SUBSETS: tuple[SubsetPair, ...] = (((), ()), ((), (0,)), ((0,), ()))


def _build_matrix(
    subsets: Sequence[SubsetPair], signs: Sequence[tuple[Sign, ...]]
) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(mat_entry(sub, sv) for sv in signs) for sub in subsets)


def reduce_mateq(m: MatEq) -> MatEq:
    """Drop unrealized sign vectors and shrink to an invertible row basis.

    Columns whose solved count is zero are removed; then rows are scanned
    in order, keeping each row that grows the rank until the kept rows
    form a square invertible system.  That system is re-solved and checked
    against the retained counts.
    """
    keep_cols = [j for j, w in enumerate(m.solution) if w != 0]
    if not keep_cols:
        return MatEq(m.polys, (), (), (), (), ())
    restricted = [[Fraction(row[j]) for j in keep_cols] for row in m.matrix]
    keep_rows: list[int] = []
    basis: list[list[Fraction]] = []
    for r, row in enumerate(restricted):
        vec = list(row)
        for piv in basis:
            lead = next(i for i, x in enumerate(piv) if x)
            if vec[lead]:
                f = vec[lead] / piv[lead]
                vec = [x - f * y for x, y in zip(vec, piv)]
        if any(vec):
            keep_rows.append(r)
            basis.append(vec)
            if len(keep_rows) == len(keep_cols):
                break
    if len(keep_rows) != len(keep_cols):
        raise InvariantViolation("column-restricted system lost full rank")
    new_matrix = tuple(
        tuple(m.matrix[r][j] for j in keep_cols) for r in keep_rows
    )
    new_rhs = tuple(m.rhs[r] for r in keep_rows)
    new_solution = solve_exact(new_matrix, new_rhs)
    if new_solution != tuple(m.solution[j] for j in keep_cols):
        raise InvariantViolation("reduced system disagrees with full solve")
    return MatEq(
        m.polys,
        tuple(m.signs[j] for j in keep_cols),
        tuple(m.subsets[r] for r in keep_rows),
        new_matrix,
        new_rhs,
        new_solution,
    )


def base_mateq(
    p: RMPoly, q: RMPoly, assumps: Assumps = (), eqs_divide_p: bool = False
) -> list[tuple[Assumps, MatEq]]:
    """The one-polynomial system for q over the roots of p, per branch.

    eqs_divide_p may be passed when q is known to divide p; the queries
    then run at lower degree.
    """
    matrix = _build_matrix(BASE_SUBSETS, BASE_SIGNS)
    out: list[tuple[Assumps, MatEq]] = []
    for a, rhs in threaded_tarski_queries(
        p, (q,), BASE_SUBSETS, assumps, eqs_divide_p
    ):
        solution = solve_exact(matrix, rhs)
        m = MatEq((q,), BASE_SIGNS, BASE_SUBSETS, matrix, rhs, solution)
        out.append((a, reduce_mateq(m)))
    return out


def combine_mateqs(
    p: RMPoly,
    a: MatEq,
    b: MatEq,
    assumps: Assumps = (),
    eqs_divide_p: bool = False,
) -> list[tuple[Assumps, MatEq]]:
    """Join two solved systems over the same root set, per branch.

    Candidate sign vectors are all concatenations (a's vary slowest), rows
    are all unions of subset pairs with b's indices shifted past a's
    polynomials, and the matrix is the Kronecker product of the two.  The
    right-hand side does not factor, so every combined query is recomputed,
    threading assumptions across rows.  eqs_divide_p may be passed when
    every polynomial of both systems divides p.
    """
    shift = len(a.polys)
    polys = a.polys + b.polys
    signs = tuple(sa + sb for sa in a.signs for sb in b.signs)
    subsets: tuple[SubsetPair, ...] = tuple(
        (
            ia + tuple(i + shift for i in ib),
            ja + tuple(j + shift for j in jb),
        )
        for ia, ja in a.subsets
        for ib, jb in b.subsets
    )
    matrix = _build_matrix(subsets, signs)
    out: list[tuple[Assumps, MatEq]] = []
    for a2, rhs in threaded_tarski_queries(p, polys, subsets, assumps, eqs_divide_p):
        solution = solve_exact(matrix, rhs)
        m = MatEq(polys, signs, subsets, matrix, rhs, solution)
        out.append((a2, reduce_mateq(m)))
    return out


def matrix_equations(
    p: RMPoly,
    qs: Sequence[RMPoly],
    assumps: Assumps = (),
    eqs_divide_p: bool = False,
) -> list[tuple[Assumps, MatEq]]:
    """Solved sign-distribution systems for qs over the roots of p.

    Polynomials are folded in one at a time, reducing after every base
    system and every join so intermediate systems stay as small as the
    number of realized sign vectors.  p must be nonzero and qs nonempty.
    eqs_divide_p may be passed when every nonzero member of qs divides p,
    as holds for the covering polynomial of the family.
    """
    if not qs:
        raise ValueError("need at least one polynomial to classify")
    acc = base_mateq(p, qs[0], assumps, eqs_divide_p)
    for q in qs[1:]:
        nxt: list[tuple[Assumps, MatEq]] = []
        seen: set[tuple[frozenset, MatEq]] = set()
        for a, m1 in acc:
            for a2, m2 in base_mateq(p, q, a, eqs_divide_p):
                for a3, m3 in combine_mateqs(p, m1, m2, a2, eqs_divide_p):
                    # Same assumption set means the same region; one
                    # representative per solved system suffices.
                    key = (frozenset(a3), m3)
                    if key not in seen:
                        seen.add(key)
                        nxt.append((a3, m3))
        acc = nxt
    return acc
