"""Exact quantifier elimination for first-order real arithmetic.

The pipeline eliminates one quantifier at a time.  A universal quantifier
over a quantifier-free body reduces to sign determination: the realized
sign vectors of the body's atom polynomials, as the bound variable runs
over the reals, are computed per branch of sign assumptions on the other
variables, and the branches where every vector satisfies the body form
the quantifier-free answer.  Root counts come from matrix equations over
Tarski queries, which in turn come from signed pseudo-remainder sequences
so that everything stays in exact rational arithmetic.
"""

from .branching import (
    Assumps,
    Branch,
    branch_on_lead_coeff,
    branch_on_lead_coeffs,
    known_sign,
    lookup_sign,
    satisfies,
    signed_prem_sequences,
    signed_pseudo_rem,
)
from .errors import InvariantViolation, RefinementLimitExceeded
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
    Rel,
    TrueF,
    and_f,
    assumps_to_formula,
    atom_polys,
    count_quantifiers,
    eval_qf,
    eval_with_signs,
    is_quantifier_free,
    max_var,
    neg_f,
    or_f,
)
from .mateq import MatEq, base_mateq, combine_mateqs, mat_entry, matrix_equations, reduce_mateq
from .mpoly import MPoly, Rat, Sign, sign_of
from .parser import ParseError, format_formula, parse_formula, parse_poly
from .qe import elim_exist, elim_forall, qe
from .rmpoly import RMPoly, pseudo_divmod, to_mpoly, to_upoly, univariate_in
from .signdet import SignDet, limit_signs, root_cover_poly, sign_determination
from .sturm import (
    distinct_root_count,
    sign_change_statistic,
    sign_changes,
    signed_remainder_sequence,
    tarski_query,
    tarski_query_sets,
)
from .tarski import branch_tarski_queries
from .upoly import UPoly, gcd, squarefree_part

__version__ = "0.1.0"

__all__ = [
    "And",
    "Assumps",
    "Atom",
    "Branch",
    "Exists",
    "ExistsN",
    "FalseF",
    "Forall",
    "ForallN",
    "Formula",
    "InvariantViolation",
    "MatEq",
    "MPoly",
    "Neg",
    "Or",
    "ParseError",
    "Rat",
    "RefinementLimitExceeded",
    "Rel",
    "RMPoly",
    "Sign",
    "SignDet",
    "TrueF",
    "UPoly",
    "and_f",
    "assumps_to_formula",
    "atom_polys",
    "base_mateq",
    "branch_on_lead_coeff",
    "branch_on_lead_coeffs",
    "branch_tarski_queries",
    "combine_mateqs",
    "count_quantifiers",
    "distinct_root_count",
    "elim_exist",
    "elim_forall",
    "eval_qf",
    "eval_with_signs",
    "format_formula",
    "gcd",
    "is_quantifier_free",
    "known_sign",
    "limit_signs",
    "lookup_sign",
    "mat_entry",
    "matrix_equations",
    "max_var",
    "neg_f",
    "or_f",
    "parse_formula",
    "parse_poly",
    "pseudo_divmod",
    "qe",
    "reduce_mateq",
    "root_cover_poly",
    "satisfies",
    "sign_change_statistic",
    "sign_changes",
    "sign_determination",
    "sign_of",
    "signed_prem_sequences",
    "signed_pseudo_rem",
    "signed_remainder_sequence",
    "squarefree_part",
    "tarski_query",
    "tarski_query_sets",
    "to_mpoly",
    "to_upoly",
    "univariate_in",
]
