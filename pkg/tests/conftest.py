import os
import random
import sys

import pytest

# Deep formula trees (long disjunctions before simplification) can exceed the
# default limit during structural recursion.
sys.setrecursionlimit(40000)

SEED = int(os.environ.get("RCFQE_SEED", "0"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


def fresh_rng(offset: int = 0) -> random.Random:
    """Deterministic generator for module-level parametrization."""
    return random.Random(SEED + offset)


def oracle_query_sets(p, eqs, others):
    """Root-isolation value of the restricted query, independent of chains.

    Sums sign(prod others) over the distinct real roots of p at which every
    member of eqs vanishes.
    """
    from rcfqe.oracles import isolate_roots, sign_at_root
    from rcfqe.upoly import squarefree_part

    sf = squarefree_part(p)
    if sf.degree == 0:
        return 0
    total = 0
    for box in isolate_roots(p):
        if any(sign_at_root(q, sf, box) != 0 for q in eqs):
            continue
        prod = 1
        for q in others:
            prod *= sign_at_root(q, sf, box)
        total += prod
    return total
