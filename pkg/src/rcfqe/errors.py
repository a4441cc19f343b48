"""Package-level exception types."""

from __future__ import annotations


class InvariantViolation(AssertionError):
    """An internal consistency check failed.

    Raised where the algorithms re-verify their own postconditions, e.g.
    a reduced matrix equation whose re-solved system disagrees with the
    recorded solution.
    """


class RefinementLimitExceeded(RuntimeError):
    """Interval refinement hit its iteration cap without converging.

    Only the reference oracles refine intervals, so this never escapes the
    main elimination path.
    """
