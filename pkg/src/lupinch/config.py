"""Shared tolerance policy.

A single config-level tolerance governs every invariant check in the
package. It defaults to 1e-10, can be overridden per call, or globally
through the LUPINCH_TOL environment variable. Exact (bit-level)
comparisons are reserved for quantities the constructors guarantee0
exactly.
"""

from __future__ import annotations

import os

DEFAULT_TOL = 1e-10
TOL_ENV_VAR = "LUPINCH_TOL"

# Equality of the inequality's two sides is detected at this relative
# tolerance, tighter than DEFAULT_TOL: the saturating configurations are
# exact in closed form, and a looser threshold would misclassify nearby
# non-extremal inputs.
EQUALITY_RTOL = 1e-9


def resolve_tol(tol: float | None = None) -> float:
    """Return the effective tolerance: explicit arg > env var > default."""
    if tol is None:
        env = os.environ.get(TOL_ENV_VAR)
        tol = float(env) if env else DEFAULT_TOL
    if not tol > 0.0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    return float(tol)
