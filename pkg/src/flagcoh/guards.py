"""Size guards for the brute-force oracles.

The oracles build explicit matrices, so they are gated behind conservative
default limits.  Setting the environment variable ``FLAGCOH_SIZE_GUARD`` to
an integer replaces the defaults with a single work budget: the divided
cohomology oracle then accepts any query whose section-space dimensions stay
within the budget, and the module oracle any length list whose total module
dimension does.
"""

from __future__ import annotations

import os

DEFAULT_MODULE_GUARD = 20000


def size_budget():
    """The FLAGCOH_SIZE_GUARD override, or None when unset/invalid."""
    raw = os.environ.get("FLAGCOH_SIZE_GUARD")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        return None


class SizeGuardExceeded(ValueError):
    """An oracle was asked for an instance beyond its size guard."""
