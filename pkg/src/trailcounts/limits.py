"""Default resource caps, overridable through environment variables.

All engines are desk-scale by design: the caps exist to turn combinatorial
blow-ups into clean errors instead of runaway memory or CPU use.
"""

from __future__ import annotations

import os

REGISTER_CAP_ENV = "TRAILCOUNTS_REGISTER_CAP"
TERM_BUDGET_ENV = "TRAILCOUNTS_TERM_BUDGET"
NODE_BUDGET_ENV = "TRAILCOUNTS_NODE_BUDGET"

_DEFAULT_REGISTER_CAP = 24  # qubit slots; 2**24 amplitudes
_DEFAULT_TERM_BUDGET = 10_000_000  # live monomials during symbolic products
_DEFAULT_NODE_BUDGET = 100_000_000  # visited nodes in backtracking searches


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def register_cap() -> int:
    return _env_int(REGISTER_CAP_ENV, _DEFAULT_REGISTER_CAP)


def term_budget() -> int:
    return _env_int(TERM_BUDGET_ENV, _DEFAULT_TERM_BUDGET)


def node_budget() -> int:
    return _env_int(NODE_BUDGET_ENV, _DEFAULT_NODE_BUDGET)
