"""Interactive fuzzy goal programming for bi-level linear-fractional problems."""

import json

from ._core import (
    DblfgpError,
    DegeneracyError,
    DegenerateGoalError,
    Document,
    Goal,
    InvalidRevision,
    InvalidTransition,
    Iteration,
    ParseError,
    Problem,
    Session,
    SessionStatus,
    ValidationFailed,
    load_problem,
    membership_value,
    parse_problem,
)
from . import _core

__all__ = [
    "DblfgpError",
    "DegeneracyError",
    "DegenerateGoalError",
    "Document",
    "Goal",
    "InvalidRevision",
    "InvalidTransition",
    "Iteration",
    "ParseError",
    "Problem",
    "Session",
    "SessionStatus",
    "ValidationFailed",
    "load_problem",
    "membership_value",
    "parse_problem",
    "payoff_table",
    "validate",
]


def validate(problem):
    return json.loads(_core.validate(problem))


def payoff_table(problem):
    """Rows with float min/max per objective."""
    rows = json.loads(_core.payoff_table(problem, "json"))
    for row in rows:
        for key in ("min", "max"):
            row[key] = float(row[key])
        for key in ("argmin", "argmax"):
            row[key] = [float(v) for v in row[key]]
    return rows
