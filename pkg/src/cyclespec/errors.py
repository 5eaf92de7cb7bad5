"""Exception types shared across the package.

Every error that can surface through the command line carries enough
structure to render a JSON report: ``details`` is a plain dict of
JSON-ready values (ints, strings, rationals already formatted as "p/q").
"""

from __future__ import annotations


class CyclespecError(Exception):
    """Base class for all package errors."""

    exit_code = 2

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details


class ParseError(CyclespecError):
    """Malformed graph input."""

    exit_code = 2


class InputError(CyclespecError):
    """Arguments outside an operation's contract."""

    exit_code = 2


class BudgetExceeded(CyclespecError):
    """Oracle work cap (CYCLESPEC_BUDGET) hit before completion."""

    exit_code = 2


class HypothesisNotMet(CyclespecError):
    """Input fails a density or structure gate, reported with exact arithmetic."""

    exit_code = 1


class NotBipartite(HypothesisNotMet):
    """Bipartite input required; carries an odd-cycle witness in details."""

    exit_code = 1


class VerificationFailure(CyclespecError):
    """A certificate failed re-verification."""

    exit_code = 3


class InternalContradiction(CyclespecError):
    """A step the underlying argument proves impossible happened anyway.

    Raising this means either the input violated an invariant the caller
    promised, or the implementation is wrong; it is never a user error.
    """

    exit_code = 4
