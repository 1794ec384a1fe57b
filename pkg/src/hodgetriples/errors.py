"""Exception hierarchy for the exact-arithmetic and moduli computations.

Every error is a subclass of :class:`HodgeError`, so callers (in particular
the CLI) can separate mathematical precondition violations from internal
consistency failures.
"""


class HodgeError(Exception):
    """Base class for all library errors."""


class DomainError(HodgeError):
    """An argument is outside the mathematical domain of the operation."""


class UnsupportedOperationError(HodgeError):
    """The operation is not defined for these operands (e.g. negative power
    of a multi-term polynomial)."""


class InexactDivisionError(HodgeError):
    """A division that must be exact left a nonzero remainder.

    This is always diagnostic: either a hypothesis of the underlying
    closed-form identity is violated, or there is a bug.
    """


class EmptyModuliError(DomainError):
    """The stability parameter lies outside the allowed interval, so the
    moduli space is empty."""


class CriticalValueError(DomainError):
    """The stability parameter equals a critical value; the closed forms
    are only valid in the open chambers."""


class PreconditionError(DomainError):
    """A slope or degree hypothesis of a closed-form formula is violated."""


class UnsupportedCaseError(DomainError):
    """The parameter combination is a first-class rejection (for instance
    both degrees even for rank (2,2) small-parameter moduli)."""


class ConsistencyError(HodgeError):
    """Two independent evaluation routes for the same quantity disagree."""
