"""Exception hierarchy shared across the package."""


class TorfoldError(Exception):
    """Base class for all package errors."""


class InputError(TorfoldError):
    """Malformed or out-of-contract input data."""


class FrozenVertexError(TorfoldError):
    """Mutation requested at a frozen vertex or orbit."""


class InexactDivisionError(TorfoldError):
    """A division that was required to be exact left a remainder.

    Inside a cluster mutation this falsifies the Laurent phenomenon, so
    callers must never swallow it. The offending remainder is kept on the
    exception for reporting.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class FoldingUndefinedError(TorfoldError):
    """Folding requested for an inadmissible periodic quiver."""

    def __init__(self, message, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class FoldabilityViolationError(TorfoldError):
    """An orbit-mutation produced a virtual 2-cycle."""

    def __init__(self, message, witness=None, violations=()):
        super().__init__(message)
        self.witness = witness
        self.violations = list(violations)


class SearchExhaustedError(TorfoldError):
    """A bounded search ran out of budget before finding its target."""


class UnflippableArcError(TorfoldError):
    """Flip requested for an arc that does not sit in a quadrilateral."""


class DomainError(TorfoldError):
    """Value lies outside the mathematical domain of the operation."""
