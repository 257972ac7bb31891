class RBHopfError(Exception):
    """Base class for all errors raised by rbhopf."""


class SpecError(RBHopfError, ValueError):
    """Malformed input: a Lie algebra, group, operator or file that does not parse or validate."""


class AxiomViolation(RBHopfError):
    """A structure that was promised to satisfy an identity does not.

    ``report`` carries the failing checks when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BudgetExceeded(RBHopfError):
    pass


class FactorizationError(RBHopfError, ValueError):
    pass


class NotGroupLikeError(RBHopfError):
    pass


class NotPrimitiveError(RBHopfError):
    pass
