"""Exception types shared across the package."""


class RecolorError(Exception):
    """Base class for all package errors."""


class BudgetExceeded(RecolorError):
    """A configured resource cap (search nodes, coloring count) was hit."""

    def __init__(self, what, limit):
        super().__init__(f"{what} exceeded budget of {limit}; raise the budget to continue")
        self.what = what
        self.limit = limit


class StructuralInconsistency(RecolorError):
    """An input graph violated a uniqueness property that genuine coloring graphs satisfy."""


class AmbiguityError(StructuralInconsistency):
    """A hypercube layer had more than one completing vertex."""


class SurplusViolation(RecolorError, ValueError):
    """Link colorings were requested with a palette no larger than the chromatic number."""


class PreconditionError(RecolorError, ValueError):
    """Arguments do not satisfy an operation's documented precondition."""


class NotALinkVertex(PreconditionError):
    """The queried vertex is not in the abstract link vertex set (or the run aborted)."""
