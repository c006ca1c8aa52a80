class GapProbError(Exception):
    """Base class for all errors raised by gapprob."""

    def __init__(self, message=None):
        super().__init__(message or 'gapprob error')


class RefusedComputation(GapProbError):
    """A computation that was valid but declined because of a resource limit."""

    def __init__(self, message=None):
        super().__init__(message or 'Computation refused')
