"""Exception hierarchy shared by the algebra and the command-line front end."""


class LiftkitError(Exception):
    """Base class for all errors raised by liftkit."""


class PreconditionError(LiftkitError, ValueError):
    """An operation was called on an argument outside its domain."""


class NotFactorableError(LiftkitError):
    """A matrix has no factorization of the requested form.

    ``report`` optionally carries the last peel attempt, for diagnostics.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
