"""Exception hierarchy shared by all antisat modules."""


class AntisatError(Exception):
    """Base class for every error raised by the package."""


class PreconditionError(AntisatError, ValueError):
    """An operation was called outside its documented domain."""


class UniverseError(PreconditionError):
    """Two sets or families live in different universes."""


class CapacityError(AntisatError):
    """The request exceeds a hard size limit (universe width, brute force range)."""


class ArithmeticOverflowError(CapacityError, OverflowError):
    """A binomial coefficient left the signed 64-bit range."""


class InfeasibleCoverError(AntisatError):
    """No cover with the requested number of paths exists.

    ``certificate`` holds an antichain of required sets that is larger than the
    requested path count; every skipless path meets an antichain at most once.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class ConstructionError(AntisatError):
    """A constructed family failed its own verification."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ParseError(AntisatError, ValueError):
    """A family or cover file is malformed."""
