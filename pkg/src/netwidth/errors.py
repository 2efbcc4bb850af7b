"""Exception types raised across the package."""


class NetwidthError(Exception):
    """Base class for all errors raised by netwidth."""


class EmbeddingInvalid(NetwidthError):
    """A rotation system is not a valid connected plane embedding."""


class EmptySubgraph(NetwidthError):
    pass


class BadParameter(NetwidthError, ValueError):
    pass


class IndexOutOfRange(NetwidthError, IndexError):
    pass


class RecolorContradiction(NetwidthError):
    """Colored vertices of a child component are not one contiguous subwalk."""


class ValidationFailure(NetwidthError):
    def __init__(self, message, problems=()):
        super().__init__(message)
        self.problems = list(problems)


class TooLarge(NetwidthError):
    def __init__(self, size, limit, what="graph"):
        super().__init__(f"{what} has {size} vertices; oracle limit is {limit}")
        self.size = size
        self.limit = limit


class FormatError(NetwidthError):
    """Malformed graph or decomposition file."""
