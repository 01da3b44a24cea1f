"""Exception types shared across the package."""


class GrassmodError(Exception):
    """Base class for all errors raised by grassmod."""


class NonPrimeModulus(GrassmodError, ValueError):
    pass


class NoIrreducibleFound(GrassmodError, RuntimeError):
    pass


class NonSquare(GrassmodError, ValueError):
    pass


class ShapeMismatch(GrassmodError, ValueError):
    pass


class TooLarge(GrassmodError, ValueError):
    """A configured size cap would be exceeded."""


class AmbientMismatch(GrassmodError, ValueError):
    pass


class DimensionMismatch(GrassmodError, ValueError):
    pass


class EmptyOrbit(GrassmodError, ValueError):
    """Requested intersection dimension has no realizing subspaces."""


class EmptyModule(GrassmodError, ValueError):
    pass


class HypothesisViolated(GrassmodError, ValueError):
    pass


class NotDiagonalizable(GrassmodError, RuntimeError):
    pass


class SpecInvalid(GrassmodError, ValueError):
    pass


class PreconditionViolated(GrassmodError, ValueError):
    pass


class NoUncoveredVector(GrassmodError, ValueError):
    pass


class NoGoodScaling(GrassmodError, ValueError):
    pass


class UnknownCheck(GrassmodError, KeyError):
    pass


class BadParams(GrassmodError, ValueError):
    pass


class ChecksumMismatch(GrassmodError, ValueError):
    pass


class IOFailure(GrassmodError, OSError):
    pass
