"""Exception types raised by framekit operations."""


class FramekitError(ValueError):
    """Base class for all framekit errors."""


class NotSquare(FramekitError):
    pass


class NotHermitian(FramekitError):
    pass


class NoConvergence(FramekitError):
    pass


class NotPSD(FramekitError):
    pass


class SingularForNegativePower(FramekitError):
    pass


class DependentInput(FramekitError):
    """Raised when an input vector list is linearly dependent.

    The attribute ``index`` holds the position of the first offending vector.
    """

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"vector {index} is dependent on its predecessors")


class NotOrthonormalInput(FramekitError):
    pass


class DimMismatch(FramekitError):
    pass


class NotAFrame(FramekitError):
    pass


class NotOrthogonalRanges(FramekitError):
    pass


class NotParseval(FramekitError):
    pass


class ZeroVector(FramekitError):
    pass


class InsufficientRedundancy(FramekitError):
    pass


class MajorizationFails(FramekitError):
    pass


class WrongRank(FramekitError):
    pass


class NotTight(FramekitError):
    pass


class LocalNotFrame(FramekitError):
    pass


class BadParams(FramekitError):
    pass


class NotUnitNorm(FramekitError):
    pass


class DegenerateAlpha(FramekitError):
    pass


class TooLarge(FramekitError):
    pass


class TooManyPermutations(FramekitError):
    pass


class ComplexUnsupported(FramekitError):
    pass
