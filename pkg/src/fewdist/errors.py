"""Exception types raised across the package."""


class FewDistError(ValueError):
    """Base class for invalid-input errors."""


class NonSquareError(FewDistError):
    pass


class NonSymmetricError(FewDistError):
    pass


class DimensionMismatchError(FewDistError):
    pass


class DuplicatePointsError(FewDistError):
    pass


class InvalidPointSetError(FewDistError):
    pass


class DegreeTooHighError(FewDistError):
    """A pair polynomial's degree bound exceeds ``2*s + 1``."""


class SetTooLargeError(FewDistError):
    pass


class ParseError(FewDistError):
    pass
