"""Exception classes shared across the package."""


class MosaicLabError(Exception):
    """Base class for every structural error raised by this package."""


class DuplicateLabel(MosaicLabError):
    pass


class CyclicCovers(MosaicLabError):
    pass


class NotBounded(MosaicLabError):
    pass


class NotALattice(MosaicLabError):
    """Some pair has no unique least upper / greatest lower bound."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotAnOrthocomplementation(MosaicLabError):
    pass


class NotASublattice(MosaicLabError):
    pass


class NotASubmosaic(MosaicLabError):
    pass


class NotAnLMosaic(MosaicLabError):
    pass


class SizeMismatch(MosaicLabError):
    pass


class MissingBound(MosaicLabError):
    pass


class NoUniqueExtremum(MosaicLabError):
    pass


class ReconstructionFailure(MosaicLabError):
    """A claimed dualizable L-mosaic does not define a pi-ortholattice."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionFailed(MosaicLabError):
    pass


class UnknownName(MosaicLabError):
    pass


class SizeTooLarge(MosaicLabError):
    pass


class MissingOrtho(MosaicLabError):
    pass


class FormatError(MosaicLabError):
    """Malformed lattice / mosaic-table JSON."""
