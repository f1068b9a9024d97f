"""Exception types raised across the package."""


class VacTabError(ValueError):
    """Base class for all domain errors."""


class CellOutsideShape(VacTabError):
    pass


class NotACorner(VacTabError):
    pass


class EntryNotPresent(VacTabError):
    pass


class EntryOutOfRange(VacTabError):
    pass


class ShapeMismatch(VacTabError):
    pass


class InvalidRecordingTableau(VacTabError):
    pass


class InvalidWalk(VacTabError):
    pass


class InconsistentImage(VacTabError):
    pass


class InvalidInvolution(VacTabError):
    pass


class BoundExceeded(VacTabError):
    pass


class UnsupportedVariant(VacTabError):
    pass


class UnknownIdentity(VacTabError):
    pass


class OutOfDomain(VacTabError):
    pass


class InexactDivision(VacTabError):
    pass
