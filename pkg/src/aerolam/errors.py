"""Exception vocabulary shared by all modules."""


class AerolamError(Exception):
    """Base class for all domain errors."""


class BoundaryAngle(AerolamError):
    """An angle lies on a region-separating chord endpoint.

    ``index`` is the doubling iterate at which the boundary was hit.
    """

    def __init__(self, angle, index: int = 0):
        super().__init__(f"angle {angle} hits a region boundary at iterate {index}")
        self.angle = angle
        self.index = index


class InadmissibleWord(AerolamError):
    pass


class UnsupportedAlphabet(AerolamError):
    pass


class PrefixRelated(AerolamError):
    pass


class MissingFinalC(AerolamError):
    pass


class InadmissibleCycle(AerolamError):
    pass


class OverlapDetected(AerolamError):
    pass


class WindowViolation(AerolamError):
    pass


class DegenerateLeaf(AerolamError):
    pass


class EmptyRegion(AerolamError):
    pass


class NotFound(AerolamError):
    pass


class LiftMismatch(AerolamError):
    pass


class MultipleActiveComponents(AerolamError):
    pass


class PairingAmbiguity(AerolamError):
    pass


class UnsupportedAngle(AerolamError):
    pass
