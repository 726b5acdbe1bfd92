"""Exception taxonomy shared by all modules."""


class HitmisError(Exception):
    """Base class for all library errors."""


class OutOfRangeError(HitmisError):
    """A vertex index or set bit is outside 0..n-1."""


class SelfLoopError(HitmisError):
    """An edge (u, u) was supplied; graphs are simple."""


class SizeLimitError(HitmisError):
    """Instance exceeds a configured exact-engine cap."""


class ExplosionError(SizeLimitError):
    """Enumeration produced more objects than the configured safety cap."""


class GeneralPositionError(HitmisError):
    """Geometric input has coincident endpoint values."""


class InvalidCertificateError(HitmisError):
    """A supplied certificate (e.g. a clique partition) does not validate."""


class PreconditionError(HitmisError):
    """Operation precondition not met by the input."""


class TheoremViolationError(HitmisError):
    """A proof-backed assertion failed; indicates an implementation bug.

    Carries an optional trace payload for post-mortem dumps.
    """

    def __init__(self, message: str, trace: object = None):
        super().__init__(message)
        self.trace = trace


class InternalGeometryError(TheoremViolationError):
    """A geometric construction step that must succeed did not."""
