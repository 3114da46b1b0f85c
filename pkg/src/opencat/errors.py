"""Exception hierarchy shared by every module."""


class OpenCatError(Exception):
    """Base class for all errors raised by opencat."""


class BoundaryError(OpenCatError, ValueError):
    """Domains, codomains or feet do not line up."""


class FrameError(BoundaryError):
    """A cell or niche does not have the frame the operation expects."""


class NotInvertibleError(OpenCatError):
    """A map that was required to be an isomorphism is not one."""


class NaturalityError(OpenCatError):
    """A family of components fails a naturality square."""


class FactorizationError(OpenCatError):
    """A cell does not factor through a restriction cell."""


class CyclicGraphError(OpenCatError, ValueError):
    """A free category was requested on a graph with a directed cycle."""


class CoherenceError(OpenCatError):
    """A coherence isomorphism failed to verify while being constructed."""


class UnsupportedError(OpenCatError):
    """The operation is outside what this package implements."""
