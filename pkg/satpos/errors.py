"""
Domain exceptions raised by the satpos library.
"""


class SatposError(Exception):
    """
    Base class for every domain error raised by the library.

    Keyword arguments are kept in ``details`` (offending sizes, caps, guards)
    and reported next to the message by the CLI and the HTTP API.
    """

    def __init__(self, message: str = "", **details):
        super().__init__(message)
        self.details = details


class EmptyPolytope(SatposError):
    """The polytope has no rational point."""
    pass


class Unbounded(SatposError):
    """A coordinate (or objective) is unbounded over the polytope."""
    pass


class InconsistentSpan(SatposError):
    """The Smith-transformed affine span has a zero row with nonzero right-hand side."""
    pass


class InsufficientSamples(SatposError):
    """Some residue class has fewer samples than degree + 1."""
    pass


class InconsistentSamples(SatposError):
    """The samples of a residue class do not lie on one polynomial of the requested degree."""
    pass


class CapExceeded(SatposError):
    """No shift up to the cap satisfies the requested property."""
    pass


class SizeMismatch(SatposError):
    """Partitions (or partition and cycle type) have different sizes."""
    pass


class SizeGuardExceeded(SatposError):
    """Input exceeds the configured cost guard."""
    pass


class HeightViolation(SatposError):
    """A partition is taller than the algorithm supports."""
    pass


class HeightExceedsRank(SatposError):
    """A partition has more parts than the rank of GL_k."""
    pass


class DimensionMismatch(SatposError):
    """Vector lengths or hive side do not fit the inputs."""
    pass


class UnsupportedEmbedding(SatposError):
    """The requested restriction is not a GL_a x GL_b tensor embedding."""
    pass


class InsufficientHorizon(SatposError):
    """The sample horizon is too short to fit the requested quasi-polynomial."""
    pass


class RelaxationTooSmall(SatposError):
    """The relaxation parameter does not exceed the supplied index estimate."""
    pass
