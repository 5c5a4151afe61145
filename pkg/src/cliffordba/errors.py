"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all engine failures."""


class DegeneratePolynomialError(EngineError, ValueError):
    """Zero polynomial passed where a nonzero one is required."""


class IllConditionedError(EngineError, RuntimeError):
    """Linear system condition estimate exceeds the trust threshold."""


class SingularGluingError(EngineError, RuntimeError):
    """Gluing system determinant below the singularity threshold."""


class PoleProximityError(EngineError, ValueError):
    """Evaluation point inside the exclusion radius of a pole or marked point."""


class StencilError(EngineError, RuntimeError):
    """A finite-difference stencil point hit a singularity."""


class SurfaceClosureError(EngineError, RuntimeError):
    """Period defect of the reconstructed surface above tolerance."""


class UnsupportedCurveError(EngineError, ValueError):
    """Curve data outside the supported configuration."""


class FloquetError(EngineError, RuntimeError):
    """Candidate function is not a joint translation eigenfunction."""


class AlignmentError(EngineError, RuntimeError):
    """Reconstructed surface does not match the aligned reference."""
