"""Exception hierarchy shared by all thermopath modules."""


class ThermopathError(Exception):
    """Base class for all errors raised by this package."""


class UnsupportedDerivativeOrder(ThermopathError):
    """Requested a potential derivative beyond the stored order."""


class NegativeDiscriminant(ThermopathError):
    """V(x) < V(y) where a real Euclidean speed was required."""


class NonMonotonicSegment(ThermopathError):
    """The potential dips to or below the turning level between endpoints."""


class ModulusOutOfRange(ThermopathError):
    """Elliptic modulus outside [0, 1)."""


class CausticSingular(ThermopathError):
    """Fluctuation determinant vanishes (control point sits on a caustic)."""


class InconsistentTrajectory(ThermopathError):
    """Trajectory bookkeeping (motion class / turning points) disagrees."""


class DegenerateTrajectory(ThermopathError):
    """Operation undefined for a constant (zero-velocity) trajectory."""


class FocalPoint(ThermopathError):
    """Conjugate point between the requested times; Gaussian kernel undefined."""


class OutsideBoundedRegion(ThermopathError):
    """No bounded Euclidean motion exists at the requested start point."""


class NonConfiningPotential(ThermopathError):
    """Potential does not grow at infinity; partition integral diverges."""


class QuadratureFailure(ThermopathError):
    """Adaptive quadrature failed to converge; carries panel diagnostics."""

    def __init__(self, message, panels=None):
        super().__init__(message)
        self.panels = panels or []


class NotConverged(ThermopathError):
    """Spectral oracle did not converge under grid refinement."""


class TailTooFat(ThermopathError):
    """Spectral sum truncation error above tolerance."""


class NonAsymptotic(ThermopathError):
    """Fit window not in the asymptotic large-beta regime."""
