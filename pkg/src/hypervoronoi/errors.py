"""Exception types shared across the package."""


class GeometryError(ValueError):
    """A geometric construction is impossible for the given inputs."""


class DegenerateInput(GeometryError):
    """Coincident or otherwise degenerate points where distinct ones are required."""


class ConfigError(ValueError):
    """An experiment configuration is invalid or exceeds resource caps."""


class PrecisionError(RuntimeError):
    """Inputs fall below the floating-point resolution floor of the Poincare embedding."""


class UncertifiedBoundary(RuntimeError):
    """A window-boundary effect could not be certified away."""


class BudgetExceeded(RuntimeError):
    """An enumeration or exploration hit its configured budget."""


class Inconclusive(RuntimeError):
    """A bisection failed to separate within the configured trial budget."""


class IoError(OSError):
    """Output file could not be written."""
