"""Exception types shared across the package."""


class MolgateError(Exception):
    """Base class for all package-specific errors."""


class PulseDomainError(MolgateError):
    """Time argument outside the two-pulse window."""


class CalibrationError(MolgateError):
    """Pulse-area calibration did not converge to the requested residual."""


class DegenerateSectorError(MolgateError):
    """Dressed-state branches cannot be labeled (J = 0 and drive = 0)."""


class TruncationError(MolgateError):
    """Fock-space truncation too small for the requested operation."""


class DimensionError(MolgateError):
    """Operator or state dimensions do not match the expected space."""


class ConvergenceError(MolgateError):
    """Step-size refinement failed to reach the configured tolerance."""


class UnitarityError(MolgateError):
    """Propagator failed the unitarity residual check."""


class ConfigError(MolgateError):
    """Invalid run configuration; message names the offending field."""
