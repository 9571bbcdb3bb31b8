"""Exception types raised across the package."""


class MultidecayError(Exception):
    """Base class for all errors raised by multidecay."""


class NegativeRate(MultidecayError, ValueError):
    """A per-level decay rate is negative."""


class ShapeMismatch(MultidecayError, ValueError):
    """Rate or amplitude list length is inconsistent with the half-width."""


class UnphysicalInitialNorm(MultidecayError, ValueError):
    """Initial amplitudes have zero total norm or total norm above one."""


class UnphysicalPhotonNumber(MultidecayError, ValueError):
    """Photon number too small for the exact ladder factors requested."""


class EmptyTimeGrid(MultidecayError, ValueError):
    """The requested time grid contains no points."""


class NonMonotoneTimeGrid(MultidecayError, ValueError):
    """The requested time grid is not strictly increasing."""


class StepTooLarge(MultidecayError, ValueError):
    """Fixed integration step violates the accuracy guard."""


class NonDegenerate(MultidecayError, ValueError):
    """Operation requires a degenerate multiplet (zero drive frequency)."""


class AllRatesZero(MultidecayError, ValueError):
    """Every decay rate is zero, so trapping is vacuous."""


class NoQuiescentPhase(MultidecayError, RuntimeError):
    """The instantaneous decay rate never drops below the threshold."""


class ConfigError(MultidecayError, ValueError):
    """Configuration problem tied to a specific key."""

    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key


class ConfigSyntax(ConfigError):
    """Configuration document is malformed."""


class ConfigRange(ConfigError):
    """Configuration value is outside its allowed range."""
