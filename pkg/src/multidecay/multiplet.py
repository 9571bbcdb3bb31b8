"""Domain types for the driven upper-state multiplet.

A two-level emitter dressed by an intense low-frequency field behaves as a
ladder of 2N+1 closely spaced upper levels, indexed j = -N..+N, all decaying
to one common ground state. Everything here is expressed in units of the
bare decay rate (rates) and its inverse (times).
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .errors import (
    NegativeRate,
    ShapeMismatch,
    UnphysicalInitialNorm,
    UnphysicalPhotonNumber,
)

FRAME_LAB = "lab"
FRAME_ROTATING = "rotating"

# Slack on the <= 1 initial-norm bound, to admit unit vectors built in
# floating point.
_NORM_SLACK = 1e-12


@dataclass(frozen=True)
class DrivingFieldSpec:
    """Physical drive parameters from which effective level rates derive.

    gamma0       bare spontaneous decay rate of the transition; sets the
                 frequency unit, so it is usually 1.
    gbar         complex i-photon coupling amplitudes of the drive,
                 ordered i = 1..N.
    n_photons    mean drive photon number; real-valued so the strong-field
                 limit can be taken smoothly.
    exact_ladder if True, keep the exact ladder factors n, n+1, n(n-1),
                 (n+1)(n+2), ...; if False, use the strong-field
                 approximation where n, n+1 and n-1 coincide.
    """

    gamma0: float
    gbar: tuple[complex, ...]
    n_photons: float
    exact_ladder: bool = False

    def __post_init__(self):
        object.__setattr__(self, "gbar", tuple(complex(g) for g in self.gbar))
        if self.gamma0 < 0:
            raise NegativeRate(f"gamma0 must be >= 0, got {self.gamma0}")
        if self.n_photons <= 0:
            raise ValueError(f"n_photons must be > 0, got {self.n_photons}")

    @property
    def half_width(self) -> int:
        return len(self.gbar)


def effective_rates(spec: DrivingFieldSpec) -> np.ndarray:
    """Per-level decay rates of the dressed multiplet, ordered j = -N..+N.

    Under a flat vacuum mode density across the multiplet the central rate
    is ``gamma0`` and the side rates scale with the squared coupling
    amplitudes times photon-number ladder factors:

      strong field:  rate(+-i) = gamma0 * |gbar_i|^2 * n^i
      exact ladder:  rate(-i)  = gamma0 * |gbar_i|^2 * n(n-1)...(n-i+1)
                     rate(+i)  = gamma0 * |gbar_i|^2 * (n+1)(n+2)...(n+i)

    Raises UnphysicalPhotonNumber when the exact ladder is requested with a
    photon number too small for the factors to behave as rates.
    """
    n = spec.n_photons
    half = spec.half_width
    if spec.exact_ladder and half >= 2 and n < 2:
        raise UnphysicalPhotonNumber(
            f"exact ladder with {half}-photon channels needs n >= 2, got {n}"
        )
    rates = np.zeros(2 * half + 1)
    rates[half] = spec.gamma0
    for i, amp in enumerate(spec.gbar, start=1):
        coupling = spec.gamma0 * abs(amp) ** 2
        if spec.exact_ladder:
            down = np.prod([n - k for k in range(i)])
            up = np.prod([n + k for k in range(1, i + 1)])
        else:
            down = up = n**i
        if down < 0:
            # only reachable for i >= 4 with 2 <= n < i-1
            raise UnphysicalPhotonNumber(
                f"ladder factor for the {i}-photon channel is negative at n={n}"
            )
        rates[half - i] = coupling * down
        rates[half + i] = coupling * up
    return rates


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class MultipletParams:
    """Complete description of one simulation.

    half_width  number of drive photons exchangeable per transition (N).
    gamma       2N+1 per-level decay rates, ordered j = -N..+N, in units of
                the bare rate.
    omega_bar   drive frequency in units of the bare rate.
    initial     2N+1 initial complex amplitudes, same ordering.
    """

    half_width: int
    gamma: np.ndarray
    omega_bar: float
    initial: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "gamma", _readonly(np.asarray(self.gamma, dtype=float)))
        object.__setattr__(self, "initial", _readonly(np.asarray(self.initial, dtype=complex)))

    @classmethod
    def central_excitation(cls, gamma, omega_bar: float) -> "MultipletParams":
        """Params with all population started in the central level."""
        gamma = np.asarray(gamma, dtype=float)
        if gamma.ndim != 1 or gamma.size % 2 == 0:
            raise ShapeMismatch(f"gamma must have odd length, got shape {gamma.shape}")
        half = (gamma.size - 1) // 2
        initial = np.zeros(gamma.size, dtype=complex)
        initial[half] = 1.0
        return validate(cls(half, gamma, float(omega_bar), initial))

    @property
    def levels(self) -> np.ndarray:
        """Level indices j = -N..+N."""
        return np.arange(-self.half_width, self.half_width + 1)

    @property
    def amplitude_couplings(self) -> np.ndarray:
        """sqrt of the per-level rates; the common decay channel vector."""
        return np.sqrt(self.gamma)

    def fingerprint(self) -> str:
        """Opaque content hash, stable across processes."""
        h = hashlib.sha256()
        h.update(np.int64(self.half_width).tobytes())
        h.update(self.gamma.tobytes())
        h.update(np.float64(self.omega_bar).tobytes())
        h.update(self.initial.tobytes())
        return h.hexdigest()


def validate(params: MultipletParams) -> MultipletParams:
    """Check all type invariants; return the params unchanged if they hold."""
    size = 2 * params.half_width + 1
    if params.half_width < 0:
        raise ShapeMismatch(f"half_width must be >= 0, got {params.half_width}")
    if params.gamma.shape != (size,):
        raise ShapeMismatch(
            f"gamma has length {params.gamma.size}, expected {size} for half_width {params.half_width}"
        )
    if params.initial.shape != (size,):
        raise ShapeMismatch(
            f"initial has length {params.initial.size}, expected {size} for half_width {params.half_width}"
        )
    if np.any(params.gamma < 0):
        raise NegativeRate(f"gamma must be elementwise >= 0, got {params.gamma.tolist()}")
    if params.omega_bar < 0:
        raise ValueError(f"omega_bar must be >= 0, got {params.omega_bar}")
    norm2 = float(np.sum(np.abs(params.initial) ** 2))
    if norm2 == 0 or norm2 > 1 + _NORM_SLACK:
        raise UnphysicalInitialNorm(f"initial norm^2 must lie in (0, 1], got {norm2}")
    return params


@dataclass(frozen=True)
class AmplitudeVector:
    """The 2N+1 complex upper-level amplitudes at one instant."""

    amps: np.ndarray
    frame: str = FRAME_LAB
    time: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "amps", _readonly(np.asarray(self.amps, dtype=complex)))
        if self.frame not in (FRAME_LAB, FRAME_ROTATING):
            raise ValueError(f"frame must be '{FRAME_LAB}' or '{FRAME_ROTATING}'")
        if self.time < 0:
            raise ValueError(f"time must be >= 0, got {self.time}")

    @property
    def half_width(self) -> int:
        return (self.amps.size - 1) // 2

    def populations(self) -> np.ndarray:
        return np.abs(self.amps) ** 2

    def total_population(self) -> float:
        return float(np.sum(self.populations()))

    def in_frame(self, frame: str, omega_bar: float) -> "AmplitudeVector":
        """Convert between lab and rotating frames.

        Rotating amplitudes carry a phase exp(-i j omega_bar t) relative to
        lab ones; per-level magnitudes are frame independent.
        """
        if frame not in (FRAME_LAB, FRAME_ROTATING):
            raise ValueError(f"frame must be '{FRAME_LAB}' or '{FRAME_ROTATING}'")
        if frame == self.frame:
            return self
        levels = np.arange(-self.half_width, self.half_width + 1)
        sign = -1.0 if frame == FRAME_ROTATING else 1.0
        phases = np.exp(sign * 1j * levels * omega_bar * self.time)
        return AmplitudeVector(self.amps * phases, frame, self.time)
