"""Derived quantities: trapped population, burst/quiescent phases, sweeps."""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .dynamics import Trajectory, propagate
from .errors import AllRatesZero, NoQuiescentPhase, NonDegenerate
from .multiplet import MultipletParams, validate

# Probe-time defaults for sweep summaries: the largest time of interest for
# frequency sweeps resp. side-rate sweeps.
OMEGA_SWEEP_PROBE_TIME = 300.0
GAMMA_SWEEP_PROBE_TIME = 20.0

# Number of consecutive samples the instantaneous rate must stay below the
# threshold before the burst phase is declared over; guards against the
# oscillatory population exchange of the quiescent phase.
_PERSISTENCE = 10

_MIN_PHASE_SPAN = 10.0
_MIN_PHASE_SAMPLES = 100


@dataclass(frozen=True)
class PhaseReport:
    """Burst-phase end time and quiescent-phase effective decay rate."""

    burst_end: float
    quiescent_rate: float
    threshold: float


@dataclass(frozen=True)
class SweepResult:
    """Aligned parameter values, their trajectories, and probe-time summaries."""

    parameter_name: str  # "omega_bar" or "gamma_side"
    values: np.ndarray
    trajectories: tuple[Trajectory, ...]
    summary: np.ndarray  # total population at the probe time, per value

    def __post_init__(self):
        for name in ("values", "summary"):
            a = np.asarray(getattr(self, name), dtype=float)
            a.flags.writeable = False
            object.__setattr__(self, name, a)


def trapped_fraction(params: MultipletParams) -> float:
    """Exact long-time population for a degenerate multiplet (omega_bar = 0).

    With all levels degenerate the generator's decaying direction is the
    channel vector v_j = sqrt(rate_j); the component of the initial
    amplitudes orthogonal to v is dark and survives forever:

        trapped = |initial|^2 - |v . initial|^2 / |v|^2
    """
    params = validate(params)
    if params.omega_bar != 0:
        raise NonDegenerate(
            f"trapped_fraction requires omega_bar = 0, got {params.omega_bar}"
        )
    v = params.amplitude_couplings
    v_norm2 = float(v @ v)
    if v_norm2 == 0:
        raise AllRatesZero("all decay rates are zero; nothing decays, trapping is vacuous")
    norm2 = float(np.sum(np.abs(params.initial) ** 2))
    bright = abs(np.vdot(v, params.initial)) ** 2 / v_norm2
    return norm2 - bright


def detect_phases(traj: Trajectory, threshold: float) -> PhaseReport:
    """Locate the burst/quiescent boundary and fit the quiescent decay rate.

    The instantaneous rate r(t) = -d ln(total)/dt is estimated by centered
    differences on the sample grid. The burst phase ends at the first sample
    where r drops below the threshold and stays below it for the next
    10 samples; the quiescent rate is the least-squares slope of -ln(total)
    from there to the end of the grid.

    The trajectory must cover at least t in [0, 10] with 100 or more
    samples. Raises NoQuiescentPhase when the rate never settles below the
    threshold.
    """
    times = traj.times
    if times.size < _MIN_PHASE_SAMPLES or times[-1] < _MIN_PHASE_SPAN:
        raise ValueError(
            f"phase detection needs >= {_MIN_PHASE_SAMPLES} samples covering "
            f"t in [0, {_MIN_PHASE_SPAN}]"
        )
    if threshold <= 0:
        raise ValueError(f"threshold must be > 0, got {threshold}")

    log_total = np.log(np.maximum(traj.total, 1e-300))
    rate = np.empty_like(log_total)
    rate[1:-1] = -(log_total[2:] - log_total[:-2]) / (times[2:] - times[:-2])
    rate[0] = rate[1]
    rate[-1] = rate[-2]

    below = rate < threshold
    burst_idx = None
    # centered differences are defined on interior samples only
    for k in range(1, times.size - 1 - _PERSISTENCE):
        if below[k : k + _PERSISTENCE + 1].all():
            burst_idx = k
            break
    if burst_idx is None:
        raise NoQuiescentPhase(
            f"instantaneous rate never stays below {threshold} on this grid"
        )

    t_fit = times[burst_idx:]
    y_fit = -log_total[burst_idx:]
    t_centered = t_fit - t_fit.mean()
    slope = float(t_centered @ (y_fit - y_fit.mean()) / (t_centered @ t_centered))
    return PhaseReport(float(times[burst_idx]), slope, threshold)


def _run_sweep(name: str, base: MultipletParams, points, probe_time: float,
               n_samples: int) -> SweepResult:
    values = np.asarray(points, dtype=float)
    if values.size == 0:
        raise ValueError(f"{name} sweep needs at least one value")
    if np.any(values < 0):
        raise ValueError(f"{name} sweep values must be >= 0")
    if probe_time <= 0:
        raise ValueError(f"probe_time must be > 0, got {probe_time}")
    grid = np.linspace(0.0, probe_time, n_samples)
    trajectories = []
    for value in values:
        if name == "omega_bar":
            point = replace(base, omega_bar=float(value))
        else:
            gamma = np.array(base.gamma)
            side = np.arange(gamma.size) != base.half_width
            gamma[side] = value
            point = replace(base, gamma=gamma)
        trajectories.append(propagate(point, grid))
    summary = np.array([t.total[-1] for t in trajectories])
    return SweepResult(name, values, tuple(trajectories), summary)


def sweep_omega(base: MultipletParams, omegas,
                probe_time: float = OMEGA_SWEEP_PROBE_TIME,
                n_samples: int = 1000) -> SweepResult:
    """One trajectory per drive frequency, all other parameters fixed."""
    return _run_sweep("omega_bar", validate(base), omegas, probe_time, n_samples)


def sweep_gamma_side(base: MultipletParams, gammas,
                     probe_time: float = GAMMA_SWEEP_PROBE_TIME,
                     n_samples: int = 1000) -> SweepResult:
    """One trajectory per side-level rate, applied symmetrically to all
    levels j != 0; the central rate and drive frequency stay fixed."""
    return _run_sweep("gamma_side", validate(base), gammas, probe_time, n_samples)
