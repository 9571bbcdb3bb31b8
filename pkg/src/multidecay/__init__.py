"""Population-trapping dynamics of a driven upper-state multiplet.

An intense low-frequency field dresses a decaying two-level transition into
a ladder of 2N+1 closely spaced upper levels that share one ground state.
The decay amplitudes of the levels interfere, which can slow the usual
exponential decay down dramatically; this package propagates the coupled
amplitude equations, quantifies the trapped population, and reproduces the
characteristic frequency and intensity dependences.
"""
from ._backend import KERNEL_BACKEND
from .analysis import (
    GAMMA_SWEEP_PROBE_TIME,
    OMEGA_SWEEP_PROBE_TIME,
    PhaseReport,
    SweepResult,
    detect_phases,
    sweep_gamma_side,
    sweep_omega,
    trapped_fraction,
)
from .config import RunConfig, parse_config, render_config
from .dynamics import (
    Generator,
    Trajectory,
    build_generator,
    integrate_lab,
    population_series,
    propagate,
)
from .errors import (
    AllRatesZero,
    ConfigRange,
    ConfigSyntax,
    EmptyTimeGrid,
    MultidecayError,
    NegativeRate,
    NoQuiescentPhase,
    NonDegenerate,
    NonMonotoneTimeGrid,
    ShapeMismatch,
    StepTooLarge,
    UnphysicalInitialNorm,
    UnphysicalPhotonNumber,
)
from .multiplet import (
    FRAME_LAB,
    FRAME_ROTATING,
    AmplitudeVector,
    DrivingFieldSpec,
    MultipletParams,
    effective_rates,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "AllRatesZero",
    "AmplitudeVector",
    "ConfigRange",
    "ConfigSyntax",
    "DrivingFieldSpec",
    "EmptyTimeGrid",
    "FRAME_LAB",
    "FRAME_ROTATING",
    "GAMMA_SWEEP_PROBE_TIME",
    "Generator",
    "KERNEL_BACKEND",
    "MultidecayError",
    "MultipletParams",
    "NegativeRate",
    "NoQuiescentPhase",
    "NonDegenerate",
    "NonMonotoneTimeGrid",
    "OMEGA_SWEEP_PROBE_TIME",
    "PhaseReport",
    "RunConfig",
    "ShapeMismatch",
    "StepTooLarge",
    "SweepResult",
    "Trajectory",
    "UnphysicalInitialNorm",
    "UnphysicalPhotonNumber",
    "build_generator",
    "detect_phases",
    "effective_rates",
    "integrate_lab",
    "parse_config",
    "population_series",
    "propagate",
    "render_config",
    "sweep_gamma_side",
    "sweep_omega",
    "trapped_fraction",
    "validate",
]
