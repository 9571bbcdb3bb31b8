"""Run configuration: flat key=value documents, defaults, round-trip rendering.

Format rules: one ``key = value`` pair per line; blank lines and lines
starting with ``#`` are ignored; list values are comma separated; complex
values are written as ``re+imi`` pairs (e.g. ``0.5-0.25i``). Unknown and
duplicate keys are rejected.
"""
from __future__ import annotations

from dataclasses import dataclass, fields, replace

import numpy as np

from .analysis import GAMMA_SWEEP_PROBE_TIME, OMEGA_SWEEP_PROBE_TIME
from .errors import ConfigRange, ConfigSyntax
from .multiplet import MultipletParams

SWEEP_PARAMS = ("omega_bar", "gamma_side")
FORMATS = ("csv", "json")


@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation needs.

    Defaults describe the canonical demonstration system: a three-level
    multiplet with side rates at half the central rate, drive frequency a
    tenth of the central rate, and all population starting in the central
    level.
    """

    half_width: int = 1
    gamma: tuple[float, ...] = (0.5, 1.0, 0.5)
    omega_bar: float = 0.1
    initial: tuple[complex, ...] = (0j, 1 + 0j, 0j)
    t_max: float = 50.0
    samples: int = 1000
    threshold: float = 0.1
    sweep_param: str | None = None
    sweep_values: tuple[float, ...] | None = None
    probe_time: float | None = None
    output: str | None = None
    format: str = "csv"

    def to_params(self) -> MultipletParams:
        return MultipletParams(
            self.half_width,
            np.array(self.gamma),
            self.omega_bar,
            np.array(self.initial),
        )

    def resolved_probe_time(self) -> float:
        if self.probe_time is not None:
            return self.probe_time
        if self.sweep_param == "gamma_side":
            return GAMMA_SWEEP_PROBE_TIME
        return OMEGA_SWEEP_PROBE_TIME

    def time_grid(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.samples)


def _default_gamma(half_width: int) -> tuple[float, ...]:
    gamma = [0.5] * (2 * half_width + 1)
    gamma[half_width] = 1.0
    return tuple(gamma)


def _default_initial(half_width: int) -> tuple[complex, ...]:
    initial = [0j] * (2 * half_width + 1)
    initial[half_width] = 1 + 0j
    return tuple(initial)


def _parse_float(key: str, text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigSyntax(key, f"expected a number, got {text!r}") from None


def _parse_int(key: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ConfigSyntax(key, f"expected an integer, got {text!r}") from None


def _parse_complex(key: str, text: str) -> complex:
    try:
        return complex(text.replace("i", "j").replace(" ", ""))
    except ValueError:
        raise ConfigSyntax(key, f"expected a complex 're+imi' value, got {text!r}") from None


def _split_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",")]


def _format_float(x: float) -> str:
    return repr(float(x))


def _format_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{_format_float(z.real)}{sign}{_format_float(abs(z.imag))}i"


def parse_config(text: str) -> RunConfig:
    """Parse a configuration document, apply defaults, check ranges."""
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigSyntax(f"line {lineno}", f"expected 'key = value', got {stripped!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.strip()
        if key in raw:
            raise ConfigSyntax(key, "duplicate key")
        raw[key] = value

    known = {f.name for f in fields(RunConfig)}
    for key in raw:
        if key not in known:
            raise ConfigSyntax(key, "unknown key")

    half_width = _parse_int("half_width", raw["half_width"]) if "half_width" in raw else 1
    if half_width < 0:
        raise ConfigRange("half_width", f"must be >= 0, got {half_width}")
    size = 2 * half_width + 1

    if "gamma" in raw:
        gamma = tuple(_parse_float("gamma", s) for s in _split_list(raw["gamma"]))
    else:
        gamma = _default_gamma(half_width)
    if len(gamma) != size:
        raise ConfigRange("gamma", f"needs {size} entries for half_width {half_width}, got {len(gamma)}")
    if any(g < 0 for g in gamma):
        raise ConfigRange("gamma", "rates must be >= 0")

    omega_bar = _parse_float("omega_bar", raw["omega_bar"]) if "omega_bar" in raw else 0.1
    if omega_bar < 0:
        raise ConfigRange("omega_bar", f"must be >= 0, got {omega_bar}")

    if "initial" in raw:
        initial = tuple(_parse_complex("initial", s) for s in _split_list(raw["initial"]))
    else:
        initial = _default_initial(half_width)
    if len(initial) != size:
        raise ConfigRange("initial", f"needs {size} entries for half_width {half_width}, got {len(initial)}")
    norm2 = sum(abs(z) ** 2 for z in initial)
    if norm2 == 0 or norm2 > 1 + 1e-12:
        raise ConfigRange("initial", f"norm^2 must lie in (0, 1], got {norm2}")

    t_max = _parse_float("t_max", raw["t_max"]) if "t_max" in raw else 50.0
    if t_max <= 0:
        raise ConfigRange("t_max", f"must be > 0, got {t_max}")

    samples = _parse_int("samples", raw["samples"]) if "samples" in raw else 1000
    if samples < 2:
        raise ConfigRange("samples", f"must be >= 2, got {samples}")

    threshold = _parse_float("threshold", raw["threshold"]) if "threshold" in raw else 0.1
    if threshold <= 0:
        raise ConfigRange("threshold", f"must be > 0, got {threshold}")

    sweep_param = raw.get("sweep_param")
    if sweep_param is not None and sweep_param not in SWEEP_PARAMS:
        raise ConfigRange("sweep_param", f"must be one of {SWEEP_PARAMS}, got {sweep_param!r}")

    sweep_values = None
    if "sweep_values" in raw:
        sweep_values = tuple(
            _parse_float("sweep_values", s) for s in _split_list(raw["sweep_values"])
        )
        if not sweep_values:
            raise ConfigRange("sweep_values", "must not be empty")
        if any(v < 0 for v in sweep_values):
            raise ConfigRange("sweep_values", "values must be >= 0")
        if sweep_param is None:
            raise ConfigRange("sweep_param", "required when sweep_values is set")

    probe_time = None
    if "probe_time" in raw:
        probe_time = _parse_float("probe_time", raw["probe_time"])
        if probe_time <= 0:
            raise ConfigRange("probe_time", f"must be > 0, got {probe_time}")

    fmt = raw.get("format", "csv")
    if fmt not in FORMATS:
        raise ConfigRange("format", f"must be one of {FORMATS}, got {fmt!r}")

    return RunConfig(
        half_width=half_width,
        gamma=gamma,
        omega_bar=omega_bar,
        initial=initial,
        t_max=t_max,
        samples=samples,
        threshold=threshold,
        sweep_param=sweep_param,
        sweep_values=sweep_values,
        probe_time=probe_time,
        output=raw.get("output"),
        format=fmt,
    )


def render_config(config: RunConfig) -> str:
    """Render back to the key=value format; parse_config inverts this."""
    lines = [
        f"half_width = {config.half_width}",
        f"gamma = {', '.join(_format_float(g) for g in config.gamma)}",
        f"omega_bar = {_format_float(config.omega_bar)}",
        f"initial = {', '.join(_format_complex(z) for z in config.initial)}",
        f"t_max = {_format_float(config.t_max)}",
        f"samples = {config.samples}",
        f"threshold = {_format_float(config.threshold)}",
    ]
    if config.sweep_param is not None:
        lines.append(f"sweep_param = {config.sweep_param}")
    if config.sweep_values is not None:
        lines.append(f"sweep_values = {', '.join(_format_float(v) for v in config.sweep_values)}")
    if config.probe_time is not None:
        lines.append(f"probe_time = {_format_float(config.probe_time)}")
    if config.output is not None:
        lines.append(f"output = {config.output}")
    lines.append(f"format = {config.format}")
    return "\n".join(lines) + "\n"


def apply_overrides(config: RunConfig, **overrides) -> RunConfig:
    """Replace fields with non-None override values, re-checking ranges."""
    changed = {k: v for k, v in overrides.items() if v is not None}
    if not changed:
        return config
    merged = replace(config, **changed)
    # reuse the parser's range checks
    return parse_config(render_config(merged))
