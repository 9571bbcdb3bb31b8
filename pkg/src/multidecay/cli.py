"""Command-line front end: simulate | sweep | phases.

Emits figure-ready tables as CSV (15 significant digits, '\\n' line
endings, byte-deterministic) or JSON (array of records with the same field
names). Exit status: 0 success, 1 I/O or unexpected failure, 2 configuration
or validation error, 3 no quiescent phase detected.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .analysis import detect_phases, sweep_gamma_side, sweep_omega
from .config import RunConfig, apply_overrides, parse_config
from .dynamics import propagate
from .errors import ConfigRange, MultidecayError, NoQuiescentPhase


def _fmt(value) -> str:
    return format(float(value), ".15g")


def _table_csv(header, rows) -> str:
    lines = [",".join(header)]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


def _records(header, rows):
    return [dict(zip(header, (float(v) for v in row))) for row in rows]


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _summary_path(path: str) -> str:
    p = Path(path)
    return str(p.with_name(p.stem + ".summary" + p.suffix))


def _simulate_table(config: RunConfig):
    traj = propagate(config.to_params(), config.time_grid())
    levels = range(-config.half_width, config.half_width + 1)
    header = ["t", "total"] + [f"pop_{j}" for j in levels]
    rows = [
        [traj.times[k], traj.total[k], *traj.populations[k]]
        for k in range(traj.times.size)
    ]
    return header, rows


def cmd_simulate(config: RunConfig) -> int:
    header, rows = _simulate_table(config)
    if config.format == "json":
        _write_text(config.output, json.dumps(_records(header, rows), indent=2) + "\n")
    else:
        _write_text(config.output, _table_csv(header, rows))
    return 0


def cmd_sweep(config: RunConfig) -> int:
    if config.sweep_param is None:
        raise ConfigRange("sweep_param", "required for the sweep command")
    if not config.sweep_values:
        raise ConfigRange("sweep_values", "required for the sweep command")
    runner = sweep_omega if config.sweep_param == "omega_bar" else sweep_gamma_side
    result = runner(
        config.to_params(),
        config.sweep_values,
        probe_time=config.resolved_probe_time(),
        n_samples=config.samples,
    )

    long_header = ["sweep_value", "t", "total"]
    long_rows = [
        [value, traj.times[k], traj.total[k]]
        for value, traj in zip(result.values, result.trajectories)
        for k in range(traj.times.size)
    ]
    summary_header = ["sweep_value", "total"]
    summary_rows = [[v, s] for v, s in zip(result.values, result.summary)]

    if config.format == "json":
        payload = {
            "curves": _records(long_header, long_rows),
            "summary": _records(summary_header, summary_rows),
        }
        _write_text(config.output, json.dumps(payload, indent=2) + "\n")
    elif config.output is None:
        sys.stdout.write(_table_csv(long_header, long_rows))
        sys.stdout.write("\n")
        sys.stdout.write(_table_csv(summary_header, summary_rows))
    else:
        _write_text(config.output, _table_csv(long_header, long_rows))
        _write_text(_summary_path(config.output), _table_csv(summary_header, summary_rows))
    return 0


def cmd_phases(config: RunConfig) -> int:
    traj = propagate(config.to_params(), config.time_grid())
    report = detect_phases(traj, config.threshold)
    header = ["burst_end", "quiescent_rate", "threshold"]
    rows = [[report.burst_end, report.quiescent_rate, report.threshold]]
    if config.format == "json":
        _write_text(config.output, json.dumps(_records(header, rows), indent=2) + "\n")
    else:
        _write_text(config.output, _table_csv(header, rows))
    return 0


def _parse_value_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part.strip()) for part in text.split(","))
    except ValueError:
        raise ConfigRange("sweep_values", f"expected comma-separated numbers, got {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--config", metavar="PATH", help="configuration file (key = value lines)")
    shared.add_argument("--t-max", type=float, dest="t_max", help="simulation horizon")
    shared.add_argument("--samples", type=int, help="number of output samples (including t=0)")
    shared.add_argument("--output", metavar="PATH", help="output file (default: stdout)")
    shared.add_argument("--format", choices=("csv", "json"), help="output format")
    shared.add_argument("--threshold", type=float, help="phase-detection rate threshold")
    shared.add_argument("--sweep-param", dest="sweep_param", choices=("omega_bar", "gamma_side"))
    shared.add_argument("--sweep-values", dest="sweep_values", metavar="V1,V2,...")
    shared.add_argument("--probe-time", type=float, dest="probe_time", help="sweep summary time")

    parser = argparse.ArgumentParser(
        prog="multidecay",
        description="Decay dynamics of a driven upper-state multiplet with interfering channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("simulate", parents=[shared], help="per-level and total populations over time")
    sub.add_parser("sweep", parents=[shared], help="families of curves over a parameter list")
    sub.add_parser("phases", parents=[shared], help="burst end and quiescent decay rate")
    return parser


def _load_config(args: argparse.Namespace) -> RunConfig:
    text = ""
    if args.config is not None:
        text = Path(args.config).read_text(encoding="utf-8")
    config = parse_config(text)
    sweep_values = _parse_value_list(args.sweep_values) if args.sweep_values else None
    return apply_overrides(
        config,
        t_max=args.t_max,
        samples=args.samples,
        output=args.output,
        format=args.format,
        threshold=args.threshold,
        sweep_param=args.sweep_param,
        sweep_values=sweep_values,
        probe_time=args.probe_time,
    )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _load_config(args)
        if args.command == "simulate":
            return cmd_simulate(config)
        if args.command == "sweep":
            return cmd_sweep(config)
        return cmd_phases(config)
    except NoQuiescentPhase as exc:
        print(f"multidecay: no quiescent phase: {exc}", file=sys.stderr)
        return 3
    except (MultidecayError, ValueError) as exc:
        print(f"multidecay: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"multidecay: i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
