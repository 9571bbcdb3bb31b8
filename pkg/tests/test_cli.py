"""CLI behavior: tables, formats, overrides, exit codes."""
import json

import numpy as np
import pytest

from multidecay.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text: str):
    lines = [line for line in text.strip().split("\n") if line]
    header = lines[0].split(",")
    rows = np.array([[float(x) for x in line.split(",")] for line in lines[1:]])
    return header, rows


class TestSimulate:
    def test_header_and_first_row(self, capsys):
        code, out, _ = run_cli(capsys, "simulate", "--t-max", "10", "--samples", "101")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["t", "total", "pop_-1", "pop_0", "pop_1"]
        assert rows[0].tolist() == [0.0, 1.0, 0.0, 1.0, 0.0]

    def test_side_columns_match(self, capsys):
        code, out, _ = run_cli(capsys, "simulate")
        header, rows = parse_csv(out)
        m1, p1 = header.index("pop_-1"), header.index("pop_1")
        assert np.abs(rows[:, m1] - rows[:, p1]).max() < 1e-10

    def test_no_drive_is_exponential(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("gamma = 0, 1, 0\n")
        code, out, _ = run_cli(capsys, "simulate", "--config", str(cfg))
        header, rows = parse_csv(out)
        total = rows[:, header.index("total")]
        assert np.abs(total - np.exp(-rows[:, 0])).max() < 1e-10

    def test_json_mirrors_csv(self, capsys):
        _, out_csv, _ = run_cli(capsys, "simulate", "--t-max", "5", "--samples", "6")
        _, out_json, _ = run_cli(
            capsys, "simulate", "--t-max", "5", "--samples", "6", "--format", "json"
        )
        header, rows = parse_csv(out_csv)
        records = json.loads(out_json)
        assert len(records) == rows.shape[0]
        assert list(records[0]) == header
        for k, record in enumerate(records):
            np.testing.assert_allclose(
                [record[name] for name in header], rows[k], rtol=1e-14, atol=1e-300
            )

    def test_output_file(self, capsys, tmp_path):
        out_path = tmp_path / "table.csv"
        code, out, _ = run_cli(
            capsys, "simulate", "--t-max", "5", "--samples", "6", "--output", str(out_path)
        )
        assert code == 0 and out == ""
        header, rows = parse_csv(out_path.read_text())
        assert rows.shape == (6, 5)

    def test_flags_override_config(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("t_max = 50\nsamples = 1000\n")
        _, out, _ = run_cli(
            capsys, "simulate", "--config", str(cfg), "--t-max", "2", "--samples", "3"
        )
        _, rows = parse_csv(out)
        assert rows.shape[0] == 3
        assert rows[-1, 0] == 2.0


class TestSweep:
    def test_stdout_has_curves_and_summary(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--sweep-param", "omega_bar",
            "--sweep-values", "0,0.1,0.3", "--probe-time", "50", "--samples", "200",
        )
        assert code == 0
        long_text, summary_text = out.split("\n\n")
        header, rows = parse_csv(long_text)
        assert header == ["sweep_value", "t", "total"]
        assert rows.shape[0] == 3 * 200
        sheader, srows = parse_csv(summary_text)
        assert sheader == ["sweep_value", "total"]
        assert srows.shape == (3, 2)
        # slower drive keeps more population
        assert np.all(np.diff(srows[:, 1]) < 0)

    def test_side_rate_sweep_increasing(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--sweep-param", "gamma_side",
            "--sweep-values", "0.01,0.5,5", "--samples", "200",
        )
        assert code == 0
        _, summary_text = out.split("\n\n")
        _, srows = parse_csv(summary_text)
        assert np.all(np.diff(srows[:, 1]) > 0)

    def test_single_value_sweep_matches_simulate(self, capsys):
        _, out_sweep, _ = run_cli(
            capsys, "sweep", "--sweep-param", "omega_bar", "--sweep-values", "0.1",
            "--probe-time", "50", "--samples", "300",
        )
        _, out_sim, _ = run_cli(capsys, "simulate", "--t-max", "50", "--samples", "300")
        long_text, _ = out_sweep.split("\n\n")
        _, sweep_rows = parse_csv(long_text)
        sim_header, sim_rows = parse_csv(out_sim)
        np.testing.assert_array_equal(sweep_rows[:, 1], sim_rows[:, 0])
        np.testing.assert_array_equal(sweep_rows[:, 2], sim_rows[:, 1])

    def test_file_output_writes_summary_sibling(self, capsys, tmp_path):
        out_path = tmp_path / "sweep.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--sweep-param", "gamma_side", "--sweep-values", "0.1,0.5",
            "--samples", "50", "--output", str(out_path),
        )
        assert code == 0
        assert out_path.exists()
        summary = tmp_path / "sweep.summary.csv"
        assert summary.exists()
        _, srows = parse_csv(summary.read_text())
        assert srows.shape == (2, 2)

    def test_json_object_layout(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--sweep-param", "omega_bar", "--sweep-values", "0.1",
            "--probe-time", "10", "--samples", "20", "--format", "json",
        )
        payload = json.loads(out)
        assert set(payload) == {"curves", "summary"}
        assert list(payload["curves"][0]) == ["sweep_value", "t", "total"]
        assert list(payload["summary"][0]) == ["sweep_value", "total"]

    def test_sweep_requires_values(self, capsys):
        code, _, err = run_cli(capsys, "sweep")
        assert code == 2
        assert "sweep" in err


class TestPhases:
    def test_canonical_run(self, capsys):
        code, out, _ = run_cli(capsys, "phases", "--threshold", "0.1")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["burst_end", "quiescent_rate", "threshold"]
        burst_end, rate, threshold = rows[0]
        assert 0 < burst_end < 50
        assert rate < 0.1
        assert threshold == 0.1

    def test_pure_exponential_exit_code(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("gamma = 0, 1, 0\n")
        code, _, err = run_cli(capsys, "phases", "--config", str(cfg))
        assert code == 3
        assert "quiescent" in err

    def test_degenerate_drive_rate_is_tiny(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("omega_bar = 0\nt_max = 500\nsamples = 1000\n")
        code, out, _ = run_cli(capsys, "phases", "--config", str(cfg))
        assert code == 0
        _, rows = parse_csv(out)
        assert rows[0, 1] < 1e-6

    def test_json_single_record(self, capsys):
        code, out, _ = run_cli(capsys, "phases", "--format", "json")
        records = json.loads(out)
        assert len(records) == 1
        assert set(records[0]) == {"burst_end", "quiescent_rate", "threshold"}


class TestErrors:
    def test_bad_config_value(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("omega_bar = -1\n")
        code, _, err = run_cli(capsys, "simulate", "--config", str(cfg))
        assert code == 2
        assert "omega_bar" in err

    def test_bad_config_syntax(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("nonsense\n")
        code, _, err = run_cli(capsys, "simulate", "--config", str(cfg))
        assert code == 2

    def test_missing_config_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "simulate", "--config", str(tmp_path / "absent.cfg"))
        assert code == 1
        assert "i/o" in err

    def test_unwritable_output(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "simulate", "--t-max", "1", "--samples", "2",
            "--output", str(tmp_path / "no" / "such" / "dir" / "x.csv"),
        )
        assert code == 1

    def test_bad_sweep_values_flag(self, capsys):
        code, _, err = run_cli(
            capsys, "sweep", "--sweep-param", "omega_bar", "--sweep-values", "0.1,abc"
        )
        assert code == 2
        assert "sweep_values" in err


class TestDeterminism:
    def test_repeated_runs_byte_identical(self, capsys, tmp_path):
        paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
        for path in paths:
            code, _, _ = run_cli(capsys, "simulate", "--output", str(path))
            assert code == 0
        assert paths[0].read_bytes() == paths[1].read_bytes()
        text = paths[0].read_text()
        assert "\r" not in text
