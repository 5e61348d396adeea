import csv
import json

import numpy as np
import pytest

from olct import (Grid, SampledSignal, SignalSpec, generate, l2_norm,
                  read_report, read_signal, run_suite, transform_fast,
                  validate_params, write_signal)
from olct.cli import main
from olct.io import (REPORT_FORMAT, SIGNAL_FORMAT, export_report_csv,
                     export_signal_csv, report_to_dict, signal_from_dict,
                     signal_to_dict, write_report)


@pytest.fixture
def small_signal():
    grid = Grid.over_window(64, 6.0)
    return generate(SignalSpec("gaussian", grid))


class TestSignalFiles:
    def test_roundtrip_bit_exact(self, tmp_path, small_signal):
        path = tmp_path / "sig.json"
        write_signal(path, small_signal)
        back = read_signal(path)
        assert back.grid == small_signal.grid
        assert np.array_equal(back.values, small_signal.values)

    def test_roundtrip_preserves_awkward_floats(self, tmp_path):
        grid = Grid.over_window(4, 1.0 / 3.0)
        sig = SampledSignal(grid, np.array([1e-300 + 1e300j, 0.1 + 0.2j,
                                            -7.0, np.pi]))
        path = tmp_path / "sig.json"
        write_signal(path, sig)
        assert np.array_equal(read_signal(path).values, sig.values)

    def test_format_tag_checked(self):
        with pytest.raises(ValueError):
            signal_from_dict({"format": "something-else"})

    def test_meta_carried(self, small_signal):
        doc = signal_to_dict(small_signal, meta={"kind": "gaussian"})
        assert doc["format"] == SIGNAL_FORMAT
        assert doc["meta"] == {"kind": "gaussian"}


class TestReportFiles:
    def test_roundtrip(self, tmp_path, gaussian, fourier):
        certs = run_suite(gaussian, fourier)
        doc = report_to_dict(certs, {"b": 1.0}, {"kind": "gaussian"},
                             timestamp=False)
        path = tmp_path / "report.json"
        write_report(path, doc)
        back = read_report(path)
        assert back["format"] == REPORT_FORMAT
        assert back["overall_pass"] is True
        assert [c["name"] for c in back["certificates"]] == [c.name for c in certs]
        assert "timestamp" not in back

    def test_bad_format_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"format": "olct-signal/1"}')
        with pytest.raises(ValueError):
            read_report(path)


class TestCsvExport:
    def test_signal_csv(self, tmp_path, small_signal):
        path = tmp_path / "sig.csv"
        export_signal_csv(path, small_signal)
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["coordinate", "re", "im", "modulus"]
        assert len(rows) == 1 + small_signal.grid.count
        x, re, im, mod = (float(v) for v in rows[1])
        assert x == small_signal.grid.coords[0]
        assert complex(re, im) == small_signal.values[0]

    def test_report_csv_pitt_sweep(self, tmp_path, gaussian, fourier):
        certs = run_suite(gaussian, fourier)
        doc = report_to_dict(certs, {}, {}, timestamp=False)
        path = tmp_path / "report.csv"
        export_report_csv(path, doc)
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["lambda", "lhs", "rhs"]
        assert len(rows) == 11  # header + 10 exponents

    def test_report_csv_without_pitt(self, tmp_path, gaussian, fourier):
        from olct.suite import SuiteConfig
        certs = run_suite(gaussian, fourier, SuiteConfig(checks=("entropic",)))
        doc = report_to_dict(certs, {}, {}, timestamp=False)
        path = tmp_path / "report.csv"
        export_report_csv(path, doc)
        with open(path, newline="") as fh:
            rows = list(csv.reader(fh))
        assert rows[0] == ["name", "lhs", "rhs"]
        assert rows[1][0] == "entropic"


class TestCliGenerateTransform:
    def test_generate_writes_unit_norm_signal(self, tmp_path):
        out = tmp_path / "g.json"
        assert main(["generate", "--signal", "gaussian", "--grid", "256,8",
                     "--out", str(out)]) == 0
        sig = read_signal(out)
        assert sig.grid.count == 256
        assert l2_norm(sig) == pytest.approx(1.0, abs=1e-10)

    def test_transform_matches_library(self, tmp_path):
        sig_path = tmp_path / "g.json"
        out_path = tmp_path / "t.json"
        main(["generate", "--signal", "hermite:n=2", "--grid", "256,8",
              "--out", str(sig_path)])
        assert main(["transform", "--params", "1,1,0,1,0.5,-0.5",
                     "--in", str(sig_path), "--out", str(out_path)]) == 0
        sig = read_signal(sig_path)
        expected = transform_fast(sig, validate_params(1, 1, 0, 1, 0.5, -0.5))
        got = read_signal(out_path)
        assert got.grid == expected.grid
        np.testing.assert_allclose(got.values, expected.values, atol=1e-15)

    def test_transform_b0_branch(self, tmp_path):
        out = tmp_path / "t.json"
        assert main(["transform", "--params", "1,0,0.5,1,0,0",
                     "--signal", "gaussian", "--grid", "256,8",
                     "--out", str(out)]) == 0
        assert read_signal(out).grid.count == 256

    def test_export_plotdata_from_signal(self, tmp_path):
        sig_path = tmp_path / "g.json"
        csv_path = tmp_path / "g.csv"
        main(["generate", "--signal", "gaussian", "--grid", "64,6",
              "--out", str(sig_path)])
        assert main(["export-plotdata", "--in", str(sig_path),
                     "--out", str(csv_path)]) == 0
        with open(csv_path, newline="") as fh:
            assert len(list(csv.reader(fh))) == 65


class TestCliVerify:
    def test_battery_passes(self, tmp_path):
        report = tmp_path / "r.json"
        rc = main(["verify", "--params", "0,1,-1,0,0,0", "--grid", "1024,12",
                   "--report", str(report), "--no-timestamp"])
        assert rc == 0
        doc = read_report(report)
        assert doc["overall_pass"] is True
        assert len(doc["runs"]) == 7
        assert all(run["pass"] for run in doc["runs"])

    def test_single_signal_report(self, tmp_path):
        report = tmp_path / "r.json"
        rc = main(["verify", "--params", "0,1,-1,0,0,0", "--signal", "gaussian",
                   "--report", str(report), "--no-timestamp"])
        assert rc == 0
        doc = read_report(report)
        assert len(doc["runs"]) == 1
        assert [c["name"] for c in doc["certificates"]] == [
            "nazarov", "hardy", "beurling", "pitt", "logarithmic",
            "entropic", "heisenberg"]

    def test_report_deterministic_without_timestamp(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        args = ["verify", "--params", "0,1,-1,0,0,0", "--signal", "gaussian",
                "--no-timestamp"]
        main(args + ["--report", str(a)])
        main(args + ["--report", str(b)])
        assert a.read_bytes() == b.read_bytes()

    def test_failing_certificate_returns_one(self):
        rc = main(["verify", "--params", "1,2,0,1,0,0", "--signal", "hermite:n=1",
                   "--suite", "hardy", "--no-timestamp"])
        assert rc == 1

    def test_suite_subset(self, tmp_path):
        report = tmp_path / "r.json"
        rc = main(["verify", "--params", "0,1,-1,0,0,0", "--signal", "gaussian",
                   "--suite", "entropic,heisenberg", "--report", str(report),
                   "--no-timestamp"])
        assert rc == 0
        doc = read_report(report)
        assert [c["name"] for c in doc["certificates"]] == ["entropic", "heisenberg"]

    def test_tol_env_var(self, tmp_path, monkeypatch):
        monkeypatch.setenv("OLCT_TOL", "0.5")
        report = tmp_path / "r.json"
        main(["verify", "--params", "0,1,-1,0,0,0", "--signal", "gaussian",
              "--suite", "entropic", "--report", str(report), "--no-timestamp"])
        doc = read_report(report)
        assert doc["certificates"][0]["meta"]["tol"] == 0.5

    def test_tol_flag_overrides_env(self, tmp_path, monkeypatch):
        monkeypatch.setenv("OLCT_TOL", "0.5")
        report = tmp_path / "r.json"
        main(["verify", "--params", "0,1,-1,0,0,0", "--signal", "gaussian",
              "--suite", "entropic", "--tol", "0.25", "--report", str(report),
              "--no-timestamp"])
        doc = read_report(report)
        assert doc["certificates"][0]["meta"]["tol"] == 0.25


class TestExitCodes:
    def test_usage_error_is_two(self):
        with pytest.raises(SystemExit) as exc:
            main(["transform", "--out", "x.json"])  # missing --params and input
        assert exc.value.code == 2

    def test_missing_input_file_is_three(self, tmp_path):
        rc = main(["verify", "--params", "0,1,-1,0,0,0",
                   "--in", str(tmp_path / "nope.json"), "--no-timestamp"])
        assert rc == 3

    def test_corrupt_json_is_three(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        rc = main(["transform", "--params", "0,1,-1,0,0,0",
                   "--in", str(bad), "--out", str(tmp_path / "o.json")])
        assert rc == 3

    def test_symplectic_violation_is_four(self, tmp_path):
        rc = main(["transform", "--params", "1,1,0,2,0,0",
                   "--signal", "gaussian", "--out", str(tmp_path / "o.json")])
        assert rc == 4

    def test_bad_lambda_is_four(self):
        rc = main(["verify", "--params", "0,1,-1,0,0,0", "--signal", "gaussian",
                   "--suite", "pitt", "--lambda", "0.5,1.0", "--no-timestamp"])
        assert rc == 4

    def test_non_pow2_fast_grid_is_four(self, tmp_path):
        rc = main(["transform", "--params", "0,1,-1,0,0,0",
                   "--signal", "gaussian", "--grid", "100,8",
                   "--method", "fast", "--out", str(tmp_path / "o.json")])
        assert rc == 4
