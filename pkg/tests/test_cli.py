import json
import math

import pandas as pd
import pytest

from main import main
from runners.dispatcher import EXIT_COMPUTATION, EXIT_CONFIG, EXIT_OK, dispatcher
from tools.report_io import DIAGNOSTIC_COLUMNS, load_artifact, without_metadata


@pytest.fixture
def grid_csv(tmp_path):
    path = tmp_path / "grid.csv"
    path.write_text("x\n" + "\n".join(f"{k}/64" for k in range(65)) + "\n")
    return path


def _last_output(capsys) -> dict:
    return json.loads(capsys.readouterr().out.strip().splitlines()[-1])


class TestGaugeValidate:
    def test_theta_passes(self, tmp_path, capsys):
        out = tmp_path / "gauge.json"
        assert main(["gauge-validate", "--out", str(out)]) == EXIT_OK
        artifact = load_artifact(out)
        assert artifact["command"] == "gauge-validate"
        assert artifact["data"]["passed"]
        assert _last_output(capsys)["status"] == "success"

    def test_harmonic_precision_is_reported_not_raised(self, tmp_path):
        out = tmp_path / "gauge.json"
        assert main(["gauge-validate", "--out", str(out), "--precision", "harmonic"]) == EXIT_OK
        assert not load_artifact(out)["data"]["passed"]

    def test_reruns_are_identical(self, tmp_path):
        out = tmp_path / "gauge.json"
        args = ["gauge-validate", "--out", str(out), "--gauge", "jump(theta)", "--s-grid", "0.5,1"]
        assert main(args) == EXIT_OK
        first = without_metadata(load_artifact(out))
        assert main(args) == EXIT_OK
        assert without_metadata(load_artifact(out)) == first

    def test_malformed_gauge(self, tmp_path, capsys):
        out = tmp_path / "gauge.json"
        assert main(["gauge-validate", "--out", str(out), "--gauge", "jump(theta"]) == EXIT_CONFIG
        assert not out.exists()
        assert _last_output(capsys)["status"] == "error"


class TestDimEstimate:
    def test_points_file(self, tmp_path, grid_csv):
        out, table = tmp_path / "dim.json", tmp_path / "dim.csv"
        code = main(["dim-estimate", "--out", str(out), "--points", str(grid_csv),
                     "--schedule", "geo:2,6", "--table", str(table)])
        assert code == EXIT_OK
        estimates = load_artifact(out)["data"]["estimates"]
        assert set(estimates) == {"bisection", "loglog", "ratio"}
        assert estimates["bisection"]["value"] == pytest.approx(1.0, abs=0.1)
        frame = pd.read_csv(table)
        assert list(frame.columns) == DIAGNOSTIC_COLUMNS
        assert len(frame) > 0

    def test_header_only_table(self, tmp_path, grid_csv):
        out, table = tmp_path / "dim.json", tmp_path / "dim.csv"
        code = main(["dim-estimate", "--out", str(out), "--points", str(grid_csv),
                     "--method", "loglog", "--table", str(table)])
        assert code == EXIT_OK
        assert table.read_text().strip() == ",".join(DIAGNOSTIC_COLUMNS)

    def test_dense_counts(self, tmp_path, grid_csv):
        out = tmp_path / "dim.json"
        code = main(["dim-estimate", "--out", str(out), "--points", str(grid_csv), "--schedule", "geo:2,5",
                     "--method", "loglog", "--dense"])
        assert code == EXIT_OK
        artifact = load_artifact(out)
        assert artifact["config"]["include_dense"] is True
        entries = artifact["data"]["profile"]["entries"]
        assert all(e["n_cover"] <= e["n_cover_dense"] for e in entries)

    def test_missing_points(self, tmp_path):
        out = tmp_path / "dim.json"
        assert main(["dim-estimate", "--out", str(out)]) == EXIT_CONFIG
        assert not out.exists()

    def test_bad_schedule(self, tmp_path, grid_csv):
        out = tmp_path / "dim.json"
        code = main(["dim-estimate", "--out", str(out), "--points", str(grid_csv), "--schedule", "geo:1,4"])
        assert code == EXIT_CONFIG


class TestConstruct:
    def test_cantor7(self, tmp_path):
        out, table = tmp_path / "c.json", tmp_path / "c.csv"
        code = main(["construct", "--out", str(out), "--seed", "2", "--depth", "4", "--table", str(table)])
        assert code == EXIT_OK
        data = load_artifact(out)["data"]
        assert data["bits_consumed"] == 30
        assert data["level_counts"] == [1, 2, 4, 8, 16]
        assert data["violations"] == []
        assert [row["level"] for row in data["prefix_trace"]] == [1, 2, 3, 4]
        assert len(pd.read_csv(table)) == 16

    def test_one_over_n(self, tmp_path):
        out = tmp_path / "c.json"
        assert main(["construct", "--out", str(out), "--kind", "one-over-n", "--n-max", "4"]) == EXIT_OK
        assert load_artifact(out)["data"]["points"] == ["1", "1/2", "1/3", "1/4"]

    def test_config_file_with_overrides(self, tmp_path):
        out, config = tmp_path / "c.json", tmp_path / "run.json"
        config.write_text(json.dumps({"command": "construct", "out": str(out), "construction": "e0", "depth": 3}))
        assert main(["construct", "--config", str(config), "--depth", "2"]) == EXIT_OK
        artifact = load_artifact(out)
        assert artifact["config"]["depth"] == 2
        assert artifact["data"]["level_counts"] == [1, 2, 4]

    def test_unknown_config_key(self, tmp_path):
        out, config = tmp_path / "c.json", tmp_path / "run.json"
        config.write_text(json.dumps({"command": "construct", "out": str(out), "colour": "red"}))
        assert main(["construct", "--config", str(config)]) == EXIT_CONFIG

    def test_unreadable_config(self, tmp_path):
        config = tmp_path / "run.json"
        config.write_text("{not json")
        assert main(["construct", "--config", str(config)]) == EXIT_CONFIG

    def test_short_bits_file(self, tmp_path):
        out, bits = tmp_path / "c.json", tmp_path / "bits.txt"
        bits.write_text("0101")
        code = main(["construct", "--out", str(out), "--bits-file", str(bits), "--depth", "3"])
        assert code == EXIT_COMPUTATION
        assert not out.exists()

    def test_exhausted_resources_are_capacity_errors(self, tmp_path, capsys, monkeypatch):
        def exhaust(config):
            raise MemoryError("interval table too large")

        monkeypatch.setitem(dispatcher.runners, "construct", exhaust)
        out = tmp_path / "c.json"
        assert main(["construct", "--out", str(out)]) == EXIT_COMPUTATION
        result = _last_output(capsys)
        assert result["error_type"] == "CapacityError"
        assert result["module"] == "cli"
        assert not out.exists()


class TestAlgodim:
    def test_synthetic_profile(self, tmp_path):
        out = tmp_path / "a.json"
        code = main(["algodim", "--out", str(out), "--profile", "linear:1", "--kind", "lower", "--characterize", "5"])
        assert code == EXIT_OK
        data = load_artifact(out)["data"]
        assert data["estimate"]["value"] == pytest.approx(1.0, abs=0.01)
        assert data["characterization"]["profiles"] == 5
        assert data["characterization"]["max_discrepancy"] <= 2e-3

    def test_rational_point(self, tmp_path):
        out = tmp_path / "a.json"
        code = main(["algodim", "--out", str(out), "--point", "rational:1/3", "--schedule", "dyadic:16"])
        assert code == EXIT_OK
        assert load_artifact(out)["data"]["profile"]["provenance"] == "proxy"

    def test_unbracketed_profile(self, tmp_path, capsys):
        out = tmp_path / "a.json"
        assert main(["algodim", "--out", str(out), "--profile", "power:1,1"]) == EXIT_COMPUTATION
        result = _last_output(capsys)
        assert result["error_type"] == "NoBracketError"
        assert result["module"] == "algodim"
        assert not out.exists()


class TestHyperVerify:
    def test_self_similar_set(self, tmp_path):
        out, table = tmp_path / "h.json", tmp_path / "h.csv"
        code = main(["hyper-verify", "--out", str(out), "--net-kind", "e0", "--depth", "4", "--table", str(table)])
        assert code == EXIT_OK
        data = load_artifact(out)["data"]
        assert data["passed"]
        assert data["set_estimate"]["value"] == pytest.approx(math.log(2) / math.log(7), abs=0.01)
        assert len(pd.read_csv(table)) == 4

    def test_points_need_a_schedule(self, tmp_path, grid_csv):
        out = tmp_path / "h.json"
        assert main(["hyper-verify", "--out", str(out), "--net-kind", "points", "--points", str(grid_csv)]) \
            == EXIT_CONFIG


def test_oracle_suite(tmp_path):
    out = tmp_path / "o.json"
    code = main(["oracle-suite", "--out", str(out), "--instances", "10", "--max-points", "4",
                 "--hyper-instances", "5", "--hyper-max-points", "3", "--identity-samples", "1000"])
    assert code == EXIT_OK
    data = load_artifact(out)["data"]
    assert all(result["passed"] for result in data.values())
