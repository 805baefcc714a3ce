import csv
import json

import pytest

from src.cli import VERIFICATIONS, build_parser, run
from src.config import TOOL_VERSION, load_config_file
from src.errors import (
    AccuracyError,
    ConfigError,
    DataQualityError,
    DomainError,
    ResourceError,
    UnsupportedKindError,
    VerificationError,
    exit_code_for,
)


def test_no_command_is_a_usage_error():
    assert run([]) == 1


def test_unknown_verification_is_a_usage_error():
    assert run(["verify", "nope"]) == 1


def test_bad_flag_value_is_a_usage_error():
    assert run(["expand", "--X", "-5"]) == 1
    assert run(["expand", "--phi", "fejer"]) == 1


def test_parser_lists_every_verification():
    parser = build_parser()
    args = parser.parse_args(["verify", "glog"])
    assert args.verify_name == "glog"
    assert {"plancherel", "lemma41", "lemma45", "jx", "ratios-diag", "char-average", "glog"} <= set(VERIFICATIONS)


def test_verify_glog_writes_json(tmp_path):
    out = tmp_path / "glog.json"
    assert run(["verify", "glog", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["name"] == "glog"
    assert report["passed"] is True
    assert report["residuals"][0]["passed"] is True
    assert report["diagnostics"]["tool_version"] == TOOL_VERSION


def test_verify_ratios_diag_writes_csv(tmp_path):
    out = tmp_path / "diag.csv"
    assert run(["verify", "ratios-diag", "--format", "csv", "--out", str(out)]) == 0
    with out.open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 6
    assert set(rows[0]) == {"name", "label", "left", "right", "residual", "tolerance", "passed"}
    assert all(row["passed"] == "True" for row in rows)


def test_contour_verification_rejects_bump2(tmp_path):
    assert run(["verify", "lemma41", "--phi", "bump2:0.8", "--X", "1e4", "--out", str(tmp_path / "r.json")]) == 2


def test_expand_report(tmp_path):
    out = tmp_path / "expand.json"
    assert run(["expand", "--X", "1e4", "--j", "asym", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["method"] == "expansion"
    assert len(report["terms"]) == 5
    assert report["value"] == pytest.approx(sum(report["terms"].values()), abs=1e-12)
    assert report["params"]["config"]["X"] == 1e4
    assert report["params"]["config"]["j_mode"] == "asymptotic"
    assert report["diagnostics"]["tool_version"] == TOOL_VERSION
    assert report["diagnostics"]["run_wall_time"] >= 0.0


def test_flags_override_config_file(tmp_path):
    config = tmp_path / "run.conf"
    config.write_text("# small run\nX = 1e4\nj = asym\nphi = fejer:0.8\n")
    out = tmp_path / "expand.json"
    assert run(["expand", "--config", str(config), "--phi", "fejer:1.5", "--out", str(out)]) == 0
    params = json.loads(out.read_text())["params"]
    assert params["config"]["phi_spec"] == "fejer:1.5"
    assert params["config"]["X"] == 1e4
    assert params["sigma"] == 1.5


def test_sweep_defaults_to_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    assert run(["sweep", "--X", "1e4", "--sigma", "0.8,1.5", "--j", "asym", "--out", str(out)]) == 0
    with out.open(newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert [float(row["sigma"]) for row in rows] == [0.8, 1.5]
    assert rows[0]["empirical"] == ""
    assert float(rows[0]["j_asymptotic"]) == 0.0


def test_load_config_file_errors(tmp_path):
    with pytest.raises(ConfigError):
        load_config_file(tmp_path / "missing.conf")
    bad = tmp_path / "bad.conf"
    bad.write_text("X 1e4\n")
    with pytest.raises(ConfigError):
        load_config_file(bad)
    bad.write_text("colour = blue\n")
    with pytest.raises(ConfigError):
        load_config_file(bad)
    bad.write_text("X =\n")
    with pytest.raises(ConfigError):
        load_config_file(bad)
    assert run(["expand", "--config", str(bad)]) == 1


def test_exit_codes():
    assert exit_code_for(ConfigError("x")) == 1
    assert exit_code_for(DomainError("x")) == 2
    assert exit_code_for(UnsupportedKindError("x")) == 2
    assert exit_code_for(AccuracyError("x")) == 2
    assert exit_code_for(ResourceError("x")) == 2
    assert exit_code_for(VerificationError("x")) == 3
    assert exit_code_for(DataQualityError("x")) == 3
    assert exit_code_for(RuntimeError("x")) == 1
