import pytest
from pydantic import ValidationError

from src.errors import ConfigError
from src.models import (
    DensityReport,
    QuadraticCharacter,
    Residual,
    RunConfig,
    VerificationReport,
    ZeroSet,
)


def test_quadratic_character():
    char = QuadraticCharacter(d=-15)
    assert char.a == 1
    assert char.conductor == 120
    assert QuadraticCharacter(d=5).a == 0
    assert char.value(7) == char.values(7)[-1]
    for d in (0, 4, 9, -45):
        with pytest.raises(ValidationError):
            QuadraticCharacter(d=d)


def test_zero_set_validation():
    char = QuadraticCharacter(d=1)
    with pytest.raises(ValidationError):
        ZeroSet(character=char, height=10.0, ordinates=[3.0, 2.0], count_estimate=2.0, complete_flag=True)
    with pytest.raises(ValidationError):
        ZeroSet(character=char, height=10.0, ordinates=[11.0], count_estimate=1.0, complete_flag=True)
    far = ZeroSet(character=char, height=10.0, ordinates=[1.0], count_estimate=6.0, complete_flag=True)
    assert far.complete_flag is False


def test_density_report_bookkeeping():
    report = DensityReport.from_terms("prediction", {"a": 0.25, "b": 0.5}, error_budget=1e-9)
    assert report.value == 0.75
    with pytest.raises(ValidationError):
        DensityReport(value=1.0, method="prediction", terms={"a": 0.25})
    with pytest.raises(ValidationError):
        DensityReport.from_terms("prediction", {"a": 0.25}, error_budget=-1.0)


def test_verification_report():
    report = VerificationReport(name="demo", residuals=[
        Residual(label="one", left=1.0, right=1.0, residual=0.0, tolerance=1e-8),
        Residual(label="two", left=1.0, right=1.1, residual=0.1, tolerance=0.05),
    ])
    assert not report.passed
    assert report.worst == pytest.approx(2.0)
    data = report.to_dict()
    assert data["passed"] is False
    assert [r["passed"] for r in data["residuals"]] == [True, False]


def test_run_config_defaults_and_parsing():
    cfg = RunConfig(command="sweep", sigmas="0.5, 1.5", j_mode="asym", d_values="1,-3")
    assert cfg.sigmas == [0.5, 1.5]
    assert cfg.j_mode == "asymptotic"
    assert cfg.d_values == [1, -3]
    assert cfg.output_format == "csv"
    assert RunConfig(command="expand").output_format == "json"
    assert RunConfig(command="sweep", format="json").output_format == "json"


def test_run_config_resolve_precedence(tmp_path):
    path = tmp_path / "run.conf"
    path.write_text("X = 1e5\nT = 20\nseed = 3\n")
    cfg = RunConfig.resolve({"command": "empirical", "T": 30.0, "seed": None}, path)
    assert cfg.X == 1e5
    assert cfg.T == 30.0
    assert cfg.seed == 3


def test_run_config_rejects_invalid_values():
    with pytest.raises(ConfigError):
        RunConfig.resolve({"command": "expand", "threads": 0})
    with pytest.raises(ConfigError):
        RunConfig.resolve({"command": "expand", "sigmas": "0.5,-1"})
