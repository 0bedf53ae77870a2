import json

import pytest
from typer.testing import CliRunner

import hv_algebra.commands.config_cmd as config_cmd
import hv_algebra.config as config
from hv_algebra.main import app

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    path = tmp_path / "config.toml"
    monkeypatch.setattr(config, "CONFIG_PATH", path)
    monkeypatch.setattr(config_cmd, "CONFIG_PATH", path)
    for name in ("HV_SEED", "HV_PRETTY", "HV_CONFIG"):
        monkeypatch.delenv(name, raising=False)
    return path


def _invoke(*args: str):
    return runner.invoke(app, list(args))


def _json(result) -> dict:
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_bracket_in_hv():
    data = _json(_invoke("bracket", "L(2)", "L(-2)"))
    assert data["algebra"] == "HV"
    assert data["text"] == "-4*L(0) + 1/2*C_L"


def test_bracket_in_witt():
    data = _json(_invoke("bracket", "L(1)", "L(2)", "--algebra", "w"))
    assert data["text"] == "L(3)"


def test_pretty_renders_terms_table():
    result = _invoke("--pretty", "bracket", "L(2)", "L(-2)")
    assert result.exit_code == 0, result.output
    assert "Coefficient" in result.output
    assert "C_L" in result.output


def test_product_of_diffops():
    data = _json(_invoke("product", "D(1;1)", "D(2;1)"))
    assert data["text"] == "D(3;2) + 2*D(3;1)"


def test_syntax_error_exits_2():
    result = _invoke("bracket", "L(2) +", "L(1)")
    assert result.exit_code == 2
    assert "syntax_error" in result.output


def test_apply_identity_theta():
    data = _json(_invoke("apply", "--theta", '{"chi": ["1"]}', "L(5)"))
    assert data["text"] == "L(5)"


def test_apply_needs_exactly_one_map():
    result = _invoke("apply", "L(5)")
    assert result.exit_code == 2
    assert "validation_error" in result.output


def test_cocycle_eval():
    assert _json(_invoke("cocycle", "eval", "L(2)", "L(-2)", "--form", "psi2")) == {"value": "6"}


def test_cocycle_extract_from_payload():
    payload = '{"a": 2, "b": "3", "c": -1, "boundary": [["L(1)", 5]]}'
    data = _json(_invoke("cocycle", "extract", "--cocycle", payload))
    assert data == {"a": "2", "b": "3", "c": "-1"}


def test_cocycle_verify_catches_wrong_degree(tmp_path):
    run_config = tmp_path / "run.json"
    run_config.write_text(json.dumps({"cocycles": {"psi2_degree": 4}}))
    result = _invoke("--config", str(run_config), "cocycle", "verify", "--form", "psi2")
    assert result.exit_code == 1
    report = json.loads(result.stdout)
    assert not report["passed"]
    assert report["witnesses"]


def test_cubic_oracle():
    data = _json(_invoke("cocycle", "oracle", "cubic", "--window", "6"))
    assert data["dimension"] == 2
    assert data["description"] == ["k", "k^2"]


def test_der_decompose():
    payload = '[{"xi": {"mu": [2]}}, {"sigma": 1, "coeff": 3}]'
    data = _json(_invoke("der", "decompose", payload))
    assert data == {"mu": ["2"], "a": "3", "b": "0", "c0": "0"}


def test_der_check_passes():
    data = _json(_invoke("der", "check", '{"ad": "L(1) - I(2)"}', "--samples", "20"))
    assert data["passed"]
    assert data["witness"] is None


def test_aut_invert():
    data = _json(_invoke("aut", "invert", '{"a": 2, "b": 4, "c": 2}'))
    assert data["inner"] == {"factors": []}
    theta = data["theta"]
    assert (theta["a"], theta["b"], theta["c"]) == ("-1", "-2", "1/2")


def test_aut_lift_reports_center():
    data = _json(_invoke("aut", "lift", '{"c": 2}', "--probe", "C_I"))
    assert data["images"] == {"C_I": "4*C_I"}


def test_verify_oracles_writes_report(tmp_path):
    run_config = tmp_path / "run.json"
    run_config.write_text(json.dumps({"seed": 5, "window": 5}))
    out = tmp_path / "report.json"
    result = _invoke(
        "verify", "--config", str(run_config), "-s", "oracles", "--json", str(out)
    )
    data = _json(result)
    assert data["passed"]
    assert data["seed"] == 5
    assert [s["name"] for s in data["suites"]] == ["oracles"]
    assert json.loads(out.read_text())["suites"][0]["status"] == "pass"


def test_verify_seed_flag_wins(tmp_path):
    run_config = tmp_path / "run.json"
    run_config.write_text(json.dumps({"seed": 5, "window": 4}))
    data = _json(_invoke("verify", "--config", str(run_config), "-s", "oracles", "--seed", "9"))
    assert data["seed"] == 9


def test_verify_unknown_suite():
    result = _invoke("verify", "-s", "nope")
    assert result.exit_code == 2


def test_config_set_and_show(isolated_config):
    data = _json(_invoke("config", "set", "defaults.seed", "42"))
    assert data["ok"]
    assert "seed = 42" in isolated_config.read_text()
    shown = _json(_invoke("config", "show"))
    assert shown["defaults"]["seed"] == 42


def test_config_set_unknown_key():
    result = _invoke("config", "set", "defaults.colour", "red")
    assert result.exit_code == 2
    assert "validation_error" in result.output


def test_config_path(isolated_config):
    data = _json(_invoke("config", "path"))
    assert data == {"path": str(isolated_config), "exists": False}


def test_version():
    result = _invoke("--version")
    assert result.exit_code == 0
    assert result.output.startswith("hv-algebra ")


def test_run_config_with_pairing_parts(tmp_path):
    run_config = tmp_path / "run.json"
    run_config.write_text(
        json.dumps(
            {
                "group": "Z2",
                "pairing": [["1", "0"], ["0", "1"]],
                "field": {"mode": "quadratic", "d": 2},
            }
        )
    )
    data = _json(
        _invoke("--config", str(run_config), "bracket", "L(1,0)", "L(0,1)", "--algebra", "w")
    )
    assert data["text"] == "(-1+1*sqrt(2))*L(1,1)"


def test_load_config_reads_seed_from_env(monkeypatch):
    monkeypatch.setenv("HV_SEED", "17")
    assert config.load_config().seed == 17
