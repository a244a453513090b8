import json
import subprocess
import sys

import pytest

from qcasimir.cli import main
from qcasimir.expressions import central_element, term_count, parse


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_central_json_has_fifty_summands(capsys):
    code, out, _ = run(["central", "--N", "3", "--m", "2", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert len(data["summands"]) == 50
    assert term_count(parse(out)) == 50
    assert parse(out) == central_element(2, 3)


def test_central_latex_c1(capsys):
    code, out, _ = run(["central", "--N", "1", "--m", "1", "--format", "latex"], capsys)
    assert code == 0
    assert out.strip() == "C_{1} = q^{-1} \\hat{E}_{00}\\hat{E}_{00} + q \\hat{E}_{01}\\hat{E}_{10} + q \\hat{E}_{11}\\hat{E}_{11}"


@pytest.mark.parametrize(
    "argv",
    [
        ["central", "--N", "0", "--m", "1"],
        ["central", "--m", "2"],
        ["central", "--N", "2", "--m", "0"],
        ["central", "--N", "2", "--format", "yaml"],
        ["verify", "nonsense", "--N", "2"],
        ["verify", "scalar", "--N", "2", "--rep", "weird:2"],
        ["eigenvalue", "--N", "3", "--m", "2", "--weight", "2,x"],
        ["eigenvalue", "--N", "3", "--m", "2", "--weight", "2,0"],
        ["eigenvalue", "--N", "3", "--m", "2"],
        ["eigenvalue", "--N", "3", "--weight", "1,0,0,0", "--weight-convention", "middle"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2
    assert err


def test_verify_oracle(capsys):
    code, out, _ = run(["verify", "oracle", "--N", "2", "--m", "2", "--rep", "tensor:2"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["check"] == "oracle" and report["pass"] is True


def test_verify_scalar_prints_the_constant(capsys):
    code, out, _ = run(["verify", "scalar", "--N", "3", "--m", "2", "--rep", "sym"], capsys)
    assert code == 0
    value = json.loads(out)["value"]
    assert value == "(q^{14} + q^{8} + q^{6} + q^{4} + q^{2} + 1 + 2q^{-2} + q^{-4} + q^{-6})/(q-q^{-1})^{4}"
    _, eig, _ = run(["eigenvalue", "--N", "3", "--m", "2", "--weight", "2,0,0,0"], capsys)
    assert eig.strip() == value


def test_eigenvalue_conventions_and_formats(capsys):
    _, low, _ = run(["eigenvalue", "--N", "3", "--m", "2", "--weight", "2,0,0,0", "--weight-convention", "lowest"], capsys)
    _, high, _ = run(["eigenvalue", "--N", "3", "--m", "2", "--weight", "0,0,0,2", "--weight-convention", "lowest"], capsys)
    _, js, _ = run(["eigenvalue", "--N", "1", "--m", "1", "--weight", "0,0", "--format", "json"], capsys)
    assert low != high
    assert json.loads(js) == {"denom_pow": 2, "num": [[-2, "1"], [2, "1"]]}


@pytest.mark.parametrize("check", ["centrality", "relations", "intertwining", "basis"])
def test_verify_checks_pass(check, capsys):
    code, out, _ = run(["verify", check, "--N", "2", "--m", "2", "--k", "2"], capsys)
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert lines and all(r["pass"] for r in lines)


def test_verify_failure_exit_1(capsys):
    code, out, err = run(["verify", "basis", "--N", "2", "--m", "2", "--literal", "--verbose"], capsys)
    assert code == 1
    assert "failed" in err
    assert any(not json.loads(x)["pass"] for x in out.splitlines())


def test_config_file_and_out(tmp_path, capsys):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"N": 3, "m": 2, "rep": "sym"}))
    target = tmp_path / "out.jsonl"
    code, out, _ = run(["verify", "scalar", "--config", str(cfg), "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["pass"] is True
    # flags override the file
    code, out, _ = run(["verify", "scalar", "--config", str(cfg), "--m", "1"], capsys)
    assert json.loads(out)["params"]["m"] == 1
    cfg.write_text(json.dumps({"N": 3, "colour": "red"}))
    assert run(["central", "--config", str(cfg)], capsys)[0] == 2


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "qcasimir", "central", "--N", "2", "--m", "2", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second
