import json
import subprocess
import sys

import pytest

from bernident.cli import RunConfig, UsageError, parse_caps, parse_int_spec, run_cli
from bernident.report import FIELDS


def lines(capsys):
    return [l for l in capsys.readouterr().out.splitlines() if l.strip()]


def test_parse_int_spec():
    assert parse_int_spec("5") == [5]
    assert parse_int_spec("2..4") == [2, 3, 4]
    assert parse_int_spec("1,3,2") == [1, 3, 2]
    with pytest.raises(UsageError):
        parse_int_spec("4..2")
    assert parse_caps("2:5") == (2, 5)


def test_miki_json(capsys):
    assert run_cli(["verify", "miki", "--n", "4..40", "--format", "json"]) == 0
    out = [json.loads(l) for l in lines(capsys)]
    assert len(out) == 37
    assert all(r["pass"] and r["identity_id"] == "miki" for r in out)
    assert [list(r) for r in out] == [list(FIELDS)] * 37
    assert out[0]["parameters"]["n"] == "4"


def test_theorem1_trials(capsys):
    assert run_cli(["verify", "theorem1", "--m", "3", "--n", "5", "--trials", "100", "--seed", "42"]) == 0
    out = lines(capsys)
    assert out[-1] == "100/100 passed"


def test_pan_sun_degenerate(capsys):
    code = run_cli(["verify", "pan-sun-3", "--n", "6", "--mode", "exact", "--x", "1/2", "--y", "1/2"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_deterministic(capsys):
    argv = ["verify", "theorem2", "--trials", "5", "--seed", "7", "--format", "json"]
    run_cli(argv)
    first = [json.loads(l) for l in lines(capsys)]
    run_cli(argv)
    second = [json.loads(l) for l in lines(capsys)]
    for a, b in zip(first, second, strict=True):
        a.pop("elapsed"), b.pop("elapsed")
        assert a == b
        assert a["parameters"]["seed"] == "7"


def test_symbolic_report(capsys):
    assert run_cli(["verify", "theorem1", "--m", "2", "--n", "3", "--mode", "symbolic", "--format", "json"]) == 0
    (rep,) = [json.loads(l) for l in lines(capsys)]
    assert rep["mode"] == "symbolic" and rep["difference"] == "0"


def test_literal_form_fails(capsys):
    assert run_cli(["verify", "woodcock", "--m", "2", "--n", "2", "--literal", "--format", "json"]) == 1
    (rep,) = [json.loads(l) for l in lines(capsys)]
    assert rep["pass"] is False and rep["difference"] != "0"


def test_tsv(capsys):
    assert run_cli(["verify", "matiyasevich", "--n", "4..6", "--format", "tsv"]) == 0
    out = lines(capsys)
    assert out[0].split("\t") == list(FIELDS)
    assert len(out) == 4 and all(len(l.split("\t")) == len(FIELDS) for l in out)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "miki", "--mode", "bigfloat"],
        ["verify", "gamma-miki", "--mode", "symbolic"],
        ["verify", "gamma-miki", "--precision-bits", "64"],
        ["verify", "gamma-miki", "--p", "-2", "--n", "3"],
        ["verify", "nope"],
        ["verify", "all", "--n", "5"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run_cli(argv) == 2


def test_config_validation():
    with pytest.raises(UsageError):
        RunConfig(identity="lemma1", mode="bigfloat")
    assert RunConfig(identity="gamma-miki", mode="bigfloat").precision_bits == 256


def test_gamma_miki_json(capsys):
    assert run_cli(["verify", "gamma-miki", "--p", "1/2", "--n", "3", "--format", "json"]) == 0
    (rep,) = [json.loads(l) for l in lines(capsys)]
    assert rep["mode"] == "bigfloat"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bernident", "verify", "miki", "--n", "4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("1/1 passed")
