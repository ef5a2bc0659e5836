import json
import subprocess
import sys

import pytest

from agflag.cli import main, parse_beta
from agflag.errors import ConfigError
from agflag.golden import EXAMPLE_CASES, full_set


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_beta():
    assert parse_beta("1,-2, 3") == (1, -2, 3)
    assert parse_beta("") == ()
    with pytest.raises(ConfigError):
        parse_beta("1,x")


def test_curve_info(capsys):
    code, out, _ = run(capsys, "curve-info", "--curve", "hermitian16")
    info = json.loads(out)
    assert code == 0
    assert (info["g"], info["rational_places"], info["n"]["4"]) == (6, 65, 60)
    code, out, _ = run(capsys, "curve-info", "--curve", "c7.json")
    info = json.loads(out)
    assert info["g"] == 1 and info["split_lines"] == [3, 5] and info["rational_places"] == 9


def test_malformed_modulus_exit_2(capsys, tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"field": {"p": 2, "k": 4, "modulus": [1, 0, 0, 0, 1]}, "m": 5, "roots": [0, 1]}))
    code, _, err = run(capsys, "curve-info", "--curve", str(cfg))
    assert code == 2 and "reducible" in err


def test_missing_config_exit_2(capsys):
    assert run(capsys, "curve-info", "--curve", "/nonexistent/curve.json")[0] == 2


def test_hstar_all_methods(capsys):
    code, out, _ = run(capsys, "hstar", "--curve", "hermitian16", "--t", "4", "--beta", "1,1,1,1", "--method", "all")
    d = json.loads(out)
    assert code == 0 and d["agree"]
    assert d["set"] == full_set(EXAMPLE_CASES[0]) and d["a0"] == -5 and d["n"] == 60
    assert set(d["methods"]) == {"closed", "generic", "code-oracle"}


def test_hstar_negative_beta(capsys):
    code, out, _ = run(capsys, "hstar", "--curve", "hermitian16", "--t", "4", "--beta", "2,2,-1,-1")
    d = json.loads(out)
    assert code == 0 and d["a0"] == 1 and d["set"] == full_set(EXAMPLE_CASES[1])
    code, out, _ = run(capsys, "hstar", "--curve", "hermitian16", "--beta", "-3,-3,7")
    assert code == 0 and json.loads(out)["set"] == full_set(EXAMPLE_CASES[3])


def test_hstar_c7_csv(capsys, tmp_path):
    target = tmp_path / "out.csv"
    code, out, _ = run(capsys, "hstar", "--curve", "c7", "--t", "2", "--beta", "0,0", "--format", "csv",
                       "--out", str(target))
    assert code == 0 and out == ""
    lines = target.read_text().splitlines()
    assert lines[0] == "method,member"
    assert [int(ln.split(",")[1]) for ln in lines[1:]] == [0, 2, 3, 4, 5, 7]


def test_hstar_precondition_exit_3(capsys):
    assert run(capsys, "hstar", "--curve", "c7", "--p-place", "q1", "--t", "1", "--beta", "")[0] == 3
    assert run(capsys, "hstar", "--curve", "c7", "--t", "2", "--beta", "1,1,1")[0] == 3
    assert run(capsys, "hstar", "--curve", "c7", "--t", "2", "--beta=-2,1")[0] == 3


def test_hstar_disagreement_exit_4(capsys, monkeypatch):
    import agflag.semigroups as sg
    real = sg.hstar_generic
    monkeypatch.setattr(sg, "hstar_generic", lambda c, t, m, b, a: real(c, t, m, b, a) if a else False)
    monkeypatch.setattr(sg, "_generic_at", lambda c, t, m, b, a: sg.hstar_generic(c, t, m, b, a))
    assert run(capsys, "hstar", "--curve", "c7", "--t", "2", "--beta", "0,0", "--method", "all")[0] == 4


def test_flag_check(capsys):
    code, out, _ = run(capsys, "flag-check", "--curve", "hermitian16", "--t", "3", "--beta", "2,2,2")
    d = json.loads(out)
    assert code == 0
    assert set(d["verdicts"].values()) == {"IsoDual"}
    assert d["x"] is not None and len(d["x"]) == 61 and d["x_verified"]
    code, out, _ = run(capsys, "flag-check", "--curve", "hermitian16", "--t", "3", "--beta", "1,1,1")
    d = json.loads(out)
    assert code == 0 and set(d["verdicts"].values()) == {"NotIsoDual"} and d["x"] is None


def test_flag_check_ramified_reports_disagreement(capsys):
    code, out, _ = run(capsys, "flag-check", "--curve", "c7", "--p-place", "q1", "--t", "2", "--beta", "0")
    d = json.loads(out)
    assert code == 0
    assert d["verdicts"]["closed_form_route"] == "NotIsoDual"
    assert d["verdicts"]["oracle_route"] == "IsoDual" and d["x_verified"]
    assert d["routes_agree"] is False


def test_flag_check_precondition(capsys):
    assert run(capsys, "flag-check", "--curve", "c7", "--t", "2", "--beta=-1,0")[0] == 3


def test_reproduce_example(capsys):
    code, out, _ = run(capsys, "reproduce-example")
    assert code == 0 and out.strip() == "5/5 match"


def test_reproduce_example_perturbed_golden(capsys, tmp_path):
    cases = json.loads(json.dumps(EXAMPLE_CASES))
    cases[2]["tail"][-1] = 64
    golden = tmp_path / "golden.json"
    golden.write_text(json.dumps(cases))
    code, out, _ = run(capsys, "reproduce-example", "--golden", str(golden))
    assert code == 5
    assert "--- golden" in out and "+++ computed" in out
    assert out.strip().endswith("4/5 match")


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "agflag.cli", "flag-check", "--curve", "c7", "--t", "2", "--beta", "0,0"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_threads_give_identical_output(monkeypatch, capsys):
    argv = ["hstar", "--curve", "c7", "--t", "2", "--beta", "1,1", "--method", "all"]
    seq = run(capsys, *argv)[1]
    monkeypatch.setenv("AGFLAG_THREADS", "2")
    assert run(capsys, *argv)[1] == seq
