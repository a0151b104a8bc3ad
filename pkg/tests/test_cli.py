import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from cylrep.cli import main, parse_complex, parse_grid, UsageError
from cylrep.report import CSV_HEADER, GridReport

FIXTURES = Path(__file__).parent / "fixtures"


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_complex():
    assert parse_complex("1.5,-2e-3") == complex(1.5, -2e-3)
    assert parse_complex("-4") == -4
    for bad in ("", "1,2,3", "a,b", "1,"):
        with pytest.raises(UsageError):
            parse_complex(bad)
    assert parse_grid("") == []
    assert parse_grid("1,0; 2,1") == [1, 2 + 1j]


def test_eval_closed_form(capsys):
    code, out, _ = run(["eval", "J", "--mu", "0.5,0", "--z", "1.5707963,0"], capsys)
    assert code == 0
    value = float(out.split("=")[1].split()[0])
    assert abs(value - 0.6366198) < 1e-7


def test_eval_json_negative_order(capsys):
    code, out, _ = run(["eval", "J", "--mu", "-1.3,0", "--z", "2,0", "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["trace"] == "J/integral+sum/generic"
    assert abs(data["value"]["re"] - -0.5496521412457274) < 1e-10


def test_eval_derivative(capsys):
    code, out, _ = run(["eval", "dJ", "--mu", "0", "--z", "1.3", "--n", "1", "--json"], capsys)
    assert code == 0 and json.loads(out)["n"] == 1


@pytest.mark.parametrize("argv, code, text", [
    (["eval", "Y", "--mu", "0,0", "--z", "0,0"], 2, "divergent at z=0"),
    (["eval", "J", "--mu", "0.5", "--z", "-1,0"], 2, "cut"),
    (["eval", "J", "--z", "1,x"], 1, "re,im"),
    (["eval", "Bogus", "--z", "1"], 1, "unknown function"),
    (["frobnicate"], 1, "invalid choice"),
    (["limits", "ChiSmallZ", "--mu", "1,0"], 2, "outside its regime"),
    (["limits", "NoSuchForm"], 1, "unknown approximant"),
    (["eval", "J", "--z", "1", "--config", str(FIXTURES / "missing.cfg")], 1, "config"),
    (["eval", "J", "--mu", "0.3", "--z", "12,0", "--config", str(FIXTURES / "starved_quadrature.cfg")], 3,
     "did not converge"),
])
def test_exit_codes(argv, code, text, capsys):
    got, _, err = run(argv, capsys)
    assert got == code
    assert text in err


def test_flags_beat_config_file(capsys):
    argv = ["eval", "J", "--mu", "0.3", "--z", "12,0", "--config", str(FIXTURES / "starved_quadrature.cfg"),
            "--tol", "1e-6"]
    assert run(argv, capsys)[0] == 0


def test_env_cap(monkeypatch, capsys):
    monkeypatch.setenv("CYLREP_MAX_ABS_Z", "5")
    code, _, err = run(["eval", "J", "--z", "6"], capsys)
    assert code == 2 and "cap" in err


def test_compare_single_point(capsys):
    code, out, err = run(["compare", "J", "--grid-mu", "2,0", "--grid-z", "1,0"], capsys)
    assert code == 0
    rows = GridReport.from_csv(out).rows
    assert len(rows) == 1 and rows[0].rel_err <= 1e-10
    assert "max rel_err" in err and "mean nodes" in err


def test_compare_empty_grid(capsys):
    code, out, _ = run(["compare", "J", "--grid-mu", "", "--grid-z", ""], capsys)
    assert code == 0
    assert out == ",".join(CSV_HEADER) + "\n"


def test_compare_writes_file_and_json(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, _, _ = run(["compare", "Y", "--grid-mu", "0;0.3", "--grid-z", "0;1", "--json", "--out", str(target)],
                     capsys)
    data = json.loads(target.read_text())
    assert code == 0 and data["summary"]["points"] == 4 and data["summary"]["failed"] == 2


def test_limits_report(capsys):
    code, out, _ = run(["limits", "Y0SmallZ", "--json"], capsys)
    ratios = [complex(r["ratio"]["re"], r["ratio"]["im"]) for r in json.loads(out)["rows"]]
    assert code == 0
    devs = [abs(r - 1) for r in ratios]
    assert devs[-1] < 1e-6
    code, out, _ = run(["limits", "ChiSmallZ", "--mu", "-1.7,0"], capsys)
    assert code == 0 and "ChiSmallZ" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cylrep", "eval", "J", "--mu", "2", "--z", "1"],
                          capture_output=True, text=True, env={**os.environ})
    assert proc.returncode == 0 and "trace = J/jacobi-anger/integer" in proc.stdout
