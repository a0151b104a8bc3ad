"""Acceptance criteria 1-11; each prints one PASS/FAIL line in the terminal summary."""

import math
import subprocess
import sys
from pathlib import Path

import pytest

from cylrep import acceptance
from cylrep.cli import main
from cylrep.report import ACCEPTANCE_MU, ACCEPTANCE_Z, GridReport, run_grid

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number, record):
    check = acceptance.CRITERIA[number - 1]
    result = check()
    line = result.line()
    record(number, result.passed, line.split(": ", 1)[1])
    print(line)
    assert result.passed, line


def _same(a, b):
    return a == b or (math.isnan(a) and math.isnan(b))


def test_criterion_11_cli_contract(tmp_path, record, capsys):
    problems = []

    selftest = subprocess.run([sys.executable, "-m", "cylrep", "selftest"], capture_output=True, text=True)
    if selftest.returncode != 0:
        problems.append(f"selftest exit {selftest.returncode}")
    if selftest.stdout.count("[PASS]") != 10:
        problems.append("selftest did not report ten passing criteria")

    out = tmp_path / "grid.csv"
    code = main(["compare", "J", "--out", str(out), "--workers", "4"])
    text = out.read_text()
    parsed = GridReport.from_csv(text)
    memory = run_grid("J", ACCEPTANCE_MU, ACCEPTANCE_Z)
    fields = ("mu", "z", "value", "oracle")
    exact = code == 0 and len(parsed.rows) == len(memory.rows) and all(
        all(_same(getattr(a, f).real, getattr(b, f).real) and _same(getattr(a, f).imag, getattr(b, f).imag)
            for f in fields)
        and _same(a.abs_err, b.abs_err) and _same(a.rel_err, b.rel_err)
        and (a.function, a.trace, a.nodes) == (b.function, b.trace, b.nodes)
        for a, b in zip(parsed.rows, memory.rows))
    if not exact or parsed.to_csv() != text:
        problems.append("CSV round trip is not bit-exact")

    fixtures = {
        1: ["eval", "J", "--mu", "0.5", "--z", "one"],
        2: ["eval", "Y", "--mu", "0,0", "--z", "0,0"],
        3: ["eval", "J", "--mu", "0.3", "--z", "12,0", "--config", str(FIXTURES / "starved_quadrature.cfg")],
    }
    for expected, argv in fixtures.items():
        got = main(argv)
        if got != expected:
            problems.append(f"{' '.join(argv[:2])} exited {got}, expected {expected}")
    capsys.readouterr()

    passed = not problems
    record(11, passed, "CLI contract: selftest, bit-exact CSV round trip, exit codes 1/2/3"
           + ("" if passed else f" ({'; '.join(problems)})"))
    assert passed, problems
