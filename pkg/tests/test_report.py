import json
import math

import pytest
from hypothesis import given, strategies as st

from cylrep.errors import DomainError
from cylrep.report import (
    ACCEPTANCE_MU, ACCEPTANCE_Z, CSV_HEADER, FUNCTIONS, GridReport, GridRow, compare_point, evaluate,
    lookup, run_grid,
)


def same_float(a, b):
    return a == b or (math.isnan(a) and math.isnan(b))


def same_row(a, b):
    return (a.function == b.function and a.trace == b.trace and a.nodes == b.nodes
            and all(same_float(x, y) for x, y in (
                (a.mu.real, b.mu.real), (a.mu.imag, b.mu.imag), (a.z.real, b.z.real), (a.z.imag, b.z.imag),
                (a.value.real, b.value.real), (a.value.imag, b.value.imag),
                (a.oracle.real, b.oracle.real), (a.oracle.imag, b.oracle.imag),
                (a.abs_err, b.abs_err), (a.rel_err, b.rel_err))))


def test_header_is_exact():
    assert ",".join(CSV_HEADER) == "mu_re,mu_im,z_re,z_im,fn,val_re,val_im,oracle_re,oracle_im,abs_err,rel_err,trace,nodes"


def test_lookup_is_case_insensitive():
    assert lookup("h1")[0] == "H1"
    assert lookup("JSPH")[0] == "jsph"
    with pytest.raises(DomainError):
        lookup("Z")


def test_single_point_row():
    row = compare_point("J", 2, 1)
    assert row.rel_err <= 1e-10
    assert row.rel_err == row.abs_err / max(1, abs(row.oracle))
    assert not row.failed


def test_failure_becomes_row():
    row = compare_point("Y", 0, 0)
    assert row.failed and "divergent at z=0" in row.trace
    assert math.isnan(row.rel_err)


def test_grid_order_is_deterministic():
    mus, zs = [0.3, -1.3, 2], [0.5, 1 + 1j, 3]
    serial = run_grid("J", mus, zs, workers=1)
    threaded = run_grid("J", mus, zs, workers=4)
    assert [(r.mu, r.z) for r in threaded.rows] == [(complex(m), complex(z)) for m in mus for z in zs]
    assert all(same_row(a, b) for a, b in zip(serial.rows, threaded.rows))


def test_acceptance_grid_summary():
    s = run_grid("J", ACCEPTANCE_MU, ACCEPTANCE_Z, workers=4).summary()
    assert s["points"] == len(ACCEPTANCE_MU) * len(ACCEPTANCE_Z)
    assert s["failed"] == 0 and s["max_rel_err"] <= 1e-8


def test_csv_round_trip_is_bit_exact():
    report = run_grid("Y", [0, 0.3, -2.5 + 0.4j], [0, 1, 2 - 1j])
    text = report.to_csv()
    back = GridReport.from_csv(text)
    assert len(back.rows) == len(report.rows)
    assert all(same_row(a, b) for a, b in zip(report.rows, back.rows))
    assert back.to_csv() == text


@given(st.lists(st.tuples(*[st.floats(allow_nan=True, allow_infinity=True)] * 8), max_size=5),
       st.text(alphabet=st.characters(blacklist_categories=("Cs",), blacklist_characters="\0"), max_size=20))
def test_csv_round_trip_arbitrary_floats(values, trace):
    rows = [GridRow(complex(v[0], v[1]), complex(v[2], v[3]), "J", complex(v[4], v[5]), complex(v[6], v[7]),
                    v[0], v[1], trace.replace("\r", " "), 3) for v in values]
    report = GridReport(rows)
    back = GridReport.from_csv(report.to_csv())
    assert all(same_row(a, b) for a, b in zip(rows, back.rows))


def test_empty_grid():
    report = run_grid("J", [], [])
    assert report.to_csv() == ",".join(CSV_HEADER) + "\n"
    assert GridReport.from_csv(report.to_csv()).rows == []


def test_bad_header_rejected():
    with pytest.raises(ValueError):
        GridReport.from_csv("a,b,c\n")


def test_json_has_nulls_for_failures():
    data = json.loads(run_grid("Y", [0], [0, 1]).to_json())
    assert data["rows"][0]["rel_err"] is None
    assert data["summary"]["failed"] == 1


@pytest.mark.parametrize("name", sorted(FUNCTIONS))
def test_every_function_compares(name):
    mu = 1 if name in ("jsph", "ysph") else 0.3
    row = compare_point(name, mu, 1.2 + 0.1j, n=2)
    assert not row.failed and row.rel_err < 1e-8


def test_evaluate_passes_derivative_order():
    assert evaluate("dJ", 0.3, 1.0, n=2).value != evaluate("dJ", 0.3, 1.0, n=1).value
