from __future__ import annotations

import csv
import io
import json

import pytest

from abideals.cli import main, run
from abideals.verify import TABLE_A3_EXPECTED


def test_roots_text():
    report = run(["roots", "A3"])
    assert report.exit_code == 0
    lines = report.payload.splitlines()
    assert lines[0] == "A3: 6 positive roots"
    assert lines[1:4] == ["001", "010", "100"]


def test_roots_json_schema():
    report = run(["roots", "C2", "--format", "json"])
    data = json.loads(report.payload)
    assert data["schema"] == 1
    assert data["positive_roots"] == ["01", "10", "11", "21"]


def test_roots_csv():
    report = run(["roots", "A2", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(report.payload)))
    assert rows[0] == ["index", "coeffs", "height"]
    assert rows[-1] == ["2", "11", "2"]


def test_ideals_output():
    report = run(["ideals", "C2"])
    assert report.exit_code == 0
    assert report.payload.splitlines()[0] == "C2: 4 abelian ideals"
    data = json.loads(run(["ideals", "C2", "--format", "json"]).payload)
    assert data["schema"] == 1
    assert data["ideals"][0] == {"roots": [], "generators": [], "kappa": 0}
    assert data["ideals"][-1] == {
        "roots": ["01", "11", "21"],
        "generators": ["01"],
        "kappa": 1,
    }


def test_poly_all_sources_agree():
    report = run(["poly", "G2", "--source", "all"])
    lines = report.payload.splitlines()
    assert lines == [
        "ideals: 1 + 3q",
        "dynkin: 1 + 3q",
        "closed_form: 1 + 3q",
    ]


def test_poly_evaluation():
    report = run(["poly", "F4", "--source", "closed", "--at", "2"])
    assert report.payload == "closed_form: 1 + 10q + 5q^2 | at 2: 41"
    data = json.loads(run(["poly", "G2", "--source", "dynkin", "--at", "2", "--format", "json"]).payload)
    assert data["polynomials"][0]["value"] == 7


def test_bijection_good_a3():
    report = run(["bijection", "A3", "--method", "good"])
    lines = report.payload.splitlines()
    assert lines[0] == "A3 bijection via good: 8 ideals"
    assert "generators={110,011} kappa=2 phi={1,3}" in lines
    assert "generators={010} kappa=1 phi={2}" in lines


def test_bijection_good_restricted_to_a_and_c():
    assert run(["bijection", "C3", "--method", "good"]).exit_code == 0
    report = run(["bijection", "B3", "--method", "good"])
    assert report.exit_code == 2
    assert "error" in report.payload


def test_bijection_csv_uses_interval_notation():
    report = run(["bijection", "A3", "--method", "good", "--format", "csv"])
    rows = list(csv.reader(io.StringIO(report.payload)))
    assert rows[0] == ["generators", "kappa", "phi"]
    assert ["[1,2];[2,3]", "2", "1;3"] in rows


def test_bijection_minuscule_json():
    data = json.loads(run(["bijection", "A3", "--method", "minuscule", "--format", "json"]).payload)
    rows = data["rows"]
    assert len(rows) == 8
    by_z = {tuple(r["z"]): r for r in rows}
    assert by_z[(1, 2, 1)]["z_mod2"] == "101"
    assert by_z[(1, 2, 1)]["s_subset"] == [1, 3]
    assert by_z[(1, 2, 1)]["generators"] == ["010"]


def test_bijection_normalizer():
    report = run(["bijection", "A3", "--method", "normalizer"])
    assert "generators={110,011} levi={}" in report.payload.splitlines()


def test_table_a3_command():
    report = run(["table-a3"])
    assert report.exit_code == 0
    assert report.payload == TABLE_A3_EXPECTED


def test_usage_errors():
    assert run(["verify", "--types", "H9"]).exit_code == 2
    assert run(["roots", "D2"]).exit_code == 2
    assert run(["frobnicate"]).exit_code == 2
    assert run(["poly", "A3", "--source", "nonsense"]).exit_code == 2
    assert run([]).exit_code == 2


def test_verify_small():
    report = run(["verify", "--types", "A2,C2", "--max-rank", "2"])
    assert report.exit_code == 0
    lines = report.payload.splitlines()
    assert len(lines) == 10
    assert all(line.startswith("[PASS]") for line in lines[:9])
    assert lines[-1] == "all checks passed"


def test_verify_json():
    report = run(["verify", "--types", "A2", "--format", "json"])
    data = json.loads(report.payload)
    assert data["schema"] == 1 and data["passed"] is True
    assert [r["criterion"] for r in data["results"]] == list(range(1, 10))


def test_verify_failure_exits_1(monkeypatch):
    import abideals.cli as cli_mod
    from abideals.verify import CheckResult

    monkeypatch.setattr(
        cli_mod,
        "run_all",
        lambda max_rank=8, types=None: [CheckResult(1, "counting", False, "forced failure")],
    )
    report = cli_mod.run(["verify"])
    assert report.exit_code == 1
    assert "[FAIL] criterion 1 counting: forced failure" in report.payload
    assert report.payload.endswith("VERIFICATION FAILED")


def test_output_deterministic():
    for argv in (["ideals", "B3"], ["bijection", "C3", "--method", "minuscule"], ["table-a3"]):
        assert run(argv).payload == run(argv).payload


def test_main_exit_codes(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["poly", "G2", "--source", "closed"])
    assert exc.value.code == 0
    assert "1 + 3q" in capsys.readouterr().out
    with pytest.raises(SystemExit) as exc:
        main(["roots", "Z9"])
    assert exc.value.code == 2
