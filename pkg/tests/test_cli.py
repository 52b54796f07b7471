import json

import pytest

from blring import golden
from blring.cli import main
from blring.render import render_tables
from blring.report import VerifyReport, verify_paper
from blring.resalg import to_spec

SMALL = {"zn_max": 12, "polyquot_max": 16, "product_max": 16, "product_factor_max": 4}


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_classify_z4(capsys):
    rc, out, _ = run(capsys, "classify", "--ring", "zn:4")
    assert rc == 0
    assert out.splitlines()[0] == "3 ideals; BL: yes; MV: yes; chain: yes"
    assert render_tables(golden.load("luk3")) in out


def test_classify_degenerate_ring(capsys):
    rc, _, err = run(capsys, "classify", "--ring", "zn:1")
    assert rc == 2 and "degenerate ring" in err


def test_census_order4(capsys):
    rc, out, _ = run(capsys, "census", "--order", "4")
    assert rc == 0 and out.splitlines()[0] == "5 classes (2 MV, 3 BL-chains)"


def test_census_json_schema(capsys):
    rc, out, _ = run(capsys, "census", "--order", "3", "--format", "json")
    data = json.loads(out)
    assert rc == 0 and data["schema"] == 1 and data["summary"]["bl"] == 2


def test_census_cap_exit_code(capsys):
    rc, _, err = run(capsys, "census", "--order", "8")
    assert rc == 3 and "cap" in err


def test_bad_ring_spec_is_usage_error(capsys):
    rc, _, err = run(capsys, "ring", "--ring", "zz:4")
    assert rc == 2 and err.startswith("error:")


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code == 2


def test_ring_verb(capsys):
    rc, out, _ = run(capsys, "ring", "--ring", "zn:6")
    assert rc == 0 and "ring zn:6 of order 6" in out


def test_ideals_verb(capsys):
    rc, out, _ = run(capsys, "ideals", "--ring", "zn:6", "--format", "json")
    assert rc == 0 and json.loads(out)["schema"] == 1


def test_tables_golden(capsys):
    rc, out, _ = run(capsys, "tables", "--golden", "godel3_squared")
    assert rc == 0 and out.strip() == render_tables(golden.load("godel3_squared")).strip()


def test_tables_unknown_golden(capsys):
    rc, _, _ = run(capsys, "tables", "--golden", "nope")
    assert rc == 2


def test_algebra_file(tmp_path, capsys):
    path = tmp_path / "alg.json"
    path.write_text(to_spec(golden.load("godel4")).to_json())
    rc, out, _ = run(capsys, "classify", "--algebra", str(path))
    assert rc == 0 and "MV: no" in out


def test_missing_algebra_file(tmp_path, capsys):
    rc, _, _ = run(capsys, "classify", "--algebra", str(tmp_path / "missing.json"))
    assert rc == 3


def test_ledger_verb(capsys):
    rc, out, _ = run(capsys, "ledger")
    assert rc == 0 and len(out.splitlines()) == 13


def test_atlas_verb(tmp_path, capsys):
    cfg = tmp_path / "rings.txt"
    cfg.write_text("zn:8  # a comment\nprod:(zn:2,zn:2)\n")
    rc, out, _ = run(capsys, "atlas", "--family", "zn:2-6", "--config", str(cfg), "--ring", "polyquot:6:x^2")
    lines = out.splitlines()
    assert rc == 0 and lines[-1].startswith("8 rings")


def test_atlas_bad_family(capsys):
    rc, _, _ = run(capsys, "atlas", "--family", "zn:a-b")
    assert rc == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "out.txt"
    rc, out, _ = run(capsys, "ledger", "--out", str(target))
    assert rc == 0 and out == "" and target.read_text().startswith("case")


def test_output_is_deterministic(capsys):
    outs = [run(capsys, "census", "--order", "5", "--format", "json")[1] for _ in range(2)]
    outs.append(run(capsys, "census", "--order", "5", "--format", "json", "--workers", "2")[1])
    assert outs[0] == outs[1] == outs[2]


def test_verify_cap3_is_incomplete_and_fails():
    report = verify_paper(census_cap=3, ring_bounds=SMALL)
    assert report.count("skipped") >= 3 and report.exit_code == 1
    assert report.count("mismatch") == 0


def test_verify_quick_report_round_trip():
    report = verify_paper(ring_bounds=SMALL)
    assert report.exit_code == 0 and report.count("paper-discrepancy") == 2
    again = VerifyReport.from_json(report.to_json())
    assert again.rows == report.rows and again.text() == report.text()


def test_report_schema_checked():
    with pytest.raises(ValueError):
        VerifyReport.from_json('{"schema": 99, "rows": []}')
    with pytest.raises(ValueError):
        VerifyReport.from_json('{"schema": 1, "rows": [{"claim": "x", "status": "bogus", "details": ""}]}')


def test_verify_paper_verb_cap3(capsys):
    rc, out, _ = run(capsys, "verify-paper", "--quick", "--census-cap", "3")
    assert rc == 1 and "skipped" in out
