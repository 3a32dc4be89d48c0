"""Verification report schema/round-trip and command-line behavior."""

from __future__ import annotations

import json

import pytest

from wpchow import VerificationReport, build_report
from wpchow.cli import main


@pytest.fixture(scope="module")
def report():
    return build_report(bound=8)


@pytest.fixture(scope="module")
def self_test_report():
    return build_report(bound=8, self_test=True)


def test_report_all_pass_by_default(report):
    assert report.failed == 0
    assert report.passed == len(report.items) > 20
    assert report.all_passed
    ids = [item.id for item in report.items]
    assert len(ids) == len(set(ids))


def test_report_item_status_matches_strings(report):
    for item in report.items:
        assert item.status == ("pass" if item.expected == item.actual else "fail")


def test_report_json_roundtrip(report):
    text = report.render_json()
    parsed = VerificationReport.parse_json(text)
    assert parsed == report
    payload = json.loads(text)
    assert payload["schema"] == 1
    assert payload["summary"] == {"pass": report.passed, "fail": report.failed}
    assert all(isinstance(item["expected"], str) for item in payload["items"])


def test_report_roundtrip_rejects_bad_summary(report):
    payload = report.to_json_dict()
    payload["summary"]["fail"] = 99
    with pytest.raises(ValueError):
        VerificationReport.from_json_dict(payload)


def test_report_bound_stability(report):
    four = build_report(bound=4)
    assert [(i.id, i.status) for i in four.items] == [
        (i.id, i.status) for i in report.items
    ]


def test_report_bound_validation():
    with pytest.raises(ValueError):
        build_report(bound=3)


def test_self_test_fails_assembly_item(self_test_report):
    assert self_test_report.failed >= 1
    failing = {item.id for item in self_test_report.items if item.status == "fail"}
    assert failing == {"m12bar-assembly"}
    assert not self_test_report.all_passed


def test_expected_headline_values(report):
    by_id = {item.id: item for item in report.items}
    assert by_id["m12bar-ring"].expected == "Z[x, y]/(x*y, 24*x^2 + 24*y^2)"
    assert by_id["pic-complement-disc"].expected == "Z/12"
    assert by_id["disc-weighted-degree"].expected == "12"
    assert by_id["weierstrass-identity"].actual == "0"


def test_cli_chow(capsys):
    assert main(["chow", "2", "3", "4", "--max-degree", "4"]) == 0
    out = capsys.readouterr().out
    assert "Z[t]/(24*t^3)" in out
    assert "Z/24" in out


def test_cli_chow_point(capsys):
    assert main(["chow", "1"]) == 0
    assert "Z[t]/(t)" in capsys.readouterr().out


def test_cli_chow_46(capsys):
    assert main(["chow", "4", "6", "--max-degree", "3"]) == 0
    out = capsys.readouterr().out
    assert "Z[t]/(24*t^2)" in out
    assert out.count("Z/24") == 2


def test_cli_chow_rejects_bad_weight():
    with pytest.raises(SystemExit):
        main(["chow", "0"])


def test_cli_blowup_moduli(capsys):
    assert main(["blowup", "4", "6", "--max-degree", "4"]) == 0
    out = capsys.readouterr().out
    assert "Z[x, y]/(x*y, 24*x^2 + 24*y^2)" in out
    assert "invariant ring check" in out
    assert "x -> t" in out and "y -> 0" in out


def test_cli_blowup_generic(capsys):
    assert main(["blowup", "2", "3"]) == 0
    out = capsys.readouterr().out
    assert "P(2, 3)" in out
    assert "moduli assembly" not in out


def test_cli_curve_normalize(capsys):
    assert main(["curve", "normalize", "3", "2", "0"]) == 0
    out = capsys.readouterr().out
    assert "alpha = (1, 1, -3)" in out
    assert "beta  = (-3, 3)" in out


def test_cli_curve_disc(capsys):
    assert main(["curve", "disc", "1", "0", "--", "-3"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_cli_curve_j(capsys):
    assert main(["curve", "j", "1", "0"]) == 0
    assert capsys.readouterr().out.strip() == "1728"


def test_cli_curve_j_singular(capsys):
    assert main(["curve", "j", "--", "-3", "2"]) == 1
    assert "discriminant" in capsys.readouterr().err


def test_cli_curve_iso(capsys):
    assert main(["curve", "iso", "12", "16", "0", "3", "2", "0"]) == 0
    assert "lambda = 2" in capsys.readouterr().out
    assert main(["curve", "iso", "1", "0", "0", "0", "1", "0"]) == 1


def test_cli_curve_fixed(capsys):
    assert main(["curve", "fixed", "--", "-3", "2"]) == 0
    out = capsys.readouterr().out
    assert "[1, 0, -3]" in out
    assert "[-2, 0, -3]" in out
    assert "multiplicity 2" in out


def test_cli_curve_rejects_bad_denominator(capsys):
    assert main(["curve", "normalize", "1/5", "0", "0"]) == 2
    assert "Z[1/6]" in capsys.readouterr().err


def test_cli_pic_complement(capsys):
    code = main(
        [
            "pic-complement",
            "2",
            "3",
            "4",
            "--poly",
            "4*a4^3 + 27*(a3^2 - a2^3 - a2*a4)^2",
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "weighted degree 12" in out
    assert "Pic = Z/12" in out


def test_cli_pic_complement_inhomogeneous(capsys):
    assert main(["pic-complement", "4", "6", "--poly", "x + y"]) == 2
    assert "not homogeneous" in capsys.readouterr().err


def test_cli_verify_paper(capsys):
    assert main(["verify-paper"]) == 0
    out = capsys.readouterr().out
    assert "summary:" in out
    assert " 0 failed" in out


def test_cli_verify_paper_self_test(capsys):
    assert main(["verify-paper", "--self-test"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_cli_verify_paper_json_output(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["verify-paper", "--format", "json", "--output", str(target)]) == 0
    capsys.readouterr()
    report = VerificationReport.parse_json(target.read_text(encoding="utf-8"))
    assert report.all_passed
    assert report.bound == 8


def test_cli_verify_paper_bound_validation():
    with pytest.raises(SystemExit):
        main(["verify-paper", "--bound", "3"])
