"""End-to-end CLI behavior: reports, exit codes, determinism."""

import json

import pytest

from eulersym.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_pass(capsys):
    code, out, _ = run(capsys, "validate", "epr.sys")
    assert code == 0
    assert "result: PASS" in out
    assert "component dims (1, 3, 3, 1)" in out


def test_validate_fail_lists_diagnostics(tmp_path, capsys):
    bad = tmp_path / "bad.sys"
    bad.write_text("vars: x1 x2\nrank: 3\nF2: x2^2\nF3: x1^3\n")
    code, out, _ = run(capsys, "validate", str(bad))
    assert code == 1
    assert "[fail] structure" in out
    assert "contracting x1^3 by e1" in out


def test_parse_error_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.sys"
    bad.write_text("vars: x1\nrank: 2\nF2: x1^2 +\n")
    code, out, err = run(capsys, "validate", str(bad))
    assert code == 2
    assert out == ""
    assert "line 3" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(capsys, "order", "nosuch.sys")
    assert code == 2
    assert "not a file and not a bundled example" in err


def test_order_and_baselocus(capsys):
    code, out, _ = run(capsys, "order", "rnc.sys")
    assert code == 0
    assert "[info] order: 3" in out
    code, out, _ = run(capsys, "baselocus", "epr.sys")
    assert code == 0
    assert "saturated ideal of F2 = (x1)" in out


def test_saturated_exit_codes(capsys):
    code, out, _ = run(capsys, "saturated", "triple.sys")
    assert code == 0
    assert "[info] saturated: TRUE" in out
    code, out, _ = run(capsys, "saturated", "epr.sys")
    assert code == 1
    assert "[info] saturated: FALSE" in out
    assert "[fail] prolongation-exactness" in out
    code, out, _ = run(capsys, "saturated", "veronese.sys")
    assert code == 1
    assert "order 2" in out


def test_saturated_point_cross_check(tmp_path, capsys):
    pts = tmp_path / "pts.txt"
    pts.write_text("0,1,0\n0,0,1\n0,1,1\n0,1,-1\n0,1,2\n0,2,1\n")
    code, out, _ = run(capsys, "saturated", "epr.sys", "--points", str(pts))
    assert "[pass] point-cross-check" in out
    off = tmp_path / "off.txt"
    off.write_text("1,1,1\n")
    code, out, _ = run(capsys, "saturated", "epr.sys", "--points", str(off))
    assert code == 1
    assert "[fail] point-cross-check" in out


def test_model_block_listing(capsys):
    code, out, _ = run(capsys, "model", "epr.sys")
    assert code == 0
    assert "[info] block-2: u2_1 u2_2 u2_3 (torus weight 2)" in out


def test_act_check(capsys):
    code, out, _ = run(capsys, "act-check", "quadric.sys", "--trials", "5")
    assert code == 0
    assert "[pass] group-law: 5/5 random instances exact" in out
    assert "[pass] translation-equivariance: 5/5 random instances exact" in out
    assert "[pass] euler-scaling: 5/5 random instances exact" in out
    assert "[pass] torus-normalization: 5/5 random instances exact" in out


def test_curve_degrees(capsys):
    code, out, _ = run(capsys, "curve-degrees", "epr.sys")
    assert code == 0
    assert "[pass] max-degree: largest sampled orbit degree 3, rank 3" in out
    assert "[pass] min-degree: smallest sampled orbit degree 1, order 1" in out


def test_implicitize(capsys):
    code, out, _ = run(capsys, "implicitize", "quadric.sys", "--degree", "2")
    assert code == 0
    assert "dim 1" in out
    assert "[info] generator-1: z1*z2 - z0*u2_1" in out


def test_ff_flex_demonstration(capsys):
    code, out, _ = run(capsys, "ff", "cubiccurve.par")
    assert code == 1
    assert "[info] filtration: dims by vanishing order (1, 1, 0, 1)" in out
    assert "[fail] closure" in out
    code, out, _ = run(capsys, "ff", "cubiccurve.par", "--at", "2")
    assert code == 0
    assert "[pass] closure" in out


def test_ff_chart(capsys):
    code, out, _ = run(capsys, "ff", "epr.sys", "--chart")
    assert code == 0
    assert "[info] G2: dim 3 = span(x1^2, x1*x2, x1*x3)" in out


def test_cartan(capsys):
    code, out, _ = run(capsys, "cartan", "quadric.par", "--trials", "3")
    assert code == 0
    assert out.count("[pass] point-") == 3


def test_report_battery(capsys):
    code, out, _ = run(capsys, "report", "triple.sys")
    assert code == 0
    assert "[pass] chart-extraction" in out
    assert "[pass] cartan" in out


def test_examples_listing_and_printing(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    for name in ("epr.sys", "quadric.par"):
        assert name in out
    code, out, _ = run(capsys, "examples", "quadric.sys")
    assert code == 0
    assert "F2: x1*x2" in out
    code, _, err = run(capsys, "examples", "nope.sys")
    assert code == 2


def test_json_output(capsys):
    code, out, _ = run(capsys, "order", "quadric.sys", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "order"
    assert doc["result"] == "PASS"
    assert {"status": "info", "tag": "order", "detail": "1"} in doc["entries"]


def test_reports_are_deterministic(capsys):
    first = run(capsys, "report", "quadric.sys")
    second = run(capsys, "report", "quadric.sys")
    assert first == second
    third = run(capsys, "curve-degrees", "triple.sys", "--seed", "9")
    fourth = run(capsys, "curve-degrees", "triple.sys", "--seed", "9")
    assert third == fourth
