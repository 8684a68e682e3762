"""Command-line contract: exit codes, JSON shape, SVG output, determinism."""

from __future__ import annotations

import json

from click.testing import CliRunner

from mixedlip.cli import main

from conftest import EX_CD_F, EX_CD_G, EX_HOPF, EX_HOPF_PERT, EX_MAIN


def _run(*args):
    return CliRunner().invoke(main, list(args))


def test_analyze_report_shape():
    res = _run("analyze", EX_MAIN, "--grid", "128")
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["schema"] == 1
    assert report["gammaInn"]["p_inn"] == [[2, 1], [1, 2]]
    for key in (
        "input",
        "support",
        "gamma",
        "slopes",
        "I_f",
        "linkSummary",
        "conditions",
        "contactData",
        "tangentCone",
        "flags",
    ):
        assert key in report


def test_analyze_parse_error_exit_2():
    res = _run("analyze", "u + + v")
    assert res.exit_code == 2


def test_analyze_single_variable_trivial():
    res = _run("analyze", "u", "--grid", "64")
    assert res.exit_code == 0


def test_compare_exit_codes():
    same = _run("compare", EX_HOPF, EX_HOPF_PERT, "--grid", "128")
    assert same.exit_code == 0
    assert json.loads(same.output)["decision"] == "ambient-equivalent"
    diff = _run("compare", EX_CD_F, EX_CD_G, "--grid", "128")
    assert diff.exit_code == 3
    inc = _run("compare", "u^2 - v^2", "u^3 - v^3", "--grid", "128")
    assert inc.exit_code in (0, 3, 4)


def test_family_verdict_json():
    res = _run("family", EX_HOPF_PERT, "u^3 + v^3")
    assert res.exit_code == 0
    assert json.loads(res.output)["decision"] == "ambient-equivalent"


def test_svg_newton_and_braid(tmp_path):
    newton = tmp_path / "n.svg"
    res = _run("svg", EX_MAIN, "--grid", "128", "--svg", str(newton))
    assert res.exit_code == 0
    text = newton.read_text()
    assert text.startswith("<?xml") and "</svg>" in text
    braid = tmp_path / "b.svg"
    res = _run(
        "svg", EX_MAIN, "--what", "braid", "--face", "1", "--grid", "128",
        "--svg", str(braid),
    )
    assert res.exit_code == 0
    assert "polyline" in braid.read_text()
    # single monomial: one support dot, no boundary edge
    res = _run("svg", "u^3", "--grid", "64")
    assert res.exit_code == 0 and "circle" in res.output


def test_oracle_json_and_csv(tmp_path):
    csv_path = tmp_path / "o.csv"
    res = _run(
        "oracle", EX_HOPF, "--pair", "0", "1", "--grid", "64",
        "--pairs", "4", "--csv", str(csv_path),
    )
    assert res.exit_code == 0
    payload = json.loads(res.output)
    assert abs(payload["qHat"] - 1.0) < 0.05
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "radius,distance"
    assert len(lines) > 10


def test_determinism_byte_identical():
    for args in (
        ("analyze", EX_MAIN, "--grid", "128"),
        ("compare", EX_CD_F, EX_CD_G, "--grid", "128"),
    ):
        first = _run(*args).output
        second = _run(*args).output
        assert first == second
