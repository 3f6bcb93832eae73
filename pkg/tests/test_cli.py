import json

import pytest

from redinit.cli import RunReport, main, run_command


def run(argv):
    report, code = run_command(argv)
    return report, code


def test_gb_lex_bundled_example():
    report, code = run(["gb", "--order", "lex", "remark18.ideal"])
    assert code == 0
    assert set(report.results["leading"]) == {"x^2", "x*y", "x*z", "y*z^2", "y^2*z"}


def test_global_flags_before_subcommand():
    report, code = run(["--order", "lex", "inideal", "remark18"])
    assert code == 0 and report.results["order"] == "lex"


def test_reduction_number_polarization_example():
    report, code = run(["reduction-number", "sec2.ideal"])
    assert code == 0
    # the printed ideal attains 3; the corrected variant attains 4
    assert report.results["reduction_number"] == 3
    report, _ = run(["reduction-number", "sec2-I-corrected"])
    assert report.results["reduction_number"] == 4


def test_initial_ideal_section_comparison_holds():
    report, code = run(["check-thm11", "--tau", "lex", "--p", "1", "remark18.ideal"])
    assert code == 0 and report.passed and report.results["holds"]


def test_section_hf_routes_agree():
    a, _ = run(["section-hf", "--p", "1", "--gin", "remark18"])
    b, _ = run(["section-hf", "--p", "1", "--direct", "--seed", "5", "remark18"])
    assert a.results["hilbert"] == b.results["hilbert"]


@pytest.mark.parametrize("argv, key, value", [
    (["dim", "remark18"], "dim", 1),
    (["hilbert", "--max-degree", "4", "remark18"], "hilbert", [1, 3, 3, 2, 2]),
    (["analytic-spread", "remark19-quadrics"], "analytic_spread", 2),
    (["gens-by-degree", "remark18"], "counts", [0, 0, 3, 0]),
    (["lex-segment", "sec2-I"], "reduction_number", 5),
])
def test_simple_commands(argv, key, value):
    report, code = run(argv)
    assert code == 0 and report.results[key] == value


def test_polarize_vars():
    report, code = run(["polarize", "--vars", "x4", "sec2-I"])
    assert code == 0 and report.results["ring"] == ["x1", "x2", "x3", "x4", "x4_1"]
    assert "x4*x4_1" in report.results["generators"]


def test_wedge_checks():
    for lemma in ("13", "14", "15", "16"):
        report, code = run(["wedge", "--lemma", lemma, "--order", "degrevlex", "--tau", "lex", "remark18"])
        assert code == 0 and report.passed, lemma
    report, _ = run(["wedge", "remark18"])
    assert report.results["initial"] == "x^2 ^ x*y ^ x*z"


def test_json_roundtrip(tmp_path):
    out = tmp_path / "r.json"
    report, code = run(["vasconcelos", "--tau", "lex", "--json", str(out), "remark18"])
    data = json.loads(out.read_text())
    assert RunReport.from_json(data) == RunReport.from_json(json.loads(json.dumps(report.to_json())))
    assert data["command"] == "vasconcelos" and data["passed"] is True
    assert data["seeds"] == {"seed": 0, "trials": 2}


def test_reproducible(tmp_path):
    a, _ = run(["gin", "--seed", "3", "remark18"])
    b, _ = run(["gin", "--seed", "3", "remark18"])
    assert a.results == b.results


@pytest.mark.parametrize("argv", [
    ["gb", "does-not-exist.ideal"],
    ["bogus"],
    ["gb", "--order", "nope", "remark18"],
    ["polarize", "remark18"],
    ["section-hf", "remark18"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv)[1] == 2


def test_parse_error_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.ideal"
    bad.write_text("ring x, y; char 5; ideal x +")
    assert main(["gb", str(bad)]) == 2
    assert "dangling" in capsys.readouterr().err


def test_corpus_command(tmp_path):
    report, code = run(["corpus", "--count", "3", "--out", str(tmp_path / "c"), "--seed", "2"])
    assert code == 0 and len(report.results["files"]) == 3


@pytest.mark.parametrize("suite", ["thm11", "lemma12", "prop21"])
def test_verify_small(suite):
    argv = ["verify", suite, "--count", "5", "--n-vars", "3", "--gen-degree", "3"]
    if suite == "prop21":
        argv += ["--char", "0"]
    report, code = run(argv)
    assert code == 0 and report.passed and not report.results["failures"]


def test_verify_exterior_suites():
    for suite in ("lemma13", "lemma14", "lemma15", "cor16"):
        report, code = run(["verify", suite, "--count", "10"])
        assert code == 0 and report.passed, suite


def test_verify_lex_comparison_small_prime_is_report_only():
    report, code = run(["verify", "prop21", "--char", "5", "--count", "10", "--n-vars", "4", "--gen-degree", "3"])
    assert code == 0 and report.passed is None
    assert "caveat" in report.results


def test_verify_bundled_examples_echoes_failures():
    report, code = run(["verify", "paper-examples"])
    assert code == 1
    assert {f["check"] for f in report.results["failures"]} == {"sec2-I.ideal r", "sec2-I.ideal r_A_mod_z"}


def test_main_prints(capsys):
    assert main(["dim", "remark18"]) == 0
    assert "dim: 1" in capsys.readouterr().out
