"""Command-line surface: subcommands, JSON shape, exit codes."""

import json

import pytest

from weyl_ising import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    report = json.loads(captured.out) if captured.out else None
    return code, report


def by_name(report):
    return {c["name"]: c for c in report["checks"]}


def test_roots_e8(capsys):
    code, report = run(capsys, "roots", "E", "8")
    assert code == 0
    assert report["schema"] == 1
    assert report["tool"] == "weyl-ising"
    assert report["status"] == "pass"
    checks = by_name(report)
    assert checks["root_count"]["actual"]["exact"] == "240"
    assert checks["coxeter_number"]["actual"]["exact"] == "30"
    assert checks["m_alpha_uniform"]["actual"][0]["exact"] == "56"


def test_roots_a1(capsys):
    code, report = run(capsys, "roots", "A", "1")
    assert code == 0
    checks = by_name(report)
    assert checks["root_count"]["actual"]["exact"] == "2"
    assert checks["positive_root_count"]["actual"]["exact"] == "1"


def test_roots_unsupported_kind():
    with pytest.raises(SystemExit) as err:
        cli.main(["roots", "B", "2"])
    assert err.value.code == 2


def test_roots_unsupported_rank(capsys):
    code, _ = run(capsys, "roots", "E", "5")
    assert code == 2


def test_lattice_a2(capsys):
    code, report = run(capsys, "lattice", "A", "2")
    assert code == 0
    checks = by_name(report)
    assert checks["block_discriminant"]["status"] == "pass"
    assert checks["t_product_order_adjacent"]["actual"]["exact"] == "3"
    assert checks["t_product_order_orthogonal"]["status"] == "skipped"


def test_lattice_shell_flag(capsys):
    code, report = run(capsys, "lattice", "A", "2", "--shell", "2")
    assert code == 0
    assert report["shells"] == {"2": []}


def test_lattice_shell_rank_cap(capsys):
    code, _ = run(capsys, "lattice", "E", "8", "--shell", "2")
    assert code == 2


def test_griess_a2_oracle(capsys):
    code, report = run(capsys, "griess", "A", "2", "--oracle")
    assert code == 0
    checks = by_name(report)
    assert checks["central_charge"]["actual"]["exact"] == "16/11"
    assert checks["oracle_agreement"]["actual"] == "3/3 pairs"
    assert checks["oracle_agreement"]["status"] == "pass"


def test_griess_d4(capsys):
    code, report = run(capsys, "griess", "D", "4")
    assert code == 0
    checks = by_name(report)
    assert checks["dimension"]["actual"]["exact"] == "12"
    assert checks["central_charge"]["actual"]["exact"] == "16/3"
    assert checks["oracle_agreement"]["status"] == "skipped"


def test_griess_e7_charge(capsys):
    code, report = run(capsys, "griess", "E", "7")
    assert code == 0
    assert by_name(report)["central_charge"]["actual"]["exact"] == "21"


def test_griess_oracle_restriction(capsys):
    assert run(capsys, "griess", "D", "4", "--oracle")[0] == 2
    assert run(capsys, "griess", "A", "5", "--oracle")[0] == 2


def test_group_a3(capsys):
    code, report = run(capsys, "group", "A", "3")
    assert code == 0
    assert report["miyamoto_order"] == 24
    assert report["weyl_order"] == 24
    assert report["minus_one_in_weyl"] is False
    checks = by_name(report)
    assert checks["miyamoto_equals_weyl_quotient"]["status"] == "pass"
    assert checks["order3_pair_count"]["actual"]["exact"] == "12"


def test_triality_3(capsys):
    code, report = run(capsys, "triality", "3")
    assert code == 0
    checks = by_name(report)
    assert checks["group_order"]["actual"]["exact"] == "18"
    assert checks["central_charge"]["actual"]["exact"] == "4"
    assert checks["shape"]["actual"] == "3^1:S_3"
    assert report["delta"].startswith("(-5/2, -1/2")


def test_triality_too_small(capsys):
    assert run(capsys, "triality", "2")[0] == 2


def test_audit_pass(tmp_path, capsys):
    path = tmp_path / "gram.json"
    path.write_text(json.dumps({"gram": [[2, -1], [-1, 2]]}))
    code, report = run(capsys, "audit", str(path))
    assert code == 0
    assert report["details"] == {"rank": 2, "integral": True, "even": True,
                                 "discriminant": [3]}


def test_audit_rational_entries(tmp_path, capsys):
    path = tmp_path / "gram.json"
    path.write_text(json.dumps({"gram": [["1/2", 0], [0, "3/2"]]}))
    code, report = run(capsys, "audit", str(path))
    assert code == 0
    assert report["details"]["integral"] is False


def test_audit_indefinite(tmp_path, capsys):
    path = tmp_path / "gram.json"
    path.write_text(json.dumps({"gram": [[0, 1], [1, 0]]}))
    code, report = run(capsys, "audit", str(path))
    assert code == 1
    assert by_name(report)["positive_definite"]["status"] == "fail"


def test_audit_not_symmetric(tmp_path, capsys):
    path = tmp_path / "gram.json"
    path.write_text(json.dumps({"gram": [[2, 1], [0, 2]]}))
    code, report = run(capsys, "audit", str(path))
    assert code == 1
    checks = by_name(report)
    assert checks["square_symmetric"]["status"] == "fail"
    assert checks["positive_definite"]["status"] == "skipped"


def test_audit_usage_errors(tmp_path, capsys):
    assert run(capsys, "audit", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    assert run(capsys, "audit", str(bad))[0] == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"matrix": []}))
    assert run(capsys, "audit", str(wrong))[0] == 2


def test_output_file_deterministic(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert cli.main(["roots", "A", "2", "-o", str(first)]) == 0
    out = capsys.readouterr().out
    assert out == ""
    assert cli.main(["roots", "A", "2", "-o", str(second)]) == 0
    a = first.read_bytes()
    assert a == second.read_bytes()
    assert a.endswith(b"\n")
    assert b"\r" not in a


def test_report_max_n_floor(capsys):
    assert run(capsys, "report", "--max-n", "5")[0] == 2


def test_report_thread_env_validation(monkeypatch, capsys):
    monkeypatch.setenv("WEYL_ISING_THREADS", "zero")
    assert run(capsys, "report")[0] == 2
    monkeypatch.setenv("WEYL_ISING_THREADS", "0")
    assert run(capsys, "report")[0] == 2


def test_report_plumbing(monkeypatch, capsys):
    """Report assembly: prefixed unique names, deterministic order,
    failure propagates to the exit code."""
    fake = [
        ("alpha", lambda: [cli.check("one", 1, 1), cli.check("two", 2, 2)]),
        ("beta", lambda: [cli.check("one", True, False)]),
    ]
    monkeypatch.setattr(cli, "ACCEPTANCE", fake)
    code, report = run(capsys, "report")
    assert code == 1
    names = [c["name"] for c in report["checks"]]
    assert names == ["01 alpha: one", "01 alpha: two", "02 beta: one"]
    assert report["status"] == "fail"


def test_report_plumbing_threaded(monkeypatch, capsys):
    fake = [
        ("alpha", lambda: [cli.check("one", 1, 1)]),
        ("beta", lambda: [cli.check("two", 2, 2)]),
    ]
    monkeypatch.setattr(cli, "ACCEPTANCE", fake)
    monkeypatch.setenv("WEYL_ISING_THREADS", "3")
    code, report = run(capsys, "report")
    assert code == 0
    assert [c["name"] for c in report["checks"]] \
        == ["01 alpha: one", "02 beta: two"]


def test_render_values():
    from fractions import Fraction as Q
    assert cli._render(Q(16, 11)) == {"exact": "16/11",
                                      "approx": 16 / 11}
    assert cli._render(7) == {"exact": "7", "approx": 7.0}
    assert cli._render(True) is True
    assert cli._render(None) is None
    assert cli._render([1, "x"]) == [{"exact": "1", "approx": 1.0}, "x"]
