"""The consistency battery and the command-line surface."""

import json

import pytest

from hodgetriples import cli
from hodgetriples.polyring import BiLaurent
from hodgetriples.verify import check_ids, run_suite, summary_table


def test_fast_suite_all_pass():
    reports = run_suite("fast", g_range=(2,), span=2)
    assert reports
    assert all(r.status == "pass" for r in reports)
    table = summary_table(reports)
    assert "kirwan-g2" in table


def test_single_check_selection():
    reports = run_suite("kirwan-g2", g_range=(2,), span=2)
    assert [r.check_id for r in reports] == ["kirwan-g2"]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("no-such-suite")
    assert "telescoping" in check_ids()


def test_report_json_shape():
    report = run_suite("kirwan-g2", g_range=(2,), span=2)[0]
    obj = report.to_json_obj()
    assert obj["check"] == "kirwan-g2"
    assert obj["status"] == "pass"
    json.dumps(obj)  # must be serializable as-is


def test_cli_compute_text(capsys):
    code = cli.main(["compute", "--space", "m2-even-polystable", "--g", "2",
                     "--d", "0", "--poincare"])
    out = capsys.readouterr().out
    assert code == 0
    assert "t^10" in out


def test_cli_compute_json_round_trip(capsys):
    code = cli.main(["compute", "--space", "m2-odd", "--g", "2",
                     "--d", "1", "--format", "json"])
    assert code == 0
    poly = BiLaurent.from_json(capsys.readouterr().out)
    assert poly.constant_term() == 1
    assert poly.coefficient(1, 0) == 2
    assert poly == poly.reciprocal_dual(5)


def test_cli_compute_latex(capsys):
    code = cli.main(["compute", "--space", "t21", "--g", "2", "--d1", "5",
                     "--d2", "0", "--sigma", "5", "--format", "latex"])
    assert code == 0
    assert "u^{" in capsys.readouterr().out


def test_cli_sigma_shorthands(capsys):
    code = cli.main(["compute", "--space", "t22-at", "--g", "2", "--d1", "6",
                     "--d2", "1", "--sigma", "sm+"])
    assert code == 0
    first_chamber = capsys.readouterr().out
    code = cli.main(["compute", "--space", "t22-small", "--g", "2",
                     "--d1", "6", "--d2", "1"])
    assert code == 0
    assert capsys.readouterr().out == first_chamber


def test_cli_critical(capsys):
    code = cli.main(["critical", "--rank", "2,2", "--g", "2",
                     "--d1", "6", "--d2", "1"])
    out = capsys.readouterr().out
    assert code == 0
    assert "7/2" in out and "9/2" in out


def test_cli_flips(capsys):
    code = cli.main(["flips", "--g", "2", "--d1", "6", "--d2", "1",
                     "--wall", "1"])
    assert code == 0
    assert capsys.readouterr().out.strip()


def test_cli_verify_exit_code(capsys):
    code = cli.main(["verify", "--suite", "kirwan-g2", "--g-range", "2..2"])
    captured = capsys.readouterr()
    assert code == 0
    line = json.loads(captured.out.strip().splitlines()[0])
    assert line["status"] == "pass"
    assert "pass" in captured.err


def test_cli_domain_errors_exit_1(capsys):
    # strictly semistable points at non-critical sigma: not computable
    assert cli.main(["compute", "--space", "t22-small", "--g", "2",
                     "--d1", "8", "--d2", "0"]) == 1
    # sigma at a critical value
    assert cli.main(["compute", "--space", "t21", "--g", "2", "--d1", "5",
                     "--d2", "0", "--sigma", "7"]) == 1
    # unknown suite name
    assert cli.main(["verify", "--suite", "bogus"]) == 1
    capsys.readouterr()


def test_cli_bad_usage_exit_1(capsys):
    assert cli.main(["compute", "--space", "m2-odd"]) == 1  # missing --g
    assert cli.main(["--no-such-flag"]) == 1
    capsys.readouterr()
