import json

import pytest

from permspec import cli
from permspec.spectra import MatrixKind, make_spec
from permspec.stats import Z, registry_for


def _run(capsys, *argv):
    code = cli.run([*argv, "--quiet"])
    return code, capsys.readouterr()


def test_certify_f4(capsys):
    code, out = _run(capsys, "certify", "--kind", "F", "--n", "4", "--seeds", "1,2,3")
    assert code == 0
    report = json.loads(out.out)
    assert report["verdict"] == "PASS"
    assert [e["kernel_dims"] for e in report["eigen"]] == [[1, 1, 1], [9, 9, 9], [14, 14, 14]]


def test_certify_if3_golden(capsys):
    code, out = _run(capsys, "certify", "--kind", "if", "--n", "3", "--seeds", "7")
    assert code == 0
    assert json.loads(out.out)["provenance"] == "small-case table"


def test_lemmas_fixsq(capsys):
    code, out = _run(capsys, "lemmas", "--n", "4", "--suite", "fixsq")
    assert code == 0
    rows = [json.loads(line) for line in out.out.splitlines()]
    assert rows[0]["brute_force"] == 48
    assert rows[1]["tag"] == "FIX_SQUARES_REMARK"


def test_specht_n4(capsys):
    code, out = _run(capsys, "specht", "--n", "4", "--seeds", "1", "--symbolic")
    assert code == 0
    report = json.loads(out.out)
    assert report["minimal_polynomial"]["verdict"] == "PASS"


def test_characters_n4(capsys):
    code, out = _run(capsys, "characters", "--n", "4")
    assert code == 0
    data = json.loads(out.out)
    assert data["dichotomy"]["nonzero"] == ["4", "3+1"]
    assert data["maschke"]["verdict"] == "PASS"


def test_characters_csv(capsys):
    code, out = _run(capsys, "characters", "--n", "3", "--format", "csv")
    assert code == 0
    assert out.out.splitlines()[0] == ",3,2+1,1+1+1"


def test_errata(capsys):
    code, out = _run(capsys, "errata", "--nmax", "4")
    assert code == 0
    assert json.loads(out.out)["unexpected"] == []


def test_properties(capsys):
    code, out = _run(capsys, "properties")
    assert code == 0
    assert all(r["verdict"] == "PASS" for r in json.loads(out.out))


def test_matrix_dump(capsys, tmp_path):
    target = tmp_path / "f3.csv"
    code, out = _run(capsys, "matrix", "--kind", "F", "--n", "3", "--dump", str(target))
    assert code == 0
    summary = json.loads(out.out)
    assert (summary["rows"], summary["cols"]) == (6, 6)
    assert len(target.read_text().splitlines()) == 7


def test_matrix_csv_to_stdout(capsys):
    code, out = _run(capsys, "matrix", "--kind", "SPECHT_IF", "--n", "4", "--format", "csv")
    assert code == 0
    assert out.out.splitlines()[0] == ",v2,v3,v4"


def test_text_format(capsys):
    code, out = _run(capsys, "certify", "--kind", "F", "--n", "4", "--seeds", "1", "--format", "text")
    assert code == 0
    assert out.out == "certify n=4 kind=F: PASS\n"


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["certify", "--kind", "Q", "--n", "4"],
    ["certify", "--kind", "F"],
    ["certify", "--kind", "F", "--n", "4", "--seeds", "a,b"],
    ["certify", "--kind", "F", "--n", "4", "--seeds", "-1"],
    ["certify", "--kind", "F", "--n", "3"],
    ["lemmas", "--n", "4", "--suite", "nope"],
    ["certify", "--kind", "F", "--n", "4", "--seeds", "1", "--format", "csv"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _ = _run(capsys, *argv)
    assert code == 2


def test_resource_cap_exits_3(capsys):
    code, out = _run(capsys, "lemmas", "--n", "6", "--suite", "recurrence")
    assert code == 3
    assert "limited to n <= 5" in out.err


def test_failed_verification_exits_1(capsys, monkeypatch):
    registry = registry_for(4)
    z = registry.gen(Z)
    wrong = make_spec(MatrixKind.F, 4, [(z * 24, 1), (z * 8, 8), (registry.zero, 15)], "test", registry, 24)
    monkeypatch.setattr(cli, "predicted_spectrum", lambda kind, n: wrong)
    code, out = _run(capsys, "certify", "--kind", "F", "--n", "4", "--seeds", "1")
    assert code == 1
    assert json.loads(out.out)["verdict"] == "FAIL"


def test_failed_verification_in_text_format_keeps_the_report(capsys, monkeypatch):
    registry = registry_for(4)
    z = registry.gen(Z)
    wrong = make_spec(MatrixKind.F, 4, [(z * 24, 1), (z * 8, 8), (registry.zero, 15)], "test", registry, 24)
    monkeypatch.setattr(cli, "predicted_spectrum", lambda kind, n: wrong)
    code, out = _run(capsys, "certify", "--kind", "F", "--n", "4", "--seeds", "1", "--format", "text")
    assert code == 1
    first, rest = out.out.split("\n", 1)
    assert first == "certify n=4 kind=F: FAIL"
    assert json.loads(rest)["verdict"] == "FAIL"


def test_no_timing_output_is_reproducible(capsys):
    argv = ["certify", "--kind", "DIF", "--n", "4", "--seeds", "1,2", "--no-timing"]
    first = _run(capsys, *argv)
    second = _run(capsys, *argv)
    assert first[0] == second[0] == 0
    assert first[1].out == second[1].out
    assert "elapsed_ms" not in first[1].out


def test_output_directory(capsys, tmp_path):
    code, _ = _run(capsys, "lemmas", "--n", "4", "--suite", "leg", "--output", str(tmp_path))
    assert code == 0
    status = json.loads((tmp_path / "status.json").read_text())
    assert status["status"] == "complete"
    assert status["verdict"] == "PASS"
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["reports"][0]["path"] == "lemmas_n4.json"
    assert (tmp_path / "lemmas_n4.jsonl").exists()


def test_progress_goes_to_stderr(capsys):
    code = cli.run(["lemmas", "--n", "4", "--suite", "leg"])
    out = capsys.readouterr()
    assert code == 0
    assert "[1/1] leg..." in out.err
    assert "[1/1]" not in out.out
