import json

from permspec.storage import dumps, save_report_to_manifest, update_status, write_json, write_jsonl


def test_update_status_merges(tmp_path):
    update_status(tmp_path, {"status": "running", "command": "certify"})
    update_status(tmp_path, {"status": "complete"})
    status = json.loads((tmp_path / "status.json").read_text())
    assert status["status"] == "complete"
    assert status["command"] == "certify"
    assert "updated_at" in status


def test_manifest_appends_and_mirrors_into_status(tmp_path):
    update_status(tmp_path, {"status": "running"})
    save_report_to_manifest(tmp_path, {"command": "certify", "verdict": "PASS"})
    save_report_to_manifest(tmp_path, {"command": "lemmas", "verdict": "FAIL"})
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert [r["command"] for r in manifest["reports"]] == ["certify", "lemmas"]
    status = json.loads((tmp_path / "status.json").read_text())
    assert status["reports"] == manifest["reports"]


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})


def test_writers_create_parent_directories(tmp_path):
    path = write_json(tmp_path / "nested" / "report.json", {"verdict": "PASS"})
    assert json.loads(path.read_text()) == {"verdict": "PASS"}
    rows = write_jsonl(tmp_path / "rows.jsonl", [{"a": 1}, {"a": 2}])
    assert [json.loads(line) for line in rows.read_text().splitlines()] == [{"a": 1}, {"a": 2}]
