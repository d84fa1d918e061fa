"""
Report storage

Status and manifest files for a campaign output directory, plus plain JSON
and JSON-lines writers for reports and suite rows.
"""

import json
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, Union

PathLike = Union[str, Path]


def _read_json(path: Path, default: Dict[str, Any]) -> Dict[str, Any]:
    if path.exists():
        with open(path, "r") as f:
            return json.load(f)
    return default


def update_status(output_dir: PathLike, status_data: Dict[str, Any]) -> Path:
    """
    Merge status_data into <output_dir>/status.json.

    Args:
        output_dir: Campaign output directory
        status_data: Fields to update (command, progress, verdict, message, ...)

    Returns:
        Path of the status file
    """
    Path(output_dir).mkdir(parents=True, exist_ok=True)
    status_path = Path(output_dir) / "status.json"

    existing = _read_json(status_path, {})
    existing.update(status_data)
    existing["updated_at"] = datetime.now().isoformat()

    with open(status_path, "w") as f:
        json.dump(existing, f, indent=2)
    return status_path


def save_report_to_manifest(output_dir: PathLike, report_entry: Dict[str, Any]) -> Path:
    """Append a report entry to manifest.json and mirror the list into status.json."""
    Path(output_dir).mkdir(parents=True, exist_ok=True)
    manifest_path = Path(output_dir) / "manifest.json"

    manifest = _read_json(manifest_path, {"reports": [], "created_at": datetime.now().isoformat()})
    manifest["reports"].append(report_entry)
    manifest["updated_at"] = datetime.now().isoformat()

    with open(manifest_path, "w") as f:
        json.dump(manifest, f, indent=2)

    # mirror the report list into status.json
    status_path = Path(output_dir) / "status.json"
    if status_path.exists():
        status = _read_json(status_path, {})
        status["reports"] = manifest["reports"]
        with open(status_path, "w") as f:
            json.dump(status, f, indent=2)
    return manifest_path


def dumps(data: Any) -> str:
    """Canonical JSON text: sorted keys, so identical runs give identical bytes."""
    return json.dumps(data, indent=2, sort_keys=True)


def dumps_line(data: Any) -> str:
    return json.dumps(data, sort_keys=True)


def write_json(path: PathLike, data: Any) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write(dumps(data) + "\n")
    return path


def write_jsonl(path: PathLike, rows: Iterable[Dict[str, Any]]) -> Path:
    """One JSON object per line."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        for row in rows:
            f.write(dumps_line(row) + "\n")
    return path


def write_text(path: PathLike, text: str) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        f.write(text)
    return path
