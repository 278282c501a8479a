"""Run manifests: resolved config, version, timing and file digests."""

from __future__ import annotations

import hashlib
import logging
from pathlib import Path
from typing import Any

import yaml

from slep_pulse import __version__
from slep_pulse.domain.entities import OutputFile, RunManifest

logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.yml"


def sha256_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def build_manifest(
    command: str,
    config: dict[str, Any],
    files: list[Path],
    out_dir: Path,
    wall_clock: float,
) -> RunManifest:
    entries = [
        OutputFile(str(Path(f).relative_to(out_dir)), sha256_file(f), Path(f).stat().st_size)
        for f in files
    ]
    return RunManifest(command, config, __version__, wall_clock, entries)


def write_manifest(manifest: RunManifest, out_dir: str | Path) -> Path:
    path = Path(out_dir) / MANIFEST_NAME
    data = {
        "command": manifest.command,
        "version": manifest.version,
        "wall_clock": manifest.wall_clock,
        "config": manifest.config,
        "files": [{"path": f.path, "sha256": f.sha256, "size": f.size} for f in manifest.files],
    }
    path.write_text(yaml.safe_dump(data, sort_keys=False), encoding="utf-8")
    logger.info("manifest with %d file(s) written to %s", len(manifest.files), path)
    return path


def verify_manifest(out_dir: str | Path) -> list[str]:
    """Problems found when recomputing the digests; empty when intact."""
    out_dir = Path(out_dir)
    manifest_path = out_dir / MANIFEST_NAME
    if not manifest_path.is_file():
        return [f"missing {MANIFEST_NAME}"]
    data = yaml.safe_load(manifest_path.read_text(encoding="utf-8")) or {}
    problems = []
    for entry in data.get("files", []):
        target = out_dir / entry["path"]
        if not target.is_file():
            problems.append(f"missing {entry['path']}")
        elif sha256_file(target) != entry["sha256"]:
            problems.append(f"digest mismatch for {entry['path']}")
    return problems
