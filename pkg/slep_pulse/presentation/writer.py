"""CSV and text output for one run directory."""

from __future__ import annotations

import logging
import threading
from collections.abc import Iterable, Sequence
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)


def format_float(value: float) -> str:
    return "%.17g" % value


def _format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (int, float)):
        return format_float(float(value))
    return str(value)


class ResultWriter:
    """Writes files under ``out_dir`` and remembers them for the manifest.

    A lock serializes writes so that thread-pool jobs of one run can share
    the writer.
    """

    def __init__(self, out_dir: str | Path) -> None:
        self.out_dir = Path(out_dir)
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self.files: list[Path] = []
        self._lock = threading.Lock()

    def path(self, name: str) -> Path:
        return self.out_dir / name

    def _register(self, path: Path) -> Path:
        if path not in self.files:
            self.files.append(path)
        return path

    def write_csv(
        self,
        name: str,
        columns: Sequence[str],
        rows: Iterable[Sequence[Any]],
        header: dict[str, Any] | None = None,
    ) -> Path:
        """'#'-prefixed header lines, a column line, then 17-digit rows."""
        lines = [f"# {key} = {_format_cell(value)}" for key, value in (header or {}).items()]
        lines.append(",".join(columns))
        for row in rows:
            lines.append(",".join(_format_cell(v) for v in row))
        return self.write_text(name, "\n".join(lines) + "\n")

    def write_text(self, name: str, text: str) -> Path:
        path = self.path(name)
        with self._lock:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            self._register(path)
        logger.debug("wrote %s", path)
        return path

    def register(self, path: str | Path) -> Path:
        """Track a file produced elsewhere (e.g. binary snapshots)."""
        with self._lock:
            return self._register(Path(path))
