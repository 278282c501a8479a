"""Flat binary field snapshots with a text sidecar.

Layout: int64 n_grid, float64 dx, float64 L, int64 component count, then
row-major float64 frames of shape (components, n_grid).
"""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

logger = logging.getLogger(__name__)

HEADER = np.dtype([("n_grid", "<i8"), ("dx", "<f8"), ("L", "<f8"), ("components", "<i8")])


class SnapshotWriter:
    def __init__(self, path: Path, n_grid: int, dx: float, half_width: float, components: int = 3) -> None:
        self.path = Path(path)
        self.times: list[float] = []
        self._shape = (components, n_grid)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._handle = self.path.open("wb")
        header = np.array([(n_grid, dx, half_width, components)], dtype=HEADER)
        self._handle.write(header.tobytes())

    def write(self, t: float, *fields: np.ndarray) -> None:
        frame = np.ascontiguousarray(np.stack(fields), dtype="<f8")
        if frame.shape != self._shape:
            raise ValueError(f"frame shape {frame.shape} does not match {self._shape}")
        self._handle.write(frame.tobytes())
        self.times.append(t)

    @property
    def sidecar(self) -> Path:
        return self.path.with_suffix(self.path.suffix + ".txt")

    def close(self) -> None:
        self._handle.close()
        n_comp, n_grid = self._shape
        lines = [
            f"file = {self.path.name}",
            "layout = int64 n_grid, float64 dx, float64 L, int64 components; float64 frames",
            "components = " + " ".join(("u", "v", "w")[:n_comp]),
            f"n_grid = {n_grid}",
            f"frames = {len(self.times)}",
            "times = " + " ".join(f"{t:.17g}" for t in self.times),
        ]
        self.sidecar.write_text("\n".join(lines) + "\n", encoding="utf-8")
        logger.info("wrote %d snapshot frames to %s", len(self.times), self.path)

    def __enter__(self) -> SnapshotWriter:
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def read_snapshots(path: Path) -> tuple[dict[str, float], np.ndarray]:
    """Header fields and frames of shape (frames, components, n_grid)."""
    raw = Path(path).read_bytes()
    header = np.frombuffer(raw[: HEADER.itemsize], dtype=HEADER)[0]
    n_grid, components = int(header["n_grid"]), int(header["components"])
    frames = np.frombuffer(raw[HEADER.itemsize :], dtype="<f8").reshape(-1, components, n_grid)
    meta = {"n_grid": n_grid, "dx": float(header["dx"]), "L": float(header["L"]), "components": components}
    return meta, frames
