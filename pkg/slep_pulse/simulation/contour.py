"""Zero contour of the activator."""

from __future__ import annotations

import numpy as np

from slep_pulse.domain.exceptions import NoCrossing


def extract_zero_contour(x: np.ndarray, u: np.ndarray) -> np.ndarray:
    """All sign-change abscissae of u, linearly interpolated between nodes.

    Raises:
        NoCrossing: u has no sign change.
    """
    x = np.asarray(x, dtype=float)
    u = np.asarray(u, dtype=float)
    left, right = u[:-1], u[1:]
    cells = np.nonzero((left * right < 0) | ((left == 0) & (right != 0)))[0]
    if cells.size == 0:
        raise NoCrossing("u has no zero crossing; the pulse collapsed to the background")
    ul, ur = u[cells], u[cells + 1]
    return x[cells] - ul * (x[cells + 1] - x[cells]) / (ur - ul)
