"""Qualitative labels for a recorded contour window."""

from __future__ import annotations

import logging

import numpy as np

from slep_pulse.domain.enums import DynamicsLabel
from slep_pulse.domain.exceptions import IndeterminateDynamics

logger = logging.getLogger(__name__)

MIN_FRAMES = 100
MIN_PERIODS = 3
DRIFT_FACTOR = 10.0
BREATHE_FACTOR = 20.0


def _detrended(times: np.ndarray, values: np.ndarray) -> np.ndarray:
    slope, intercept = np.polyfit(times, values, 1)
    return values - (slope * times + intercept)


def oscillation_periods(signal: np.ndarray) -> float:
    """Half the number of sign changes of a zero-mean signal."""
    centered = signal - np.mean(signal)
    signs = np.signbit(centered)
    return 0.5 * int(np.count_nonzero(signs[1:] != signs[:-1]))


def classify_dynamics(
    times: np.ndarray,
    center: np.ndarray,
    width: np.ndarray,
    dx: float,
    v_min: float | None = None,
    a_min: float | None = None,
) -> tuple[DynamicsLabel, dict[str, float]]:
    """Label a window from the drift of its center and the oscillation of its width.

    Raises:
        IndeterminateDynamics: too few frames, or an oscillation above the
            amplitude threshold with fewer than three periods.
    """
    times = np.asarray(times, dtype=float)
    if times.size < MIN_FRAMES:
        raise IndeterminateDynamics(f"{times.size} frames in the window, need {MIN_FRAMES}")
    span = float(times[-1] - times[0])
    v_min = DRIFT_FACTOR * dx / span if v_min is None else v_min
    a_min = BREATHE_FACTOR * dx if a_min is None else a_min

    velocity = float(np.polyfit(times, np.asarray(center, dtype=float), 1)[0])
    wobble = _detrended(times, np.asarray(width, dtype=float))
    amplitude = float(np.ptp(wobble))
    periods = oscillation_periods(wobble)
    diagnostics = {
        "velocity": velocity,
        "v_min": v_min,
        "amplitude": amplitude,
        "a_min": a_min,
        "periods": periods,
    }

    drift = abs(velocity) > v_min
    breathe = False
    if amplitude > a_min:
        if periods < MIN_PERIODS:
            raise IndeterminateDynamics(
                f"width oscillation of {amplitude:.3g} shows only {periods:g} periods in the window"
            )
        breathe = True
    label = DynamicsLabel.from_flags(drift, breathe)
    logger.debug("dynamics %s: %s", label.value, diagnostics)
    return label, diagnostics
