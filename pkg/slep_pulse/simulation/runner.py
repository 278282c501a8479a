"""Full simulation runs: initial data, time loop, contour recording, labels."""

from __future__ import annotations

import logging

import numpy as np

from slep_pulse.domain.entities import SimTrajectory
from slep_pulse.domain.enums import DynamicsLabel, InitialCondition, PerturbationMode
from slep_pulse.domain.exceptions import ConfigError, IndeterminateDynamics, NoCrossing
from slep_pulse.pulse.layer import solve_layer_position
from slep_pulse.pulse.profiles import build_pulse

from .classify import classify_dynamics
from .contour import extract_zero_contour
from .settings import SimConfig
from .snapshots import SnapshotWriter
from .stepper import ImexStepper, SimState

logger = logging.getLogger(__name__)

BOUNDARY_MARGIN = 1.0
WINDOW_FRACTION = 0.5


def simulation_grid(config: SimConfig) -> np.ndarray:
    L = config.half_width
    return np.linspace(-L, L, config.n_points)


def load_profile_csv(path, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(u, v, w) from a profile CSV with columns x,u,v,w, interpolated onto x."""
    try:
        data = np.loadtxt(path, delimiter=",", comments="#", ndmin=2)
    except (OSError, ValueError) as exc:
        raise ConfigError(f"Cannot read initial profile '{path}': {exc}") from exc
    if data.shape[1] < 4:
        raise ConfigError(f"Initial profile '{path}' needs columns x,u,v,w")
    order = np.argsort(data[:, 0])
    data = data[order]
    return tuple(np.interp(x, data[:, 0], data[:, k]) for k in (1, 2, 3))


def perturbation(
    x: np.ndarray,
    v: np.ndarray,
    amplitude: float,
    mode: PerturbationMode,
    rng: np.random.Generator,
) -> np.ndarray:
    """Kick on v: translation-like (v') or dilation-like (x v'), random sign."""
    slope = np.gradient(v, x)
    shape = slope if mode is PerturbationMode.ANTISYMMETRIC else x * slope
    peak = float(np.max(np.abs(shape)))
    if peak == 0.0:
        return np.zeros_like(v)
    sign = 1.0 if rng.random() < 0.5 else -1.0
    return sign * amplitude * shape / peak


def initial_state(config: SimConfig, seed: int = 0) -> SimState:
    x = simulation_grid(config)
    if config.initial is InitialCondition.FILE:
        if config.initial_file is None:
            raise ConfigError("initial condition 'file' needs simulation.initial_file")
        u, v, w = load_profile_csv(config.initial_file, x)
    else:
        u, v, w = build_pulse(config.params).evaluate(x)
        if config.initial is InitialCondition.PERTURBED:
            rng = np.random.default_rng(seed)
            v = v + perturbation(x, v, config.perturbation_amplitude, config.perturbation_mode, rng)
    return SimState(0.0, np.array(u, dtype=float), np.array(v, dtype=float), np.array(w, dtype=float))


def _near_boundary(crossings: np.ndarray, half_width: float) -> bool:
    return crossings[0] < -half_width + BOUNDARY_MARGIN or crossings[-1] > half_width - BOUNDARY_MARGIN


def run(config: SimConfig, seed: int = 0, state: SimState | None = None) -> SimTrajectory:
    """Integrate to t_end and classify the final half of the recorded window.

    Recording stops early when the contour comes within 1.0 of a wall; a
    vanished contour labels the run ``collapsed``.

    Raises:
        BlowUp: propagated from the stepper with the failing time.
    """
    x_star = solve_layer_position(config.params)
    if config.half_width <= 2.0 * x_star:
        raise ConfigError(f"half_width={config.half_width} must exceed 2 x*={2.0 * x_star:.6g}")

    x = simulation_grid(config)
    stepper = ImexStepper(config)
    state = state or initial_state(config, seed)
    writer = (
        SnapshotWriter(config.snapshots, x.size, config.dx, config.half_width)
        if config.snapshots is not None
        else None
    )

    times: list[float] = []
    lows: list[float] = []
    highs: list[float] = []
    label: DynamicsLabel | None = None
    note = ""
    try:
        for n in range(config.n_steps + 1):
            if n > 0:
                state = stepper.step(state)
            if n % config.record_every:
                continue
            try:
                crossings = extract_zero_contour(x, state.u)
            except NoCrossing:
                logger.info("contour vanished at t=%.6g", state.t)
                label, note = DynamicsLabel.COLLAPSED, f"collapsed at t={state.t:.6g}"
                break
            if _near_boundary(crossings, config.half_width):
                note = f"contour reached the boundary margin at t={state.t:.6g}"
                logger.info("%s", note)
                break
            times.append(state.t)
            lows.append(float(crossings[0]))
            highs.append(float(crossings[-1]))
            if writer is not None:
                writer.write(state.t, state.u, state.v, state.w)
    finally:
        if writer is not None:
            writer.close()

    trajectory = SimTrajectory(np.array(times), np.array(lows), np.array(highs))
    if note:
        trajectory.diagnostics["note"] = note
    if label is not None:
        trajectory.label = label
        return trajectory

    start = int(len(times) * (1.0 - WINDOW_FRACTION))
    window = slice(start, None)
    try:
        label, diagnostics = classify_dynamics(
            trajectory.times[window],
            trajectory.center[window],
            trajectory.width[window],
            config.dx,
        )
        trajectory.diagnostics.update(diagnostics)
        trajectory.label = label
    except IndeterminateDynamics as exc:
        logger.warning("classification indeterminate: %s", exc)
        trajectory.diagnostics["reason"] = str(exc)
        trajectory.label = DynamicsLabel.INDETERMINATE
    logger.info("simulation finished at t=%.6g: %s", state.t, trajectory.label.value)
    return trajectory
