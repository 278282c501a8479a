"""Subcommand implementations: compute, write CSV + gnuplot scripts, return a summary."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from pathlib import Path
from typing import Any, TypeVar

import numpy as np

from slep_pulse.bifurcation import (
    classify_region,
    codim2_points,
    default_psi_grid,
    drift_line,
    hopf_curve,
    trace_eigen_path,
)
from slep_pulse.config import AppConfig, model_params, time_scale_regime
from slep_pulse.domain.enums import InitialCondition, PerturbationMode, RegionLabel, SimClock
from slep_pulse.domain.exceptions import ConfigError, SlepPulseException
from slep_pulse.domain.value_objects import ModelParams, TimeScaleRegime
from slep_pulse.presentation import GnuplotScripts, ResultWriter
from slep_pulse.pulse import build_pulse, default_grid
from slep_pulse.simulation import SimConfig, run
from slep_pulse.slep import SlepContext
from slep_pulse.spectrum import (
    discrete_linearization_eigs,
    dispersion_samples,
    essential_bound,
    o1_critical_eigenvalue,
    xi_grid,
)

logger = logging.getLogger(__name__)

E = TypeVar("E", bound=Enum)

_REGION_CODES = {label: code for code, label in enumerate(RegionLabel)}
_scripts = GnuplotScripts()


def _enum(cls: type[E], value: str, key: str) -> E:
    try:
        return cls(value.strip().lower())
    except ValueError:
        allowed = ", ".join(member.value for member in cls)
        raise ConfigError(f"Invalid value for '{key}': {value!r} (expected one of {allowed})") from None


def _param_header(p: ModelParams) -> dict[str, Any]:
    return dict(p.as_dict())


def _map(func, items: list, threads: int) -> list:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(func, items))
    return [func(item) for item in items]


def cmd_pulse(config: AppConfig, writer: ResultWriter) -> dict[str, Any]:
    p = model_params(config)
    grid = default_grid(p, config.pulse.half_width, config.pulse.points)
    pulse = build_pulse(p, grid)
    x, u, v, w = pulse.sampled()
    layer = pulse.layer
    header = _param_header(p) | {"x_star": layer.x_star, "s": layer.s, "a0": layer.a0}
    writer.write_csv("pulse.csv", ("x", "u", "v", "w"), zip(x, u, v, w), header)
    writer.write_text("pulse.gp", _scripts.pulse("pulse.csv", layer.x_star))
    return {"x_star": layer.x_star, "points": int(x.size)}


def _region_grid(config: AppConfig) -> list[tuple[float, float]]:
    n = config.diagram.region_grid
    taus = np.linspace(config.diagram.tau_max / n, config.diagram.tau_max, n)
    thetas = np.linspace(config.diagram.theta_max / n, config.diagram.theta_max, n)
    return [(float(t), float(th)) for t in taus for th in thetas]


def cmd_diagram(config: AppConfig, writer: ResultWriter) -> dict[str, Any]:
    if config.diagram.psi_count < 1:
        raise ConfigError("diagram.psi_count must be at least 1")
    p = model_params(config)
    ctx = SlepContext.from_params(p)
    threads = config.run.threads
    grid = default_psi_grid(config.diagram.psi_count, config.diagram.psi_margin)

    line = drift_line(ctx)
    curve = hopf_curve(grid, ctx, threads=threads, skip_failures=True)
    points = codim2_points(ctx, grid, threads=threads, curve=curve)
    header = _param_header(p) | {"x_star": ctx.x_star, "C1": line.C1, "C2": line.C2}

    writer.write_csv("drift_line.csv", ("tau_hat", "theta_hat"), line.sample(), header)
    hopf_header = header | {"failures": len(curve.failures)}
    for psi, reason in curve.failures:
        hopf_header[f"failed_psi_{psi:.10g}"] = reason
    writer.write_csv(
        "hopf_curve.csv",
        ("psi", "eta_star", "xi_star", "s_star", "tau_hat", "theta_hat", "transversality"),
        (
            (h.psi, h.eta_star, h.xi_star, h.s_star, h.tau_hat, h.theta_hat, h.transversality)
            for h in curve.points
        ),
        hopf_header,
    )
    writer.write_csv(
        "codim2.csv",
        ("psi", "tau_hat", "theta_hat", "xi_star", "line_residual", "hopf_residual"),
        ((c.psi, c.tau_hat, c.theta_hat, c.xi_star, c.line_residual, c.hopf_residual) for c in points),
        header,
    )

    regions_name = None
    if config.diagram.region_grid > 0:

        def classify(point: tuple[float, float]) -> tuple[float, float, int, str]:
            try:
                result = classify_region(point[0], point[1], ctx)
            except SlepPulseException as exc:
                logger.warning("region classification failed at (%g, %g): %s", point[0], point[1], exc)
                return point[0], point[1], -1, "error"
            return point[0], point[1], _REGION_CODES[result.label], result.label.value

        regions_name = "regions.csv"
        rows = _map(classify, _region_grid(config), threads)
        writer.write_csv(regions_name, ("tau_hat", "theta_hat", "code", "label"), rows, header)

    writer.write_text(
        "diagram.gp", _scripts.diagram("drift_line.csv", "hopf_curve.csv", "codim2.csv", regions_name)
    )
    return {
        "x_star": ctx.x_star,
        "C1": line.C1,
        "C2": line.C2,
        "hopf_points": len(curve.points),
        "hopf_failures": len(curve.failures),
        "codim2": [(c.tau_hat, c.theta_hat) for c in points],
    }


def cmd_trace(config: AppConfig, writer: ResultWriter) -> dict[str, Any]:
    p = model_params(config)
    ctx = SlepContext.from_params(p)
    t = config.trace
    s_range = (t.s_min, t.s_max) if t.s_min is not None and t.s_max is not None else None
    path = trace_eigen_path(t.psi, ctx, s_range=s_range, n_samples=t.samples)
    lm = path.landmarks
    header = _param_header(p) | {
        "psi": path.psi,
        "s_c": lm.s_c,
        "s_under": lm.s_under,
        "s_star": path.s_star,
        "s_over": lm.s_over,
        "lambda_under": lm.lambda_under,
        "lambda_over": lm.lambda_over,
        "c_minus": path.c_minus,
        "c_plus": path.c_plus,
    }
    writer.write_csv(
        "eigen_path.csv",
        ("s", "re_lambda", "im_lambda", "im_conjugate", "kind"),
        ((q.s, q.lam.real, q.lam.imag, -q.lam.imag, q.kind.value) for q in path.samples),
        header,
    )
    writer.write_text("trace.gp", _scripts.trace("eigen_path.csv"))
    return {
        "psi": path.psi,
        "s_under": lm.s_under,
        "s_star": path.s_star,
        "s_over": lm.s_over,
        "samples": len(path.samples),
    }


def simulation_config(
    config: AppConfig,
    params: ModelParams,
    regime: TimeScaleRegime,
    snapshots: Path | None = None,
) -> SimConfig:
    s = config.simulation
    return SimConfig(
        params=params,
        regime=regime,
        half_width=s.half_width,
        dx=s.dx,
        dt=s.dt,
        t_end=s.t_end,
        clock=_enum(SimClock, s.clock, "simulation.clock") if s.clock else None,
        record_every=s.record_every,
        initial=_enum(InitialCondition, s.initial, "simulation.initial"),
        perturbation_amplitude=s.perturbation_amplitude,
        perturbation_mode=_enum(PerturbationMode, s.perturbation_mode, "simulation.perturbation_mode"),
        initial_file=Path(s.initial_file) if s.initial_file else None,
        snapshots=snapshots,
    )


def cmd_simulate(config: AppConfig, writer: ResultWriter) -> dict[str, Any]:
    p = model_params(config)
    regime = time_scale_regime(config)
    snapshots = writer.path("snapshots.bin") if config.simulation.snapshots else None
    sim = simulation_config(config, p, regime, snapshots)
    trajectory = run(sim, seed=config.run.seed)

    header = _param_header(p) | {
        "regime": regime.kind.value,
        "tau": regime.tau,
        "theta": regime.theta,
        "dx": sim.dx,
        "clock": sim.clock.value,
        "dt": sim.dt,
        "t_end": sim.t_end,
        "seed": config.run.seed,
        "label": trajectory.label.value,
    }
    header |= {key: value for key, value in sorted(trajectory.diagnostics.items())}
    writer.write_csv(
        "trajectory.csv",
        ("t", "x_minus", "x_plus", "center", "width"),
        zip(trajectory.times, trajectory.x_minus, trajectory.x_plus, trajectory.center, trajectory.width),
        header,
    )
    title = f"({regime.tau:g}, {regime.theta:g}): {trajectory.label.value}"
    writer.write_text("contour.gp", _scripts.simulate("trajectory.csv", title))
    if snapshots is not None:
        writer.register(snapshots)
        writer.register(snapshots.with_suffix(snapshots.suffix + ".txt"))
    return {"label": trajectory.label.value, "frames": int(trajectory.times.size)}


def cmd_spectrum(config: AppConfig, writer: ResultWriter) -> dict[str, Any]:
    p = model_params(config)
    regime = time_scale_regime(config)
    ctx = SlepContext.from_params(p)
    sp = config.spectrum
    threads = config.run.threads

    bound = essential_bound(p, regime, sp.xi_max, sp.samples, threads)
    even, odd = o1_critical_eigenvalue(ctx)
    header = _param_header(p) | {
        "regime": regime.kind.value,
        "tau": regime.tau,
        "theta": regime.theta,
        "essential_bound": bound.bound,
        "argmax_xi": bound.argmax_xi,
        "o1_even_scaled": even,
        "o1_odd_scaled": odd,
    }
    if bound.scaled_bound is not None:
        header["scaled_bound"] = bound.scaled_bound

    samples = dispersion_samples(p, regime, xi_grid(sp.xi_max, sp.samples, sp.full_xi), threads)
    writer.write_csv(
        "dispersion.csv",
        ("xi", "re1", "re2", "re3", "im1", "im2", "im3"),
        ([d.xi, *(r.real for r in d.roots), *(r.imag for r in d.roots)] for d in samples),
        header,
    )
    writer.write_text("spectrum.gp", _scripts.spectrum("dispersion.csv"))

    summary: dict[str, Any] = {"essential_bound": bound.bound, "o1_even_scaled": even}
    if sp.discrete:
        pulse = build_pulse(p)
        target = complex(sp.target_re, sp.target_im)
        spectrum = discrete_linearization_eigs(pulse, regime, sp.n_grid, sp.n_eigs, target=target)
        eps2 = p.epsilon**2
        writer.write_csv(
            "eigenvalues.csv",
            ("re", "im", "re_scaled", "im_scaled"),
            ((lam.real, lam.imag, lam.real / eps2, lam.imag / eps2) for lam in spectrum.eigenvalues),
            header | {"n_grid": sp.n_grid, "spacing": spectrum.spacing, "target_re": sp.target_re, "target_im": sp.target_im},
        )
        summary["discrete"] = [complex(lam) for lam in spectrum.eigenvalues]
    return summary


def cmd_sweep(config: AppConfig, writer: ResultWriter) -> dict[str, Any]:
    points = [(float(a), float(b)) for a, b in config.sweep.points]
    if not points:
        raise ConfigError("sweep.points is empty")
    mode = config.sweep.mode.strip().lower()
    if mode not in ("classify", "simulate"):
        raise ConfigError(f"Invalid value for 'sweep.mode': {config.sweep.mode!r} (expected classify or simulate)")
    p = model_params(config)
    threads = config.run.threads

    if mode == "classify":
        ctx = SlepContext.from_params(p)

        def job(point: tuple[float, float]) -> tuple:
            try:
                result = classify_region(point[0], point[1], ctx)
            except SlepPulseException as exc:
                logger.error("sweep point (%g, %g) failed: %s", point[0], point[1], exc)
                return (*point, "error", "", "", "")
            return (*point, result.label.value, result.drift, result.hopf, result.even_instability or "")

        rows = _map(job, points, threads)
        columns = ("tau_hat", "theta_hat", "label", "drift", "hopf", "even_instability")
    else:

        def job(point: tuple[float, float]) -> tuple:
            sim = simulation_config(config, p, TimeScaleRegime.slow(*point))
            try:
                trajectory = run(sim, seed=config.run.seed)
            except SlepPulseException as exc:
                logger.error("sweep point (%g, %g) failed: %s", point[0], point[1], exc)
                return (*point, "error", math.nan, math.nan)
            d = trajectory.diagnostics
            return (*point, trajectory.label.value, d.get("velocity", math.nan), d.get("amplitude", math.nan))

        rows = _map(job, points, threads)
        columns = ("tau_hat", "theta_hat", "label", "velocity", "amplitude")

    writer.write_csv("sweep.csv", columns, rows, _param_header(p) | {"mode": mode, "seed": config.run.seed})
    return {"mode": mode, "labels": [row[2] for row in rows]}


COMMANDS = {
    "pulse": cmd_pulse,
    "diagram": cmd_diagram,
    "trace": cmd_trace,
    "simulate": cmd_simulate,
    "spectrum": cmd_spectrum,
    "sweep": cmd_sweep,
}
