"""Intersections of the drift line with the Hopf curve."""

from __future__ import annotations

import logging

import numpy as np
from scipy import optimize

from slep_pulse.domain.entities import Codim2Point, HopfCurve
from slep_pulse.slep.context import SlepContext

from .drift import drift_line
from .hopf import default_psi_grid, hopf_curve, hopf_point
from .roots import even_G

logger = logging.getLogger(__name__)

PSI_XTOL = 1e-14


def codim2_points(
    ctx: SlepContext,
    psi_grid: np.ndarray | list[float] | None = None,
    threads: int = 1,
    curve: HopfCurve | None = None,
) -> list[Codim2Point]:
    """All sign changes of 1 - C1 tau_hat - C2 theta_hat along the Hopf curve.

    Each bracketing pair of grid angles is refined by brentq in psi on the
    signed distance of hopf_point(psi) to the drift line. Angles whose Hopf
    point fails are skipped; a precomputed ``curve`` over the grid is reused.
    """
    line = drift_line(ctx)
    grid = default_psi_grid() if psi_grid is None else psi_grid
    if curve is None:
        curve = hopf_curve(grid, ctx, threads=threads, skip_failures=True)

    def distance(psi: float) -> float:
        point = hopf_point(psi, ctx, with_fd=False)
        return line.signed_distance(point.tau_hat, point.theta_hat)

    found: list[Codim2Point] = []
    values = [line.signed_distance(p.tau_hat, p.theta_hat) for p in curve.points]
    for left, right, d_left, d_right in zip(curve.points, curve.points[1:], values, values[1:]):
        if d_left == 0.0:
            psi = left.psi
        elif d_left * d_right < 0:
            psi = optimize.brentq(distance, left.psi, right.psi, xtol=PSI_XTOL, rtol=4 * np.finfo(float).eps)
        else:
            continue
        point = hopf_point(psi, ctx, with_fd=False)
        found.append(
            Codim2Point(
                psi=psi,
                tau_hat=point.tau_hat,
                theta_hat=point.theta_hat,
                xi_star=point.xi_star,
                line_residual=abs(line.signed_distance(point.tau_hat, point.theta_hat)),
                hopf_residual=abs(even_G(1j * point.xi_star, point.s_star, psi, ctx)),
            )
        )
    logger.info("found %d codimension-two point(s)", len(found))
    for p in found:
        logger.debug("codim-2 point psi=%.10g at (%.10g, %.10g)", p.psi, p.tau_hat, p.theta_hat)
    return found
