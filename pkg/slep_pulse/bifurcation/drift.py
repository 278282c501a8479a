"""Drift bifurcation of the odd (translation) mode."""

from __future__ import annotations

import logging
import math

from scipy import optimize

from slep_pulse.domain.entities import DriftLine, DriftUnfolding
from slep_pulse.domain.enums import Mode
from slep_pulse.domain.exceptions import BranchViolation
from slep_pulse.slep.context import SlepContext, slep_derivative, slep_function
from slep_pulse.slep.functions import g_pm_derivative

logger = logging.getLogger(__name__)

NEWTON_START = 0.01
MAX_EXPANSIONS = 200


def drift_line(ctx: SlepContext) -> DriftLine:
    p = ctx.params
    xs, D = ctx.x_star, p.D
    k = 4.0 * ctx.kappa_star_sq * xs**2
    C1 = -k * p.alpha * float(g_pm_derivative(2.0 * xs, "-", 1))
    C2 = -k * (p.beta / D**3) * float(g_pm_derivative(2.0 * xs / D, "-", 1))
    return DriftLine(C1, C2)


def drift_eigenvalue(tau_hat: float, theta_hat: float, ctx: SlepContext) -> float | None:
    """Nonzero real root of G_od, or None if it leaves the principal branch.

    Newton on G_od(lambda)/lambda from +0.01 is tried first; a bracketing
    search on the side fixed by the sign of dG_od/dlambda(0) takes over when
    Newton fails or lands on the wrong side.
    """
    slope0 = slep_derivative(Mode.ODD, 0.0, tau_hat, theta_hat, ctx).real
    if slope0 == 0.0:
        return 0.0

    def deflated(lam: float) -> float:
        if lam == 0.0:
            return slope0
        return slep_function(Mode.ODD, lam, tau_hat, theta_hat, ctx).real / lam

    try:
        root = float(optimize.newton(deflated, NEWTON_START, maxiter=50))
        if math.isfinite(root) and root != 0.0 and (root > 0) == (slope0 < 0):
            return root
    except (RuntimeError, BranchViolation, OverflowError):
        pass

    if slope0 < 0:
        hi = NEWTON_START
        for _ in range(MAX_EXPANSIONS):
            if deflated(hi) > 0:
                break
            hi *= 2.0
        else:
            return None
        lo = _shrink_towards_zero(deflated, hi, want_positive=False)
        return optimize.brentq(deflated, lo, hi, xtol=1e-15, rtol=1e-14)

    edge = -1.0 / max(tau_hat, theta_hat)
    lo = edge * (1.0 - 1e-12)
    if deflated(lo) >= 0:
        logger.debug("no negative drift root on the principal branch for (%g, %g)", tau_hat, theta_hat)
        return None
    hi = _shrink_towards_zero(deflated, lo, want_positive=True)
    return optimize.brentq(deflated, lo, hi, xtol=1e-15, rtol=1e-14)


def _shrink_towards_zero(f, start: float, want_positive: bool) -> float:
    """Halve ``start`` towards 0 until f has the requested sign."""
    point = start
    for _ in range(60):
        point *= 0.5
        if (f(point) > 0) == want_positive:
            return point
    return point


def drift_unfolding(tau0: float, theta0: float, ctx: SlepContext) -> DriftUnfolding:
    """Taylor constants of the drift eigenvalue about a point of the drift line."""
    line = drift_line(ctx)
    A1 = 0.5 * slep_derivative(Mode.ODD, 0.0, tau0, theta0, ctx, order=2).real
    return DriftUnfolding(A1, line.C1, line.C2, tau0, theta0)
