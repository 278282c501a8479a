"""Real-eigenvalue landmarks on a ray: merge and split radii of the even pair."""

from __future__ import annotations

import logging
import math

from scipy import optimize

from slep_pulse.domain.entities import Landmarks
from slep_pulse.domain.exceptions import DegenerateBracket, DomainError, NoConvergence
from slep_pulse.slep.context import SlepContext
from slep_pulse.slep.functions import g_pm_derivative

from .roots import lambda_under, minimum_value

logger = logging.getLogger(__name__)

MAX_EXPANSIONS = 200


def critical_radius(psi: float, ctx: SlepContext) -> float:
    """s_c where the minimizer of G(.; s, psi) passes through 0."""
    p = ctx.params
    xs, D = ctx.x_star, p.D
    bracket = (
        p.alpha * float(g_pm_derivative(2.0 * xs, "+", 1)) * math.cos(psi)
        + (p.beta / D**3) * float(g_pm_derivative(2.0 * xs / D, "+", 1)) * math.sin(psi)
    )
    return -1.0 / (4.0 * ctx.kappa_star_sq * xs**2 * bracket)


def real_eig_landmarks(psi: float, ctx: SlepContext) -> Landmarks:
    """s_c, the merge radius s_under < s_c and the split radius s_over > s_c.

    Raises:
        DegenerateBracket: m(s_c) <= 0, so the complex window does not exist.
    """
    if not 0.0 < psi < 0.5 * math.pi:
        raise DomainError(f"psi must lie in (0, pi/2), got {psi}")
    s_c = critical_radius(psi, ctx)

    def m(s: float) -> float:
        return minimum_value(s, psi, ctx)

    m_c = m(s_c)
    if m_c <= 0:
        raise DegenerateBracket(f"m(s_c)={m_c:.3g} <= 0 at psi={psi:.6g}")

    lo = 0.5 * s_c
    for _ in range(MAX_EXPANSIONS):
        if m(lo) < 0:
            break
        lo *= 0.5
    else:
        raise NoConvergence(f"merge radius not bracketed at psi={psi:.6g}")
    hi = 2.0 * s_c
    for _ in range(MAX_EXPANSIONS):
        if m(hi) < 0:
            break
        hi *= 2.0
    else:
        raise NoConvergence(f"split radius not bracketed at psi={psi:.6g}")

    tol = 1e-14 * s_c
    s_under = optimize.brentq(m, lo, s_c, xtol=tol, rtol=1e-15)
    s_over = optimize.brentq(m, s_c, hi, xtol=tol, rtol=1e-15)
    lam_under = lambda_under(s_under, psi, ctx)
    lam_over = lambda_under(s_over, psi, ctx)
    logger.debug(
        "landmarks psi=%.6g: s_under=%.10g s_c=%.10g s_over=%.10g", psi, s_under, s_c, s_over
    )
    return Landmarks(psi, s_c, s_under, s_over, lam_under, lam_over)
