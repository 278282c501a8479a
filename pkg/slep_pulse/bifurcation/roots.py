"""Root machinery for the even-mode SLEP function in polar coordinates.

G(lambda; s, psi) := G_ev(lambda; s cos psi, s sin psi). For real lambda it
is convex on (-1 / (s max(cos psi, sin psi)), inf), tends to +inf at the
left end and grows like lambda at the right end.
"""

from __future__ import annotations

import logging
import math

from scipy import optimize

from slep_pulse.domain.enums import Mode
from slep_pulse.domain.exceptions import BranchViolation, NoConvergence
from slep_pulse.slep.context import SlepContext, slep_derivative, slep_function

logger = logging.getLogger(__name__)

MAX_EXPANSIONS = 200
NEWTON_TOL = 1e-13


def polar_rates(s: float, psi: float) -> tuple[float, float]:
    return s * math.cos(psi), s * math.sin(psi)


def even_G(lam: complex, s: float, psi: float, ctx: SlepContext) -> complex:
    tau, theta = polar_rates(s, psi)
    return slep_function(Mode.EVEN, lam, tau, theta, ctx)


def even_G_lambda(lam: complex, s: float, psi: float, ctx: SlepContext, order: int = 1) -> complex:
    tau, theta = polar_rates(s, psi)
    return slep_derivative(Mode.EVEN, lam, tau, theta, ctx, order)


def branch_edge(s: float, psi: float) -> float:
    """Left end of the real principal-branch interval."""
    return -1.0 / (s * max(math.cos(psi), math.sin(psi)))


def complex_newton(
    lam0: complex,
    s: float,
    psi: float,
    ctx: SlepContext,
    maxiter: int = 5,
) -> tuple[complex, int]:
    """Newton iteration on G(.; s, psi) in the complex plane.

    Returns:
        (root, iterations used).

    Raises:
        NoConvergence: not converged within ``maxiter`` steps or the iterate
            left the principal branch.
    """
    lam = complex(lam0)
    for it in range(1, maxiter + 1):
        try:
            value = even_G(lam, s, psi, ctx)
            slope = even_G_lambda(lam, s, psi, ctx)
        except BranchViolation as exc:
            raise NoConvergence(f"Newton left the principal branch at s={s:.6g}") from exc
        if slope == 0:
            raise NoConvergence(f"singular Newton step at s={s:.6g}")
        step = value / slope
        lam -= step
        if abs(step) <= NEWTON_TOL * max(1.0, abs(lam)):
            return lam, it
    raise NoConvergence(f"complex Newton did not converge in {maxiter} steps at s={s:.6g}")


def lambda_under(s: float, psi: float, ctx: SlepContext) -> float:
    """Minimizer of the convex real function G(.; s, psi)."""

    def slope(lam: float) -> float:
        return even_G_lambda(lam, s, psi, ctx).real

    edge = branch_edge(s, psi)
    if slope(0.0) > 0:
        for k in range(1, MAX_EXPANSIONS):
            lo = edge * (1.0 - 2.0**-k)
            if slope(lo) < 0:
                return optimize.brentq(slope, lo, 0.0, xtol=1e-15, rtol=1e-15)
        raise NoConvergence(f"no sign change of dG/dlambda left of 0 at s={s:.6g}")
    hi = 1.0
    for _ in range(MAX_EXPANSIONS):
        if slope(hi) > 0:
            return optimize.brentq(slope, 0.0, hi, xtol=1e-15, rtol=1e-15)
        hi *= 2.0
    raise NoConvergence(f"no sign change of dG/dlambda right of 0 at s={s:.6g}")


def minimum_value(s: float, psi: float, ctx: SlepContext) -> float:
    """m(s) = G(lambda_under(s); s, psi)."""
    return even_G(lambda_under(s, psi, ctx), s, psi, ctx).real


def real_roots(s: float, psi: float, ctx: SlepContext) -> list[float]:
    """Both real roots of G(.; s, psi), or [] when the minimum is positive."""
    lam_min = lambda_under(s, psi, ctx)

    def G(lam: float) -> float:
        return even_G(lam, s, psi, ctx).real

    if G(lam_min) > 0:
        return []
    edge = branch_edge(s, psi)
    roots = []
    for k in range(1, MAX_EXPANSIONS):
        lo = edge + (lam_min - edge) * 2.0**-k
        if G(lo) > 0:
            roots.append(optimize.brentq(G, lo, lam_min, xtol=1e-15, rtol=1e-15))
            break
    else:
        raise NoConvergence(f"left real root not bracketed at s={s:.6g}")
    width = max(1.0, abs(lam_min))
    for k in range(MAX_EXPANSIONS):
        hi = lam_min + width * 2.0**k
        if G(hi) > 0:
            roots.append(optimize.brentq(G, lam_min, hi, xtol=1e-15, rtol=1e-15))
            break
    else:
        raise NoConvergence(f"right real root not bracketed at s={s:.6g}")
    return roots


def root_velocity(lam: complex, s: float, psi: float, ctx: SlepContext) -> complex:
    """d lambda / d s along a simple root (G depends on s only through s * lambda)."""
    slope = even_G_lambda(lam, s, psi, ctx)
    return -(slope - 1.0) * lam / (s * slope)
