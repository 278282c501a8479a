"""Hopf points of the even mode and the Hopf curve in the (tau_hat, theta_hat) plane.

Along a ray (tau_hat, theta_hat) = s (cos psi, sin psi) a purely imaginary
root i xi solves G_ev exactly when eta = s xi satisfies R_hat(eta, psi) = zeta0*.
R_hat decreases strictly from a value above zeta0* to 0, so eta* is found
by bisection; xi* and s* follow in closed form.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy import optimize

from slep_pulse.domain.entities import HopfCurve, HopfPoint
from slep_pulse.domain.exceptions import BracketFailure, DomainError, NoConvergence, SlepPulseException
from slep_pulse.slep.context import SlepContext
from slep_pulse.slep.functions import RI_functions

from .roots import complex_newton, even_G, even_G_lambda, root_velocity

logger = logging.getLogger(__name__)

ETA_XTOL = 1e-12
MAX_DOUBLINGS = 200
FD_RADIUS = 1e-3
DEFAULT_PSI_COUNT = 181
DEFAULT_PSI_MARGIN = 0.01


def default_psi_grid(count: int = DEFAULT_PSI_COUNT, margin: float = DEFAULT_PSI_MARGIN) -> np.ndarray:
    return np.linspace(margin, 0.5 * math.pi - margin, count)


def _ri_sum(eta: float, psi: float, ctx: SlepContext) -> tuple[float, float]:
    p = ctx.params
    xs, D = ctx.x_star, p.D
    R_q, I_q, _, _ = RI_functions(0.5 * math.atan(eta * math.cos(psi)), 2.0 * xs)
    R_r, I_r, _, _ = RI_functions(0.5 * math.atan(eta * math.sin(psi)), 2.0 * xs / D)
    k = 4.0 * ctx.kappa_star_sq
    real = k * (p.alpha * xs * float(R_q) + (p.beta * xs / D**2) * float(R_r))
    imag = k * (p.alpha * xs * float(I_q) + (p.beta * xs / D**2) * float(I_r))
    return real, imag


def R_hat(eta: float, psi: float, ctx: SlepContext) -> float:
    return _ri_sum(eta, psi, ctx)[0]


def hopf_frequency(eta: float, psi: float, ctx: SlepContext) -> float:
    """xi = -4 kappa*^2 [alpha x* I_q + (beta x*/D^2) I_r] at eta."""
    return -_ri_sum(eta, psi, ctx)[1]


def transversality_closed_form(xi: float, s: float, psi: float, ctx: SlepContext) -> float:
    """d Re(lambda)/ds at the Hopf point from the implicit-function formula."""
    slope = even_G_lambda(1j * xi, s, psi, ctx)
    return xi * slope.imag / (s * abs(slope) ** 2)


def transversality_fd(xi: float, s: float, psi: float, ctx: SlepContext, radius: float = FD_RADIUS) -> float:
    """Centered difference of Re(lambda) after continuing the root to s +- radius."""
    lam0 = 1j * xi
    velocity = root_velocity(lam0, s, psi, ctx)
    shifted = []
    for ds in (radius, -radius):
        lam, _ = complex_newton(lam0 + velocity * ds, s + ds, psi, ctx, maxiter=30)
        shifted.append(lam)
    return (shifted[0].real - shifted[1].real) / (2.0 * radius)


def hopf_point(
    psi: float,
    ctx: SlepContext,
    initial_upper: float = 1.0,
    with_fd: bool = True,
) -> HopfPoint:
    """Hopf point on the ray of angle psi.

    Raises:
        DomainError: psi outside (0, pi/2).
        BracketFailure: R_hat(0, psi) <= zeta0* (inconsistent parameters).
    """
    if not 0.0 < psi < 0.5 * math.pi:
        raise DomainError(f"psi must lie in (0, pi/2), got {psi}")

    def excess(eta: float) -> float:
        return R_hat(eta, psi, ctx) - ctx.zeta0_star

    if excess(0.0) <= 0:
        raise BracketFailure(f"R_hat(0, psi={psi:.6g}) does not exceed zeta0*")
    hi = initial_upper
    for _ in range(MAX_DOUBLINGS):
        if excess(hi) < 0:
            break
        hi *= 2.0
    else:
        raise BracketFailure(f"R_hat did not drop below zeta0* at psi={psi:.6g}")

    eta = optimize.bisect(excess, 0.0, hi, xtol=ETA_XTOL, maxiter=500)
    xi = hopf_frequency(eta, psi, ctx)
    s = eta / xi
    residual = abs(even_G(1j * xi, s, psi, ctx))
    E = transversality_closed_form(xi, s, psi, ctx)
    E_fd = None
    if with_fd:
        try:
            E_fd = transversality_fd(xi, s, psi, ctx)
        except NoConvergence as exc:
            logger.warning("finite-difference transversality failed at psi=%.6g: %s", psi, exc)
    logger.debug("Hopf point psi=%.6g: s*=%.10g xi*=%.10g residual=%.2e", psi, s, xi, residual)
    return HopfPoint(
        psi=psi,
        eta_star=eta,
        xi_star=xi,
        s_star=s,
        tau_hat=s * math.cos(psi),
        theta_hat=s * math.sin(psi),
        residual=residual,
        transversality=E,
        transversality_fd=E_fd,
    )


def hopf_curve(
    psi_grid: np.ndarray | list[float],
    ctx: SlepContext,
    threads: int = 1,
    skip_failures: bool = False,
    with_fd: bool = False,
) -> HopfCurve:
    """Hopf points over a psi grid, in grid order.

    With ``skip_failures`` a failing psi is logged and listed in
    ``HopfCurve.failures``; otherwise the first failure is re-raised.
    """
    grid = [float(psi) for psi in psi_grid]
    if not grid:
        raise DomainError("empty psi grid")

    def compute(psi: float) -> HopfPoint | tuple[float, str]:
        try:
            return hopf_point(psi, ctx, with_fd=with_fd)
        except SlepPulseException as exc:
            logger.error("Hopf point failed at psi=%.6g: %s", psi, exc)
            if not skip_failures:
                raise
            return psi, str(exc)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(compute, grid))
    else:
        results = [compute(psi) for psi in grid]

    points = [r for r in results if isinstance(r, HopfPoint)]
    failures = [r for r in results if not isinstance(r, HopfPoint)]
    return HopfCurve(points, failures)
