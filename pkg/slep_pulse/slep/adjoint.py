"""Derivative identities of the odd-mode weights and the drift multiplicity certificate."""

from __future__ import annotations

import logging

from slep_pulse.domain.enums import Component, Mode

from .context import SlepContext, green_weight_dynamic, slep_derivative
from .functions import g_pm_derivative
from .green_bvp import green_weight_fd

logger = logging.getLogger(__name__)

FD_STEP = 1e-5


def oracle_green_weight(
    mode: Mode,
    component: Component,
    lambda_hat: complex,
    tau_hat: float,
    theta_hat: float,
    ctx: SlepContext,
    squared: bool = False,
    **oracle_options,
) -> complex:
    """Finite-difference counterpart of ``green_weight_dynamic``."""
    if component is Component.Q:
        a, b = 1.0, 1.0 + tau_hat * complex(lambda_hat)
    else:
        a, b = ctx.params.D ** 2, 1.0 + theta_hat * complex(lambda_hat)
    return green_weight_fd(a, b, ctx.x_star, mode, squared=squared, **oracle_options)


def squared_green_weights(ctx: SlepContext) -> tuple[float, float]:
    """<(K~_q^o)^2 delta, delta> and <(K~_r^o)^2 delta, delta> in closed form."""
    xs, D = ctx.x_star, ctx.params.D
    q2 = -(xs**2) * float(g_pm_derivative(2.0 * xs, "-", 1))
    r2 = -(xs**2) / D**3 * float(g_pm_derivative(2.0 * xs / D, "-", 1))
    return q2, r2


def adjoint_identity_check(
    tau0: float,
    theta0: float,
    ctx: SlepContext,
    **oracle_options,
) -> tuple[float, float]:
    """Residuals of d/dlambda <K^o delta,delta>|_0 + rate * <(K~^o)^2 delta,delta>.

    The derivative is a central difference of the closed-form weight; the
    squared-operator weight comes from the FD oracle applied twice.
    """
    residuals = []
    for component, rate in ((Component.Q, tau0), (Component.R, theta0)):
        plus = green_weight_dynamic(Mode.ODD, component, FD_STEP, tau0, theta0, ctx)
        minus = green_weight_dynamic(Mode.ODD, component, -FD_STEP, tau0, theta0, ctx)
        derivative = ((plus - minus) / (2.0 * FD_STEP)).real
        squared = oracle_green_weight(
            Mode.ODD, component, 0.0, tau0, theta0, ctx, squared=True, **oracle_options
        ).real
        residuals.append(abs(derivative + rate * squared))
    logger.debug("adjoint identity residuals q=%.3g r=%.3g", *residuals)
    return residuals[0], residuals[1]


def drift_identity(tau0: float, theta0: float, ctx: SlepContext) -> float:
    """4 kappa*^2 (alpha tau0 <K~_q^2> + beta theta0 <K~_r^2>); equals 1 on the drift line."""
    q2, r2 = squared_green_weights(ctx)
    p = ctx.params
    return 4.0 * ctx.kappa_star_sq * (p.alpha * tau0 * q2 + p.beta * theta0 * r2)


def multiplicity_certificate(tau0: float, theta0: float, ctx: SlepContext) -> float:
    """tau0 <K~_q^2> + theta0 <K~_r^2> + d^2 G_od / dlambda^2 (0); positive on the drift line."""
    q2, r2 = squared_green_weights(ctx)
    curvature = slep_derivative(Mode.ODD, 0.0, tau0, theta0, ctx, order=2).real
    return tau0 * q2 + theta0 * r2 + curvature
