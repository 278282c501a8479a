"""SLEP functions G_od, G_ev and the Green-function weights behind them.

Everything is expressed in the slow scaling lambda = eps^2 * lambda_hat with
tau = tau_hat / eps^2 and theta = theta_hat / eps^2. Setting
tau_hat = theta_hat = 0 recovers the static weights of the O(1) regime.

The O(1)-regime cases other than the critical one (eigenvalues bounded away
from zero, or of order eps) contribute no eigenvalues near the origin and
have no code counterpart.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from slep_pulse.domain.enums import Component, Mode
from slep_pulse.domain.exceptions import BranchViolation
from slep_pulse.domain.value_objects import ModelParams
from slep_pulse.pulse.layer import solve_layer_position
from slep_pulse.pulse.profiles import inner_profile

from .functions import g_pm_derivative

logger = logging.getLogger(__name__)

KAPPA_STAR_SQ = 3.0 * math.sqrt(2.0) / 4.0


@dataclass(frozen=True)
class SlepContext:
    """Spectral constants bound to one validated parameter set."""

    params: ModelParams
    x_star: float
    kappa_star_sq: float
    zeta0_star: float

    @classmethod
    def from_params(cls, params: ModelParams) -> SlepContext:
        x_star = solve_layer_position(params)
        D = params.D
        zeta0 = 2.0 * KAPPA_STAR_SQ * (
            params.alpha * (1.0 - math.exp(-2.0 * x_star))
            + (params.beta / D) * (1.0 - math.exp(-2.0 * x_star / D))
        )
        return cls(params, x_star, KAPPA_STAR_SQ, zeta0)

    def G_od(self, lambda_hat: complex, tau_hat: float, theta_hat: float) -> complex:
        return slep_function(Mode.ODD, lambda_hat, tau_hat, theta_hat, self)

    def G_ev(self, lambda_hat: complex, tau_hat: float, theta_hat: float) -> complex:
        return slep_function(Mode.EVEN, lambda_hat, tau_hat, theta_hat, self)


def kappa_star_sq_by_quadrature() -> float:
    """1 / ||d/dy tanh profile||^2 by adaptive quadrature."""

    def integrand(y: float) -> float:
        return float(inner_profile(y)[1]) ** 2

    norm_sq, _ = integrate.quad(integrand, -np.inf, np.inf, epsabs=1e-14, epsrel=1e-13)
    return 1.0 / norm_sq


def _sign(mode: Mode) -> str:
    return "+" if mode is Mode.EVEN else "-"


def _component_scales(component: Component, ctx: SlepContext) -> tuple[float, float]:
    """(prefactor, length scale d) of the q or r weight."""
    D = ctx.params.D
    if component is Component.Q:
        return ctx.x_star, 1.0
    return ctx.x_star / D**2, D


def _omega(component: Component, rate: float, lambda_hat: complex, ctx: SlepContext) -> complex:
    arg = 1.0 + rate * complex(lambda_hat)
    if arg.real <= 0:
        raise BranchViolation(
            f"Re(1 + {rate:g} * lambda) = {arg.real:.3g} <= 0 leaves the principal branch"
        )
    _, d = _component_scales(component, ctx)
    return complex(np.sqrt(arg)) / d


def green_weight_static(mode: Mode, component: Component, ctx: SlepContext) -> float:
    """<K delta, delta> of the O(1)-regime half-line resolvents."""
    xs = ctx.x_star
    if component is Component.Q:
        scale, D = 1.0, 1.0
    else:
        scale, D = 1.0 / ctx.params.D, ctx.params.D
    hyper = math.cosh(xs / D) if mode is Mode.EVEN else math.sinh(xs / D)
    return scale * hyper / math.exp(xs / D)


def green_weight_dynamic(
    mode: Mode,
    component: Component,
    lambda_hat: complex,
    tau_hat: float,
    theta_hat: float,
    ctx: SlepContext,
) -> complex:
    """x* g(2 omega_q x*) for q, (x*/D^2) g(2 omega_r x*) for r."""
    rate = tau_hat if component is Component.Q else theta_hat
    pref, _ = _component_scales(component, ctx)
    omega = _omega(component, rate, lambda_hat, ctx)
    return pref * complex(g_pm_derivative(2.0 * omega * ctx.x_star, _sign(mode), 0))


def green_weight_derivative(
    mode: Mode,
    component: Component,
    lambda_hat: complex,
    tau_hat: float,
    theta_hat: float,
    ctx: SlepContext,
    order: int = 1,
) -> complex:
    """First or second lambda-derivative of ``green_weight_dynamic``."""
    rate = tau_hat if component is Component.Q else theta_hat
    pref, d = _component_scales(component, ctx)
    omega = _omega(component, rate, lambda_hat, ctx)
    xs = ctx.x_star
    y = 2.0 * omega * xs
    dy = xs * rate / (d**2 * omega)
    g1 = complex(g_pm_derivative(y, _sign(mode), 1))
    if order == 1:
        return pref * g1 * dy
    d2y = -xs * rate**2 / (2.0 * d**4 * omega**3)
    g2 = complex(g_pm_derivative(y, _sign(mode), 2))
    return pref * (g2 * dy**2 + g1 * d2y)


def slep_function(
    mode: Mode,
    lambda_hat: complex,
    tau_hat: float,
    theta_hat: float,
    ctx: SlepContext,
) -> complex:
    """lambda - zeta0* + 4 kappa*^2 [alpha <K_q> + beta <K_r>]."""
    p = ctx.params
    weights = p.alpha * green_weight_dynamic(mode, Component.Q, lambda_hat, tau_hat, theta_hat, ctx)
    weights += p.beta * green_weight_dynamic(mode, Component.R, lambda_hat, tau_hat, theta_hat, ctx)
    return complex(lambda_hat) - ctx.zeta0_star + 4.0 * ctx.kappa_star_sq * weights


def slep_derivative(
    mode: Mode,
    lambda_hat: complex,
    tau_hat: float,
    theta_hat: float,
    ctx: SlepContext,
    order: int = 1,
) -> complex:
    p = ctx.params
    weights = p.alpha * green_weight_derivative(
        mode, Component.Q, lambda_hat, tau_hat, theta_hat, ctx, order
    )
    weights += p.beta * green_weight_derivative(
        mode, Component.R, lambda_hat, tau_hat, theta_hat, ctx, order
    )
    base = 1.0 if order == 1 else 0.0
    return base + 4.0 * ctx.kappa_star_sq * weights


def G_od(lambda_hat: complex, tau_hat: float, theta_hat: float, ctx: SlepContext) -> complex:
    return slep_function(Mode.ODD, lambda_hat, tau_hat, theta_hat, ctx)


def G_ev(lambda_hat: complex, tau_hat: float, theta_hat: float, ctx: SlepContext) -> complex:
    return slep_function(Mode.EVEN, lambda_hat, tau_hat, theta_hat, ctx)


def zeta0_from_static_weights(ctx: SlepContext) -> float:
    """4 kappa*^2 [alpha <K_q^o> + beta <K_r^o>], equal to zeta0*."""
    p = ctx.params
    return 4.0 * ctx.kappa_star_sq * (
        p.alpha * green_weight_static(Mode.ODD, Component.Q, ctx)
        + p.beta * green_weight_static(Mode.ODD, Component.R, ctx)
    )


def critical_eigenvalue_order_one(mode: Mode, ctx: SlepContext) -> float:
    """Scaled root of the O(1)-regime SLEP equation for one parity."""
    p = ctx.params
    weights = p.alpha * green_weight_static(mode, Component.Q, ctx)
    weights += p.beta * green_weight_static(mode, Component.R, ctx)
    return ctx.zeta0_star - 4.0 * ctx.kappa_star_sq * weights
