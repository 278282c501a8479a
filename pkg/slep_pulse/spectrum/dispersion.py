"""Dispersion relation of the linearization about the constant background.

With perturbations proportional to exp(i xi x), the far-field linearization
reduces to the 3x3 matrix

    | lambda + eps^2 xi^2 - m    eps alpha              eps beta               |
    | -1                         tau lambda + xi^2 + 1  0                      |
    | -1                         0                      theta lambda + D^2 xi^2 + 1 |

whose determinant is a cubic in lambda. The w-diffusion enters as D^2 xi^2,
matching the D^2 w_xx term of the PDE.
"""

from __future__ import annotations

import cmath
import logging

import numpy as np

from slep_pulse.domain.entities import DispersionSample
from slep_pulse.domain.params import background_state
from slep_pulse.domain.value_objects import ModelParams, TimeScaleRegime

logger = logging.getLogger(__name__)

LEADING_TOLERANCE = 1e-12
RESIDUAL_TOLERANCE = 1e-10
POLISH_STEPS = 3
_UNITY = (1.0, complex(-0.5, 0.5 * np.sqrt(3.0)), complex(-0.5, -0.5 * np.sqrt(3.0)))


def background_slope(p: ModelParams) -> float:
    """m = f'(u_bar); tends to -2 as eps -> 0."""
    u_bar = background_state(p).u_bar
    return 1.0 - 3.0 * u_bar**2


def cubic_coefficients(
    xi: float,
    p: ModelParams,
    regime: TimeScaleRegime,
    m: float | None = None,
) -> tuple[float, float, float, float]:
    """(c3, c2, c1, c0) of det M(lambda; xi) = c3 lambda^3 + ... + c0."""
    tau, theta = regime.relaxation_times(p)
    if m is None:
        m = background_slope(p)
    eps = p.epsilon
    xi2 = xi * xi
    p1 = eps * eps * xi2 - m
    p2 = xi2 + 1.0
    p3 = p.D**2 * xi2 + 1.0
    c3 = tau * theta
    c2 = tau * p3 + theta * p2 + tau * theta * p1
    c1 = p2 * p3 + p1 * (tau * p3 + theta * p2) + eps * (p.alpha * theta + p.beta * tau)
    c0 = p1 * p2 * p3 + eps * (p.alpha * p3 + p.beta * p2)
    return c3, c2, c1, c0


def determinant(lam: complex, coeffs: tuple[float, float, float, float]) -> complex:
    c3, c2, c1, c0 = coeffs
    return ((c3 * lam + c2) * lam + c1) * lam + c0


def relative_residual(lam: complex, coeffs: tuple[float, float, float, float]) -> float:
    c3, c2, c1, c0 = coeffs
    r = abs(lam)
    scale = abs(c3) * r**3 + abs(c2) * r**2 + abs(c1) * r + abs(c0)
    return abs(determinant(lam, coeffs)) / scale if scale > 0 else 0.0


def _cardano(coeffs: tuple[float, float, float, float]) -> list[complex]:
    c3, c2, c1, c0 = coeffs
    b, c, d = c2 / c3, c1 / c3, c0 / c3
    shift = b / 3.0
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    root = cmath.sqrt(q * q / 4.0 + p**3 / 27.0)
    # larger-magnitude branch avoids cancellation
    big = -0.5 * q + root if abs(-0.5 * q + root) >= abs(-0.5 * q - root) else -0.5 * q - root
    if big == 0:
        return [complex(-shift)] * 3
    C = big ** (1.0 / 3.0)
    return [w * C - p / (3.0 * w * C) - shift for w in _UNITY]


def _polish(lam: complex, coeffs: tuple[float, float, float, float]) -> complex:
    c3, c2, c1, _ = coeffs
    for _ in range(POLISH_STEPS):
        slope = (3.0 * c3 * lam + 2.0 * c2) * lam + c1
        if slope == 0:
            break
        lam = lam - determinant(lam, coeffs) / slope
    return lam


def solve_cubic(coeffs: tuple[float, float, float, float]) -> tuple[complex, complex, complex]:
    """Three roots sorted by real part, closed form with companion fallback."""
    c3, c2, c1, c0 = coeffs
    scale = max(abs(c3), abs(c2), abs(c1), abs(c0))
    roots: list[complex] | None = None
    if abs(c3) > LEADING_TOLERANCE * scale:
        roots = [_polish(r, coeffs) for r in _cardano(coeffs)]
        if max(relative_residual(r, coeffs) for r in roots) > RESIDUAL_TOLERANCE:
            logger.debug("closed-form cubic residual too large; using companion matrix")
            roots = None
    if roots is None:
        roots = [complex(r) for r in np.roots([c3, c2, c1, c0])]
        while len(roots) < 3:
            roots.append(complex(-np.inf))
    roots.sort(key=lambda z: (z.real, z.imag))
    return roots[0], roots[1], roots[2]


def dispersion_roots(
    xi: float,
    p: ModelParams,
    regime: TimeScaleRegime,
    m: float | None = None,
) -> DispersionSample:
    coeffs = cubic_coefficients(xi, p, regime, m)
    return DispersionSample(float(xi), solve_cubic(coeffs))
