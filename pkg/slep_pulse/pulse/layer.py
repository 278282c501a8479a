"""Layer position and the C1-matching constants of the standing pulse.

The reduced problem fixes the layer position x* through

    alpha * exp(-2x*) + beta * exp(-2x*/D) = gamma,

and the first-order matching at x = x* fixes the inner shift s together
with the first-order boundary values b1, c1 of the inhibitors.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy import optimize

from slep_pulse.domain.entities import LayerData
from slep_pulse.domain.value_objects import ModelParams

logger = logging.getLogger(__name__)

LAYER_XTOL = 1e-13
MAX_DOUBLINGS = 200
SQRT2 = math.sqrt(2.0)


def layer_function(z: float | np.ndarray, p: ModelParams) -> float | np.ndarray:
    """g(z) = alpha e^{-z} + beta e^{-z/D}; strictly decreasing in z."""
    return p.alpha * np.exp(-z) + p.beta * np.exp(-z / p.D)


def solve_layer_position(
    p: ModelParams,
    bracket: tuple[float, float] | None = None,
) -> float:
    """Unique positive root x* of g(2x*) = gamma by bisection.

    Args:
        p: validated parameters (gamma < alpha + beta).
        bracket: optional starting bracket in x. The upper end is doubled
            until g changes sign; a lower end already past the root is reset to 0.
    """
    lo, hi = bracket if bracket is not None else (0.0, 0.5)
    lo, hi = 2.0 * max(lo, 0.0), 2.0 * max(hi, 1e-3)

    def excess(z: float) -> float:
        return float(layer_function(z, p)) - p.gamma

    if excess(lo) <= 0:
        lo = 0.0
    for _ in range(MAX_DOUBLINGS):
        if excess(hi) < 0:
            break
        lo, hi = hi, 2.0 * hi
    z = optimize.bisect(excess, lo, hi, xtol=2.0 * LAYER_XTOL, maxiter=500)
    x_star = 0.5 * z
    logger.debug("layer position x*=%.15g", x_star)
    return x_star


def layer_values(x_star: float, p: ModelParams) -> tuple[float, float, float, float]:
    """(v*, w*, b0, c0); the zeroth-order boundary values equal v*, w*."""
    v_star = -math.exp(-2.0 * x_star)
    w_star = -math.exp(-2.0 * x_star / p.D)
    return v_star, w_star, v_star, w_star


def first_order_constants(x_star: float, p: ModelParams) -> tuple[float, float, float]:
    """(b1, c1, s) from the three first-order matching relations."""
    e_q = math.exp(-2.0 * x_star)
    e_r = math.exp(-2.0 * x_star / p.D)
    s = -p.gamma / (2.0 * (p.alpha * e_q + (p.beta / p.D) * e_r))
    b1 = -(1.0 + e_q) * s - e_q
    c1 = -(1.0 / p.D) * (1.0 + e_r) * s - e_r
    return b1, c1, s


def _matching_system(x_star: float, p: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    D = p.D
    vx = math.exp(-2.0 * x_star) - 1.0
    wx = (math.exp(-2.0 * x_star / D) - 1.0) / D
    ch_q = math.cosh(x_star)
    ch_r = math.cosh(x_star / D)
    matrix = np.array(
        [
            [2.0 * p.alpha, 2.0 * p.beta, -2.0 * (p.alpha * vx + p.beta * wx)],
            [0.0, -math.exp(x_star / D) / (D * ch_r), -2.0 / D**2],
            [-math.exp(x_star) / ch_q, 0.0, -2.0],
        ]
    )
    rhs = np.array(
        [
            0.0,
            math.exp(-x_star / D) / (D * ch_r),
            math.exp(-x_star) / ch_q,
        ]
    )
    return matrix, rhs


def first_order_constants_linear(x_star: float, p: ModelParams) -> tuple[float, float, float]:
    """Same constants from a direct 3x3 solve of the matching relations."""
    matrix, rhs = _matching_system(x_star, p)
    b1, c1, s = np.linalg.solve(matrix, rhs)
    return float(b1), float(c1), float(s)


def matching_residuals(layer: LayerData, p: ModelParams) -> dict[str, float]:
    """Residuals of every matching relation at the stored layer data.

    Keys: ``position`` (g(2x*) - gamma), ``balance`` (alpha b0 + beta c0 + gamma),
    ``solvability`` (jump of the activator derivative), ``jump_w``, ``jump_v``.
    """
    matrix, rhs = _matching_system(layer.x_star, p)
    first = matrix @ np.array([layer.b1, layer.c1, layer.s]) - rhs
    return {
        "position": float(layer_function(2.0 * layer.x_star, p)) - p.gamma,
        "balance": p.alpha * layer.b0 + p.beta * layer.c0 + p.gamma,
        "solvability": float(first[0]),
        "jump_w": float(first[1]),
        "jump_v": float(first[2]),
    }


def build_layer(p: ModelParams) -> LayerData:
    x_star = solve_layer_position(p)
    v_star, w_star, b0, c0 = layer_values(x_star, p)
    b1, c1, s = first_order_constants(x_star, p)
    a0 = -math.tanh(s / SQRT2)
    return LayerData(x_star, v_star, w_star, b0, c0, b1, c1, s, a0)
