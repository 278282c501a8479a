"""Outer, inner and composite profiles of the standing pulse."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from slep_pulse.domain.entities import LayerData
from slep_pulse.domain.enums import Side
from slep_pulse.domain.exceptions import DomainMismatch, GridTooCoarse
from slep_pulse.domain.value_objects import ModelParams

from .layer import build_layer

logger = logging.getLogger(__name__)

SQRT2 = math.sqrt(2.0)
SIDE_TOLERANCE = 1e-14
LAYER_WINDOW = 10.0  # in units of epsilon


def inner_profile(y: float | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Allen-Cahn heteroclinic -tanh(y/sqrt2) and its derivative."""
    t = np.tanh(np.asarray(y, dtype=float) / SQRT2)
    return -t, -(1.0 - t * t) / SQRT2


def outer_inhibitors(
    x: float | np.ndarray,
    side: Side,
    layer: LayerData,
    p: ModelParams,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Zeroth-order outer inhibitors (V, W, V_x, W_x) on one side of the layer.

    Raises:
        DomainMismatch: a point lies on the other side of x*.
    """
    x = np.asarray(x, dtype=float)
    xs, D = layer.x_star, p.D
    if side is Side.INSIDE:
        if np.any(x < -SIDE_TOLERANCE) or np.any(x > xs + SIDE_TOLERANCE):
            raise DomainMismatch(f"inside profiles need 0 <= x <= x*={xs}")
        ch_q, ch_r = math.cosh(xs), math.cosh(xs / D)
        V = (layer.b0 - 1.0) * np.cosh(x) / ch_q + 1.0
        W = (layer.c0 - 1.0) * np.cosh(x / D) / ch_r + 1.0
        V_x = (layer.b0 - 1.0) * np.sinh(x) / ch_q
        W_x = (layer.c0 - 1.0) * np.sinh(x / D) / (D * ch_r)
    else:
        if np.any(x < xs - SIDE_TOLERANCE):
            raise DomainMismatch(f"outside profiles need x >= x*={xs}")
        e_q = np.exp(xs - x)
        e_r = np.exp((xs - x) / D)
        V = (layer.b0 + 1.0) * e_q - 1.0
        W = (layer.c0 + 1.0) * e_r - 1.0
        V_x = -(layer.b0 + 1.0) * e_q
        W_x = -(layer.c0 + 1.0) * e_r / D
    return V, W, V_x, W_x


def cutoff(x: float | np.ndarray, x_star: float) -> np.ndarray:
    """Smooth localizer: 1 within x*/4 of the layer, 0 beyond x*/2."""
    dist = np.abs(np.asarray(x, dtype=float) - x_star)
    t = np.clip((dist - 0.25 * x_star) / (0.25 * x_star), 0.0, 1.0)
    return 1.0 - t**3 * (10.0 - 15.0 * t + 6.0 * t * t)


@dataclass(frozen=True, eq=False)
class PulseSolution:
    """Composite asymptotic pulse, evaluable anywhere on the real line.

    u carries the O(eps) outer correction; v and w are the zeroth-order
    outer solutions, which are already C1 across the layer.
    """

    layer: LayerData
    params: ModelParams
    grid: np.ndarray | None = None

    def _outer(self, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        xs = self.layer.x_star
        inside = x <= xs
        V = np.empty_like(x)
        W = np.empty_like(x)
        if np.any(inside):
            V[inside], W[inside], _, _ = outer_inhibitors(x[inside], Side.INSIDE, self.layer, self.params)
        if np.any(~inside):
            V[~inside], W[~inside], _, _ = outer_inhibitors(x[~inside], Side.OUTSIDE, self.layer, self.params)
        U0 = np.where(inside, 1.0, -1.0)
        return U0, V, W

    def evaluate(self, x: float | np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(u, v, w) at the given positions (even in x)."""
        p = self.params
        ax = np.abs(np.atleast_1d(np.asarray(x, dtype=float)))
        U0, V, W = self._outer(ax)
        U1 = -0.5 * (p.alpha * V + p.beta * W + p.gamma)
        inner, _ = inner_profile((ax - self.layer.x_star) / p.epsilon + self.layer.s)
        u = U0 + p.epsilon * U1 + cutoff(ax, self.layer.x_star) * (inner - U0)
        return u, V, W

    def u(self, x: float | np.ndarray) -> np.ndarray:
        return self.evaluate(x)[0]

    def sampled(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        if self.grid is None:
            raise ValueError("pulse has no attached grid")
        u, v, w = self.evaluate(self.grid)
        return self.grid, u, v, w


def check_layer_resolution(grid: np.ndarray, x_star: float, epsilon: float) -> float:
    """Largest spacing among grid cells touching the layer neighbourhoods.

    Raises:
        GridTooCoarse: spacing exceeds eps/4 near +-x*, or no cell reaches the layer.
    """
    g = np.sort(np.asarray(grid, dtype=float))
    if g.size < 2:
        raise GridTooCoarse("grid needs at least two points")
    window = LAYER_WINDOW * epsilon
    near = np.abs(np.abs(g) - x_star) <= window
    cells = near[:-1] | near[1:]
    if not np.any(cells):
        raise GridTooCoarse(f"no grid point within {window:.3g} of the layer at x*={x_star:.6g}")
    spacing = float(np.max(np.diff(g)[cells]))
    if spacing > 0.25 * epsilon:
        raise GridTooCoarse(
            f"grid spacing {spacing:.3g} near the layer exceeds eps/4={0.25 * epsilon:.3g}"
        )
    return spacing


def composite_profile(grid: np.ndarray, layer: LayerData, p: ModelParams) -> PulseSolution:
    """Attach a layer-resolving grid to the composite pulse."""
    grid = np.asarray(grid, dtype=float)
    check_layer_resolution(grid, layer.x_star, p.epsilon)
    return PulseSolution(layer, p, grid)


def build_pulse(p: ModelParams, grid: np.ndarray | None = None) -> PulseSolution:
    layer = build_layer(p)
    if grid is None:
        return PulseSolution(layer, p)
    return composite_profile(grid, layer, p)


def default_grid(p: ModelParams, half_width: float, points: int | None = None) -> np.ndarray:
    """Uniform symmetric grid fine enough for the layer (spacing <= eps/8)."""
    if points is None:
        points = 2 * int(math.ceil(half_width / (p.epsilon / 8.0))) + 1
    return np.linspace(-half_width, half_width, points)
