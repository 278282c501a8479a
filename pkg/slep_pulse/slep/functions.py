"""Scalar special functions of the SLEP equations.

g_+(y) = (1 + e^{-y}) / y and g_-(y) = (1 - e^{-y}) / y, their derivatives,
and the polar decomposition R + iI of g_+ along the rays used by the Hopf
analysis. All functions accept real or complex scalars and numpy arrays.
"""

from __future__ import annotations

import math

import numpy as np
from numpy.polynomial import polynomial as P

from slep_pulse.domain.exceptions import DomainError

SERIES_THRESHOLD = 1e-4
SERIES_TERMS = 6
QUARTER_PI = 0.25 * math.pi

# g_-(y) = sum_k (-y)^k / (k+1)!
_G_MINUS_SERIES = np.array([(-1.0) ** k / math.factorial(k + 1) for k in range(SERIES_TERMS)])


def _is_plus(sign: str | int) -> bool:
    if sign in ("+", 1, "plus", "even"):
        return True
    if sign in ("-", -1, "minus", "odd"):
        return False
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def g_pm_derivative(y, sign: str | int = "+", order: int = 0):
    """Value (order 0) or first/second derivative of g_+ or g_-."""
    if order not in (0, 1, 2):
        raise ValueError(f"order must be 0, 1 or 2, got {order}")
    plus = _is_plus(sign)
    arr = np.asarray(y)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    out = np.empty(arr.shape, dtype=np.result_type(arr, float))

    small = np.zeros(arr.shape, dtype=bool) if plus else np.abs(arr) < SERIES_THRESHOLD
    if np.any(small):
        out[small] = P.polyval(arr[small], P.polyder(_G_MINUS_SERIES, order))

    big = ~small
    yb = arr[big]
    e = np.exp(-yb)
    sg = 1.0 if plus else -1.0
    if order == 0:
        out[big] = (1.0 + sg * e) / yb
    elif order == 1:
        out[big] = -(1.0 + sg * e) / yb**2 - sg * e / yb
    else:
        out[big] = 2.0 * (1.0 + sg * e) / yb**3 + sg * 2.0 * e / yb**2 + sg * e / yb
    return out[0] if scalar else out


def g_pm(y, sign: str | int = "+"):
    """(1 +- e^{-y}) / y, with a Taylor series for g_- near 0."""
    return g_pm_derivative(y, sign, 0)


def RI_functions(z, d: float):
    """Real/imaginary parts of g_+ on the ray X + iY = d e^{iz} / sqrt(cos 2z).

    Returns:
        (R, I, X, Y) with R + iI = g_+(X + iY) and X**2 - Y**2 = d**2.

    Raises:
        DomainError: z outside [0, pi/4) or d <= 0.
    """
    z_arr = np.asarray(z, dtype=float)
    if np.any(z_arr < 0) or np.any(z_arr >= QUARTER_PI):
        raise DomainError(f"z must lie in [0, pi/4), got {z!r}")
    if not d > 0:
        raise DomainError(f"d must be positive, got {d!r}")
    root = np.sqrt(np.cos(2.0 * z_arr))
    X = d * np.cos(z_arr) / root
    Y = d * np.sin(z_arr) / root
    decay = np.exp(-X)
    R = root / d * (np.cos(z_arr) + decay * np.cos(Y + z_arr))
    I = -root / d * (np.sin(z_arr) + decay * np.sin(Y + z_arr))
    return R, I, X, Y


def _dg_plus_along(c: float, d: float, lam: complex) -> complex:
    """d/dlambda g_+(d sqrt(1 + c lambda))."""
    root = np.sqrt(1.0 + c * complex(lam))
    return complex(g_pm_derivative(d * root, "+", 1) * d * c / (2.0 * root))


def transversality_quantity(c: float, d: float, lam: complex) -> float:
    """Scaled imaginary part of d/dlambda g_+(d sqrt(1 + c lambda)).

    Normalized by 2d (rho^2 + zeta^2)^{3/4} / c with rho = 1 + c Re(lambda)
    and zeta = c Im(lambda); positive for c, d > 0, Re(lambda) >= 0 and
    Im(lambda) > 0.
    """
    lam = complex(lam)
    rho = 1.0 + c * lam.real
    zeta = c * lam.imag
    scale = 2.0 * d * (rho**2 + zeta**2) ** 0.75 / c
    return scale * _dg_plus_along(c, d, lam).imag


def transversality_quantity_trig(c: float, d: float, lam: complex) -> float:
    """Trigonometric form of ``transversality_quantity``."""
    lam = complex(lam)
    rho = 1.0 + c * lam.real
    zeta = c * lam.imag
    z = 0.5 * math.atan2(zeta, rho)
    amp = d * math.sqrt(rho) / math.sqrt(math.cos(2.0 * z))
    x = amp * math.cos(z)
    y = amp * math.sin(z)
    decay = math.exp(-x)
    return math.sin(3.0 * z) + decay * math.sin(3.0 * z + y) + amp * decay * math.sin(2.0 * z + y)
