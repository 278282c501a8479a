"""Parameter validation and the far-field background state."""

from __future__ import annotations

import logging
import math
from collections.abc import Mapping
from typing import Any

from scipy import optimize

from .enums import Regime
from .exceptions import (
    ConfigError,
    ExistenceViolation,
    MissingParameter,
    NoConvergence,
    NonPositiveParameter,
)
from .value_objects import BackgroundState, ModelParams, TimeScaleRegime

logger = logging.getLogger(__name__)

EPSILON_WARN_THRESHOLD = 0.1
NEWTON_MAX_ITER = 50


def validate(raw: Mapping[str, Any] | ModelParams) -> ModelParams:
    """Validate a parameter record into a ModelParams.

    Raises:
        MissingParameter: a required key is absent or None.
        NonPositiveParameter: any value <= 0 (names the offender).
        ExistenceViolation: gamma >= alpha + beta.
    """
    if isinstance(raw, ModelParams):
        raw = raw.as_dict()

    values: dict[str, float] = {}
    for name in ModelParams.FIELDS:
        value = raw.get(name)
        if value is None:
            raise MissingParameter(name)
        try:
            value = float(value)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"Parameter '{name}' is not a number: {value!r}") from exc
        if not value > 0 or not math.isfinite(value):
            raise NonPositiveParameter(name, value)
        values[name] = value

    if values["gamma"] >= values["alpha"] + values["beta"]:
        raise ExistenceViolation(
            f"gamma={values['gamma']} must be below alpha+beta="
            f"{values['alpha'] + values['beta']} for a layer position to exist"
        )
    if values["epsilon"] > EPSILON_WARN_THRESHOLD:
        logger.warning(
            "epsilon=%g exceeds %g; asymptotic formulas lose accuracy",
            values["epsilon"], EPSILON_WARN_THRESHOLD,
        )
    return ModelParams(**values)


def validate_regime(raw: Mapping[str, Any]) -> TimeScaleRegime:
    """Build a TimeScaleRegime from ``regime`` plus tau/theta or tau_hat/theta_hat."""
    kind_raw = raw.get("regime") or Regime.ORDER_EPS_MINUS2.value
    kind = Regime.from_string(str(kind_raw))
    if kind is None:
        raise ConfigError(f"Unknown regime '{kind_raw}' (expected order1 or order_eps_minus2)")

    names = ("tau", "theta") if kind is Regime.ORDER_ONE else ("tau_hat", "theta_hat")
    rates = []
    for name in names:
        value = raw.get(name)
        if value is None:
            raise MissingParameter(name)
        rates.append(float(value))
    return TimeScaleRegime(kind, rates[0], rates[1])


def background_residual(u: float, p: ModelParams) -> float:
    return u - u**3 - p.epsilon * ((p.alpha + p.beta) * u + p.gamma)


def _background_slope(u: float, p: ModelParams) -> float:
    return 1.0 - 3.0 * u**2 - p.epsilon * (p.alpha + p.beta)


def background_state(p: ModelParams) -> BackgroundState:
    """Negative constant equilibrium, found by Newton from u = -1."""
    try:
        u_bar = optimize.newton(
            background_residual, -1.0, fprime=_background_slope, args=(p,),
            tol=1e-15, maxiter=NEWTON_MAX_ITER,
        )
    except (RuntimeError, ZeroDivisionError) as exc:
        raise NoConvergence(
            f"background state did not converge for epsilon={p.epsilon}"
        ) from exc

    u_bar = float(u_bar)
    if abs(background_residual(u_bar, p)) >= 1e-12 or u_bar >= 0:
        raise NoConvergence(f"background state residual too large at u={u_bar}")
    return BackgroundState(u_bar, u_bar, u_bar)
