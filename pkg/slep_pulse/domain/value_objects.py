"""Model parameters, time-scale regimes and the far-field state."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import ClassVar

from .enums import Regime
from .exceptions import NonPositiveParameter


@dataclass(frozen=True)
class ModelParams:
    """PDE parameters (alpha, beta, gamma, D, epsilon).

    Instances produced by ``validate`` satisfy positivity and
    ``gamma < alpha + beta``. Direct construction skips the checks, which
    tests use to decouple the activator equation.
    """

    alpha: float
    beta: float
    gamma: float
    D: float
    epsilon: float

    FIELDS: ClassVar[tuple[str, ...]] = ("alpha", "beta", "gamma", "D", "epsilon")

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


@dataclass(frozen=True)
class TimeScaleRegime:
    """Relaxation times of the two inhibitors.

    ``tau``/``theta`` hold the stored rates of the regime: the O(1) values for
    ``Regime.ORDER_ONE`` and the rescaled hat values for
    ``Regime.ORDER_EPS_MINUS2`` (tau = tau_hat / eps**2).
    """

    kind: Regime
    tau: float
    theta: float

    def __post_init__(self) -> None:
        for name in ("tau", "theta"):
            value = getattr(self, name)
            if not value > 0:
                raise NonPositiveParameter(self._field_label(name), value)

    @classmethod
    def order_one(cls, tau: float, theta: float) -> TimeScaleRegime:
        return cls(Regime.ORDER_ONE, tau, theta)

    @classmethod
    def slow(cls, tau_hat: float, theta_hat: float) -> TimeScaleRegime:
        return cls(Regime.ORDER_EPS_MINUS2, tau_hat, theta_hat)

    @classmethod
    def from_polar(cls, s: float, psi: float) -> TimeScaleRegime:
        return cls.slow(s * math.cos(psi), s * math.sin(psi))

    @property
    def is_slow(self) -> bool:
        return self.kind is Regime.ORDER_EPS_MINUS2

    def relaxation_times(self, params: ModelParams) -> tuple[float, float]:
        """(tau, theta) on the O(1) clock of the PDE."""
        if self.is_slow:
            eps2 = params.epsilon**2
            return self.tau / eps2, self.theta / eps2
        return self.tau, self.theta

    def scaled_times(self, params: ModelParams) -> tuple[float, float]:
        """(tau_hat, theta_hat) = eps**2 * (tau, theta)."""
        if self.is_slow:
            return self.tau, self.theta
        eps2 = params.epsilon**2
        return self.tau * eps2, self.theta * eps2

    def _field_label(self, name: str) -> str:
        return f"{name}_hat" if self.kind is Regime.ORDER_EPS_MINUS2 else name


@dataclass(frozen=True)
class BackgroundState:
    u_bar: float
    v_bar: float
    w_bar: float
