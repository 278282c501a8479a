"""Simulation settings bound to one parameter set and regime.

Two clocks are supported. The fast clock integrates in t with the cubic
explicit, which limits dt to O(1). The slow clock integrates in eps^2 t,
the scale on which drift and Hopf instabilities of the slow regime grow,
and treats the cubic linearly implicitly so that one step spans many
units of t.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from slep_pulse.domain.enums import InitialCondition, PerturbationMode, SimClock
from slep_pulse.domain.exceptions import NonPositiveParameter
from slep_pulse.domain.value_objects import ModelParams, TimeScaleRegime

logger = logging.getLogger(__name__)

DEFAULT_DX = 7.0 * 2.0**-10
DEFAULT_DT = 0.012
DEFAULT_STEPS = 2000
DEFAULT_SLOW_DT = 0.004
DEFAULT_SLOW_T_END = 240.0

# dx / eps of the default grid at eps = 0.012; coarser grids under-resolve the layer
LAYER_RESOLUTION = DEFAULT_DX / 0.012


@dataclass(frozen=True)
class SimConfig:
    """Grid, clock and initial data of one run.

    ``dt`` and ``t_end`` are in units of ``clock``. Left as None they take
    the clock's defaults: 0.012 and 2000 steps on the fast clock, 0.004 and
    240 on the slow one. The clock defaults to slow for the slow regime.
    """

    params: ModelParams
    regime: TimeScaleRegime
    half_width: float = 7.0
    dx: float = DEFAULT_DX
    dt: float | None = None
    t_end: float | None = None
    clock: SimClock | None = None
    record_every: int = 10
    initial: InitialCondition = InitialCondition.PERTURBED
    perturbation_amplitude: float = 1e-3
    perturbation_mode: PerturbationMode = PerturbationMode.ANTISYMMETRIC
    initial_file: Path | None = None
    snapshots: Path | None = None
    reactions: bool = True

    def __post_init__(self) -> None:
        if self.clock is None:
            clock = SimClock.SLOW if self.regime.is_slow else SimClock.FAST
            object.__setattr__(self, "clock", clock)
        slow = self.clock is SimClock.SLOW
        if self.dt is None:
            object.__setattr__(self, "dt", DEFAULT_SLOW_DT if slow else DEFAULT_DT)
        if self.t_end is None:
            object.__setattr__(self, "t_end", DEFAULT_SLOW_T_END if slow else DEFAULT_STEPS * DEFAULT_DT)

        for name in ("half_width", "dx", "dt", "t_end"):
            value = getattr(self, name)
            if not value > 0:
                raise NonPositiveParameter(name, value)
        if self.record_every < 1:
            raise NonPositiveParameter("record_every", self.record_every)
        limit = LAYER_RESOLUTION * self.params.epsilon
        if self.dx > limit * (1.0 + 1e-9):
            logger.warning(
                "dx=%.4g exceeds %.4g (%.3g eps); the internal layer is under-resolved",
                self.dx, limit, LAYER_RESOLUTION,
            )

    @property
    def n_points(self) -> int:
        return int(round(2.0 * self.half_width / self.dx)) + 1

    @property
    def n_steps(self) -> int:
        return int(round(self.t_end / self.dt))

    @property
    def time_unit(self) -> float:
        """Length of one clock unit in t."""
        if self.clock is SimClock.SLOW:
            return 1.0 / self.params.epsilon**2
        return 1.0
