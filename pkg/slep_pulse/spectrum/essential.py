"""Upper bound of the essential spectrum and the O(1)-regime critical eigenvalues."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from slep_pulse.domain.entities import DispersionSample, EssentialBound
from slep_pulse.domain.enums import Mode
from slep_pulse.domain.exceptions import PositiveBound
from slep_pulse.domain.value_objects import ModelParams, TimeScaleRegime
from slep_pulse.slep.context import SlepContext, critical_eigenvalue_order_one

from .dispersion import background_slope, dispersion_roots

logger = logging.getLogger(__name__)

DEFAULT_XI_MAX = 1e3
DEFAULT_SAMPLES = 2000
XI_MIN = 1e-4


def xi_grid(xi_max: float = DEFAULT_XI_MAX, n_samples: int = DEFAULT_SAMPLES, full: bool = False) -> np.ndarray:
    """0 plus a log-spaced grid up to xi_max; mirrored to negative xi when ``full``."""
    positive = np.concatenate(([0.0], np.geomspace(XI_MIN, xi_max, n_samples)))
    if not full:
        return positive
    return np.concatenate((-positive[:0:-1], positive))


def dispersion_samples(
    p: ModelParams,
    regime: TimeScaleRegime,
    xi_values: np.ndarray,
    threads: int = 1,
) -> list[DispersionSample]:
    m = background_slope(p)

    def compute(xi: float) -> DispersionSample:
        return dispersion_roots(float(xi), p, regime, m)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(compute, xi_values))
    return [compute(xi) for xi in xi_values]


def essential_bound(
    p: ModelParams,
    regime: TimeScaleRegime,
    xi_max: float = DEFAULT_XI_MAX,
    n_samples: int = DEFAULT_SAMPLES,
    threads: int = 1,
) -> EssentialBound:
    """Largest real part over the sampled dispersion curves.

    Raises:
        PositiveBound: the bound is not negative.
    """
    samples = dispersion_samples(p, regime, xi_grid(xi_max, n_samples), threads)
    best, argmax = -np.inf, 0.0
    for sample in samples:
        top = max(r.real for r in sample.roots)
        if top > best:
            best, argmax = top, sample.xi
    if best >= 0:
        raise PositiveBound(f"essential spectrum reaches Re = {best:.3g} at xi = {argmax:.3g}")
    scaled = best / p.epsilon**2 if regime.is_slow else None
    logger.info("essential bound %.6g at xi=%.4g", best, argmax)
    return EssentialBound(float(best), float(argmax), scaled)


def o1_critical_eigenvalue(ctx: SlepContext) -> tuple[float, float]:
    """eps^2-scaled critical eigenvalues (even, odd) for tau, theta = O(1).

    The even value equals -3 sqrt(2) (alpha e^{-2x*} + (beta/D) e^{-2x*/D});
    the odd one is the translation eigenvalue 0.
    """
    return (
        critical_eigenvalue_order_one(Mode.EVEN, ctx),
        critical_eigenvalue_order_one(Mode.ODD, ctx),
    )
