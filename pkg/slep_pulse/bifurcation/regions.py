"""Stability-region labels in the (tau_hat, theta_hat) plane."""

from __future__ import annotations

import logging
import math

from slep_pulse.domain.entities import RegionClassification
from slep_pulse.domain.enums import RegionLabel
from slep_pulse.domain.exceptions import DomainError
from slep_pulse.slep.context import SlepContext

from .drift import drift_line
from .hopf import hopf_point
from .landmarks import real_eig_landmarks
from .path import complex_root_at
from .roots import real_roots

logger = logging.getLogger(__name__)

DRIFT_TIE_TOLERANCE = 1e-10


def even_mode_instability(tau_hat: float, theta_hat: float, ctx: SlepContext) -> str | None:
    """Kind of even-mode instability ("complex" or "real"), or None when stable."""
    s = math.hypot(tau_hat, theta_hat)
    psi = math.atan2(theta_hat, tau_hat)
    landmarks = real_eig_landmarks(psi, ctx)
    if s <= landmarks.s_under:
        return None
    if s >= landmarks.s_over:
        roots = real_roots(s, psi, ctx)
        return "real" if roots and max(roots) > 0 else None
    lam = complex_root_at(s, psi, ctx, landmarks)
    return "complex" if lam.real > 0 else None


def classify_region(tau_hat: float, theta_hat: float, ctx: SlepContext) -> RegionClassification:
    """Drift flag from the drift line; Hopf flag from the even-mode pair.

    Points within 1e-10 of the drift line count as drift. The Hopf flag is
    the evaluated sign of the even pair; disagreement with s > s*(psi) is
    logged.
    """
    if tau_hat <= 0 or theta_hat <= 0:
        raise DomainError(f"tau_hat and theta_hat must be positive, got ({tau_hat}, {theta_hat})")
    line = drift_line(ctx)
    drift = line.signed_distance(tau_hat, theta_hat) <= DRIFT_TIE_TOLERANCE

    kind = even_mode_instability(tau_hat, theta_hat, ctx)
    hopf = kind is not None
    psi = math.atan2(theta_hat, tau_hat)
    s_star = hopf_point(psi, ctx, with_fd=False).s_star
    if hopf != (math.hypot(tau_hat, theta_hat) > s_star):
        logger.warning(
            "even-mode evaluation disagrees with s* = %.10g at (%g, %g)", s_star, tau_hat, theta_hat
        )
    label = RegionLabel.from_flags(drift, hopf)
    logger.debug("region at (%g, %g): %s", tau_hat, theta_hat, label.value)
    return RegionClassification(label, drift, hopf, kind)
