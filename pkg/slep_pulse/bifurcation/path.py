"""Global path of the critical even-mode eigenvalue pair along a ray.

For s < s_under and s > s_over the pair is real (two simple roots); in
between it is a complex-conjugate pair. The complex segment is followed by
secant-predictor / complex-Newton continuation. Within a small window of
either double root Newton degenerates, and the square-root local model
(lambda - lambda0)^2 = c (s - s0) supplies the predictor instead.
"""

from __future__ import annotations

import cmath
import logging

import numpy as np

from slep_pulse.domain.entities import EigenPath, Landmarks, PathSample
from slep_pulse.domain.enums import RootKind
from slep_pulse.domain.exceptions import ContinuationStall, NoConvergence
from slep_pulse.slep.context import SlepContext

from .hopf import hopf_point
from .landmarks import real_eig_landmarks
from .roots import complex_newton, even_G, real_roots

logger = logging.getLogger(__name__)

INITIAL_STEP_DIVISIONS = 200
STEP_FLOOR = 1e-12
SWITCH_FRACTION = 1e-3
MAX_CORRECTOR_ITERATIONS = 5
EASY_ITERATIONS = 3
EASY_STEPS_BEFORE_GROWTH = 3
DEFAULT_SAMPLES = 400


def splitting_constants(landmarks: Landmarks, ctx: SlepContext) -> tuple[float, float]:
    """c = -2 G_s / G_lambda_lambda at both double roots, by finite differences."""
    psi = landmarks.psi
    constants = []
    for lam0, s0 in (
        (landmarks.lambda_under, landmarks.s_under),
        (landmarks.lambda_over, landmarks.s_over),
    ):
        hs = 1e-6 * s0
        G_s = (even_G(lam0, s0 + hs, psi, ctx) - even_G(lam0, s0 - hs, psi, ctx)).real / (2.0 * hs)
        hl = 1e-4 * max(1.0, abs(lam0))
        G_ll = (
            even_G(lam0 + hl, s0, psi, ctx) - 2.0 * even_G(lam0, s0, psi, ctx) + even_G(lam0 - hl, s0, psi, ctx)
        ).real / hl**2
        constants.append(-2.0 * G_s / G_ll)
    return constants[0], constants[1]


def local_model(lam0: float, s0: float, c: float, s: float) -> complex:
    """Upper root of (lambda - lambda0)^2 = c (s - s0)."""
    return lam0 + cmath.sqrt(complex(c * (s - s0)))


def _polished_model(lam0: float, s0: float, c: float, s: float, psi: float, ctx: SlepContext) -> complex:
    guess = local_model(lam0, s0, c, s)
    try:
        lam, _ = complex_newton(guess, s, psi, ctx, maxiter=20)
    except NoConvergence:
        return guess
    if lam.imag <= 0 or abs(lam - guess) > abs(guess.imag):
        return guess
    return lam


def _continue_complex_branch(
    targets: list[float],
    landmarks: Landmarks,
    c_minus: float,
    c_plus: float,
    ctx: SlepContext,
) -> dict[float, complex]:
    psi = landmarks.psi
    s_under, s_over = landmarks.s_under, landmarks.s_over
    span = s_over - s_under
    window = SWITCH_FRACTION * span
    step = span / INITIAL_STEP_DIVISIONS
    floor = STEP_FLOOR * s_under

    history: list[tuple[float, complex]] = []
    s_cur = s_under
    easy = 0
    out: dict[float, complex] = {}
    for target in targets:
        while s_cur < target:
            s_next = min(s_cur + step, target)
            if s_next - s_under <= window:
                lam = _polished_model(landmarks.lambda_under, s_under, c_minus, s_next, psi, ctx)
            elif s_over - s_next <= window:
                lam = _polished_model(landmarks.lambda_over, s_over, c_plus, s_next, psi, ctx)
            else:
                if len(history) >= 2:
                    (s0, l0), (s1, l1) = history[-2], history[-1]
                    predictor = l1 + (l1 - l0) / (s1 - s0) * (s_next - s1)
                else:
                    predictor = local_model(landmarks.lambda_under, s_under, c_minus, s_next)
                try:
                    lam, iterations = complex_newton(
                        predictor, s_next, psi, ctx, maxiter=MAX_CORRECTOR_ITERATIONS
                    )
                    if lam.imag <= 0:
                        raise NoConvergence("corrector fell onto the real axis")
                except NoConvergence:
                    step *= 0.5
                    easy = 0
                    if step < floor:
                        raise ContinuationStall(
                            f"continuation step underflow at s={s_cur:.10g}, psi={psi:.6g}"
                        ) from None
                    continue
                if iterations <= EASY_ITERATIONS:
                    easy += 1
                    if easy >= EASY_STEPS_BEFORE_GROWTH:
                        step *= 2.0
                        easy = 0
                else:
                    easy = 0
            history.append((s_next, lam))
            s_cur = s_next
        out[target] = history[-1][1]
    return out


def trace_eigen_path(
    psi: float,
    ctx: SlepContext,
    s_range: tuple[float, float] | None = None,
    n_samples: int = DEFAULT_SAMPLES,
    s_values: np.ndarray | list[float] | None = None,
) -> EigenPath:
    """Sample the critical even-mode pair over s on the ray of angle psi.

    The sample set always includes s_under, s* and s_over. Complex samples
    store the root with positive imaginary part; its partner is the conjugate.
    """
    landmarks = real_eig_landmarks(psi, ctx)
    hopf = hopf_point(psi, ctx, with_fd=False)
    c_minus, c_plus = splitting_constants(landmarks, ctx)

    if s_values is None:
        lo, hi = s_range or (0.5 * landmarks.s_under, 2.0 * landmarks.s_over)
        s_values = np.geomspace(lo, hi, n_samples)
    grid = sorted({float(s) for s in s_values} | {landmarks.s_under, hopf.s_star, landmarks.s_over})

    inside = [s for s in grid if landmarks.s_under < s < landmarks.s_over]
    complex_roots = _continue_complex_branch(inside, landmarks, c_minus, c_plus, ctx)

    samples: list[PathSample] = []
    for s in grid:
        if s == landmarks.s_under:
            samples.append(PathSample(s, complex(landmarks.lambda_under), RootKind.DOUBLE))
        elif s == landmarks.s_over:
            samples.append(PathSample(s, complex(landmarks.lambda_over), RootKind.DOUBLE))
        elif s in complex_roots:
            samples.append(PathSample(s, complex_roots[s], RootKind.COMPLEX_PAIR))
        else:
            for lam in real_roots(s, psi, ctx):
                samples.append(PathSample(s, complex(lam), RootKind.REAL))

    logger.info(
        "traced %d samples at psi=%.6g (s_under=%.6g, s*=%.6g, s_over=%.6g)",
        len(samples), psi, landmarks.s_under, hopf.s_star, landmarks.s_over,
    )
    return EigenPath(psi, samples, landmarks, hopf.s_star, c_minus, c_plus)


def complex_root_at(s: float, psi: float, ctx: SlepContext, landmarks: Landmarks | None = None) -> complex:
    """Upper complex root for s strictly inside (s_under, s_over)."""
    landmarks = landmarks or real_eig_landmarks(psi, ctx)
    if not landmarks.s_under < s < landmarks.s_over:
        raise ValueError(f"s={s} outside the complex window")
    c_minus, c_plus = splitting_constants(landmarks, ctx)
    return _continue_complex_branch([s], landmarks, c_minus, c_plus, ctx)[s]
