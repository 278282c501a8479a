"""Direct finite-difference eigenvalues of the linearization about a pulse.

The pulse is even, so the linearization splits into even and odd parts.
Each part is discretized on the half-line [0, L] with a uniform grid:
Neumann (even) or Dirichlet (odd) closure at 0 and Neumann at L. The
composite profile is first polished into a discrete steady state by Newton,
then the generalized problem A phi = lambda T phi, T = diag(1, tau, theta),
is solved by shift-invert Arnoldi around a (possibly complex) target.
"""

from __future__ import annotations

import logging

import numpy as np
from scipy import sparse
from scipy.sparse import linalg as sla

from slep_pulse.domain.entities import DiscreteSpectrum
from slep_pulse.domain.exceptions import NoConvergence, ResolutionError
from slep_pulse.domain.value_objects import ModelParams, TimeScaleRegime
from slep_pulse.pulse.profiles import PulseSolution

logger = logging.getLogger(__name__)

DEFAULT_LENGTH = 7.0
DEFAULT_GRID = 4096
DEFAULT_EIGS = 6
NEWTON_TOL = 1e-10
NEWTON_MAX_ITER = 30
PARITIES = ("even", "odd")


def _laplacian(n: int, h: float, parity: str) -> sparse.csr_matrix:
    """Second difference on nodes 0..n-1 (even) or 1..n-1 (odd)."""
    size = n if parity == "even" else n - 1
    main = np.full(size, -2.0)
    upper = np.ones(size - 1)
    lower = np.ones(size - 1)
    if parity == "even":
        upper[0] = 2.0
    lower[-1] = 2.0
    return (sparse.diags([lower, main, upper], [-1, 0, 1], format="csr") / h**2).tocsr()


def _residual(z: np.ndarray, lap: sparse.csr_matrix, p: ModelParams) -> np.ndarray:
    u, v, w = np.split(z, 3)
    eps = p.epsilon
    return np.concatenate(
        (
            eps**2 * (lap @ u) + u - u**3 - eps * (p.alpha * v + p.beta * w + p.gamma),
            lap @ v + u - v,
            p.D**2 * (lap @ w) + u - w,
        )
    )


def _linearization(u: np.ndarray, lap: sparse.csr_matrix, p: ModelParams) -> sparse.csc_matrix:
    eye = sparse.identity(lap.shape[0], format="csr")
    eps = p.epsilon
    return sparse.bmat(
        [
            [eps**2 * lap + sparse.diags(1.0 - 3.0 * u**2), -eps * p.alpha * eye, -eps * p.beta * eye],
            [eye, lap - eye, None],
            [eye, None, p.D**2 * lap - eye],
        ],
        format="csc",
    )


def discrete_steady_state(
    pulse: PulseSolution,
    n_grid: int = DEFAULT_GRID,
    length: float = DEFAULT_LENGTH,
) -> tuple[np.ndarray, np.ndarray]:
    """Newton-polished (u, v, w) on the half-line grid, stacked; returns (x, z)."""
    p = pulse.params
    x = np.linspace(0.0, length, n_grid)
    h = x[1] - x[0]
    lap = _laplacian(n_grid, h, "even")
    u, v, w = pulse.evaluate(x)
    z = np.concatenate((u, v, w))
    for it in range(1, NEWTON_MAX_ITER + 1):
        F = _residual(z, lap, p)
        J = _linearization(z[:n_grid], lap, p)
        step = sla.spsolve(J, -F)
        z = z + step
        size = float(np.max(np.abs(step)))
        logger.debug("steady-state Newton %d: |step|=%.3e", it, size)
        if size < NEWTON_TOL:
            return x, z
    raise NoConvergence(f"discrete steady state did not converge in {NEWTON_MAX_ITER} steps")


def _parity_eigs(
    u: np.ndarray,
    h: float,
    parity: str,
    p: ModelParams,
    tau: float,
    theta: float,
    n_eigs: int,
    target: complex,
) -> np.ndarray:
    n = u.size
    lap = _laplacian(n, h, parity)
    u_part = u if parity == "even" else u[1:]
    A = _linearization(u_part, lap, p)
    size = lap.shape[0]
    T = sparse.diags(np.concatenate((np.ones(size), np.full(size, tau), np.full(size, theta))), format="csc")

    dtype = complex if complex(target).imag != 0 else float
    shifted = (A - complex(target).real * T) if dtype is float else (A.astype(complex) - target * T)
    lu = sla.splu(shifted.tocsc())

    def matvec(vec: np.ndarray) -> np.ndarray:
        return lu.solve(np.asarray(T @ vec, dtype=dtype))

    operator = sla.LinearOperator(shifted.shape, matvec=matvec, dtype=dtype)
    k = min(n_eigs, shifted.shape[0] - 2)
    mu = sla.eigs(operator, k=k, which="LM", return_eigenvectors=False)
    lam = target + 1.0 / mu
    return lam[np.argsort(np.abs(lam - target))]


def discrete_linearization_eigs(
    pulse: PulseSolution,
    regime: TimeScaleRegime,
    n_grid: int = DEFAULT_GRID,
    n_eigs: int = DEFAULT_EIGS,
    length: float = DEFAULT_LENGTH,
    target: complex = 0j,
    parity: str = "both",
) -> DiscreteSpectrum:
    """Eigenvalues nearest ``target`` of the discretized linearization (O(1) clock).

    Raises:
        ResolutionError: grid spacing exceeds eps/4.
    """
    p = pulse.params
    h = length / (n_grid - 1)
    if h > 0.25 * p.epsilon:
        raise ResolutionError(f"grid spacing {h:.3g} exceeds eps/4={0.25 * p.epsilon:.3g}")
    if pulse.layer.x_star >= length:
        raise ResolutionError(f"half-width {length} does not contain the layer at {pulse.layer.x_star:.6g}")
    wanted = PARITIES if parity == "both" else (parity,)
    if any(w not in PARITIES for w in wanted):
        raise ValueError(f"parity must be even, odd or both, got {parity!r}")

    tau, theta = regime.relaxation_times(p)
    _, z = discrete_steady_state(pulse, n_grid, length)
    u = z[:n_grid]
    found = [_parity_eigs(u, h, w, p, tau, theta, n_eigs, target) for w in wanted]
    eigenvalues = np.concatenate(found)
    eigenvalues = eigenvalues[np.argsort(np.abs(eigenvalues - target))]
    logger.info(
        "discrete spectrum (%s, n=%d): nearest to %s is %s", parity, n_grid, target, eigenvalues[0]
    )
    return DiscreteSpectrum(eigenvalues, parity, h, complex(target))
