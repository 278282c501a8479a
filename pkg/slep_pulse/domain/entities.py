"""Result records produced by the pulse, bifurcation, spectrum and simulation modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .enums import DynamicsLabel, RegionLabel, RootKind


@dataclass(frozen=True)
class LayerData:
    x_star: float
    v_star: float
    w_star: float
    b0: float
    c0: float
    b1: float
    c1: float
    s: float
    a0: float


@dataclass(frozen=True)
class DriftLine:
    """Line C1 * tau_hat + C2 * theta_hat = 1 in the slow-parameter plane."""

    C1: float
    C2: float

    def value(self, tau_hat: float, theta_hat: float) -> float:
        return self.C1 * tau_hat + self.C2 * theta_hat

    def signed_distance(self, tau_hat: float, theta_hat: float) -> float:
        """1 - C1*tau_hat - C2*theta_hat, i.e. dG_od/dlambda at 0."""
        return 1.0 - self.value(tau_hat, theta_hat)

    def sample(self, n: int = 101) -> list[tuple[float, float]]:
        taus = np.linspace(0.0, 1.0 / self.C1, n)
        return [(float(t), float((1.0 - self.C1 * t) / self.C2)) for t in taus]


@dataclass(frozen=True)
class DriftUnfolding:
    A1: float
    A2: float
    A3: float
    tau0: float
    theta0: float

    def eigenvalue(self, tau_hat: float, theta_hat: float) -> float:
        """Linear model of the drift eigenvalue near (tau0, theta0)."""
        return (self.A2 * (tau_hat - self.tau0) + self.A3 * (theta_hat - self.theta0)) / self.A1


@dataclass(frozen=True)
class HopfPoint:
    psi: float
    eta_star: float
    xi_star: float
    s_star: float
    tau_hat: float
    theta_hat: float
    residual: float
    transversality: float
    transversality_fd: float | None = None


@dataclass(frozen=True)
class HopfCurve:
    points: list[HopfPoint]
    failures: list[tuple[float, str]] = field(default_factory=list)


@dataclass(frozen=True)
class Landmarks:
    psi: float
    s_c: float
    s_under: float
    s_over: float
    lambda_under: float
    lambda_over: float


@dataclass(frozen=True)
class PathSample:
    s: float
    lam: complex
    kind: RootKind


@dataclass(frozen=True)
class EigenPath:
    psi: float
    samples: list[PathSample]
    landmarks: Landmarks
    s_star: float
    c_minus: float
    c_plus: float


@dataclass(frozen=True)
class Codim2Point:
    psi: float
    tau_hat: float
    theta_hat: float
    xi_star: float
    line_residual: float
    hopf_residual: float


@dataclass(frozen=True)
class RegionClassification:
    label: RegionLabel
    drift: bool
    hopf: bool
    even_instability: str | None = None  # "complex" | "real"


@dataclass(frozen=True)
class DispersionSample:
    xi: float
    roots: tuple[complex, complex, complex]


@dataclass(frozen=True)
class EssentialBound:
    bound: float
    argmax_xi: float
    scaled_bound: float | None = None


@dataclass(frozen=True)
class DiscreteSpectrum:
    eigenvalues: np.ndarray
    parity: str
    spacing: float
    target: complex = 0j


@dataclass
class SimTrajectory:
    times: np.ndarray
    x_minus: np.ndarray
    x_plus: np.ndarray
    label: DynamicsLabel = DynamicsLabel.INDETERMINATE
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @property
    def center(self) -> np.ndarray:
        return 0.5 * (self.x_minus + self.x_plus)

    @property
    def width(self) -> np.ndarray:
        return self.x_plus - self.x_minus


@dataclass(frozen=True)
class OutputFile:
    path: str
    sha256: str
    size: int


@dataclass
class RunManifest:
    command: str
    config: dict[str, Any]
    version: str
    wall_clock: float = 0.0
    files: list[OutputFile] = field(default_factory=list)
