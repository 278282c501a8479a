"""Direct time integration of the three-component system."""

from .classify import classify_dynamics
from .contour import extract_zero_contour
from .runner import initial_state, load_profile_csv, perturbation, run, simulation_grid
from .settings import SimConfig
from .snapshots import SnapshotWriter, read_snapshots
from .stepper import ImexStepper, SimState, implicit_band, step, trapezoid_weights

__all__ = [
    "ImexStepper",
    "SimConfig",
    "SimState",
    "SnapshotWriter",
    "classify_dynamics",
    "extract_zero_contour",
    "implicit_band",
    "initial_state",
    "load_profile_csv",
    "perturbation",
    "read_snapshots",
    "run",
    "simulation_grid",
    "step",
    "trapezoid_weights",
]
