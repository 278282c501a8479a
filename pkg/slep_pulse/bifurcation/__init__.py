from .codim2 import codim2_points
from .drift import drift_eigenvalue, drift_line, drift_unfolding
from .hopf import default_psi_grid, hopf_curve, hopf_point, transversality_closed_form, transversality_fd
from .landmarks import critical_radius, real_eig_landmarks
from .path import complex_root_at, local_model, splitting_constants, trace_eigen_path
from .regions import classify_region, even_mode_instability
from .roots import complex_newton, even_G, lambda_under, minimum_value, real_roots, root_velocity

__all__ = [
    "classify_region",
    "codim2_points",
    "complex_newton",
    "complex_root_at",
    "critical_radius",
    "default_psi_grid",
    "drift_eigenvalue",
    "drift_line",
    "drift_unfolding",
    "even_G",
    "even_mode_instability",
    "hopf_curve",
    "hopf_point",
    "lambda_under",
    "local_model",
    "minimum_value",
    "real_eig_landmarks",
    "real_roots",
    "root_velocity",
    "splitting_constants",
    "trace_eigen_path",
    "transversality_closed_form",
    "transversality_fd",
]
