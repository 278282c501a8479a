"""Essential-spectrum bounds, O(1)-regime critical eigenvalues and a discrete oracle."""

from .discrete import discrete_linearization_eigs, discrete_steady_state
from .dispersion import background_slope, cubic_coefficients, dispersion_roots, relative_residual, solve_cubic
from .essential import dispersion_samples, essential_bound, o1_critical_eigenvalue, xi_grid

__all__ = [
    "background_slope",
    "cubic_coefficients",
    "discrete_linearization_eigs",
    "discrete_steady_state",
    "dispersion_roots",
    "dispersion_samples",
    "essential_bound",
    "o1_critical_eigenvalue",
    "relative_residual",
    "solve_cubic",
    "xi_grid",
]
