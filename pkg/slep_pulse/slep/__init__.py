"""SLEP-equation kernel: special functions, Green-function weights, G_od and G_ev."""

from .adjoint import (
    adjoint_identity_check,
    drift_identity,
    multiplicity_certificate,
    oracle_green_weight,
    squared_green_weights,
)
from .context import (
    KAPPA_STAR_SQ,
    G_ev,
    G_od,
    SlepContext,
    critical_eigenvalue_order_one,
    green_weight_derivative,
    green_weight_dynamic,
    green_weight_static,
    kappa_star_sq_by_quadrature,
    slep_derivative,
    slep_function,
    zeta0_from_static_weights,
)
from .functions import (
    RI_functions,
    g_pm,
    g_pm_derivative,
    transversality_quantity,
    transversality_quantity_trig,
)

__all__ = [
    "KAPPA_STAR_SQ",
    "G_ev",
    "G_od",
    "RI_functions",
    "SlepContext",
    "adjoint_identity_check",
    "critical_eigenvalue_order_one",
    "drift_identity",
    "g_pm",
    "g_pm_derivative",
    "green_weight_derivative",
    "green_weight_dynamic",
    "green_weight_static",
    "kappa_star_sq_by_quadrature",
    "multiplicity_certificate",
    "oracle_green_weight",
    "slep_derivative",
    "slep_function",
    "squared_green_weights",
    "transversality_quantity",
    "transversality_quantity_trig",
    "zeta0_from_static_weights",
]
