"""Matched-asymptotic construction of the standing one-pulse."""

from .layer import (
    build_layer,
    first_order_constants,
    first_order_constants_linear,
    layer_function,
    layer_values,
    matching_residuals,
    solve_layer_position,
)
from .profiles import (
    PulseSolution,
    build_pulse,
    composite_profile,
    cutoff,
    default_grid,
    inner_profile,
    outer_inhibitors,
)

__all__ = [
    "PulseSolution",
    "build_layer",
    "build_pulse",
    "composite_profile",
    "cutoff",
    "default_grid",
    "first_order_constants",
    "first_order_constants_linear",
    "inner_profile",
    "layer_function",
    "layer_values",
    "matching_residuals",
    "outer_inhibitors",
    "solve_layer_position",
]
