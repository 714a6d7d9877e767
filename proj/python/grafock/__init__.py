"""Finite-truncation Grassmann algebra, Fock-space operators, weighted
distribution-space norms, and covariance-reproducing stochastic processes."""

from grafock._grafock import (
    Element,
    GrafockError,
    ProcessModel,
    SpectralDensity,
    WeightSystem,
    berezin_integral,
    check_vage,
    conjugate,
    covariance_oracle,
    exp_eval,
    fbm_closed_form,
    grade_split,
    hermite_xi,
    index_product,
    inner_product,
    invert,
    invert_distribution,
    left_derivative,
    left_multiply,
    linear_combine,
    multiply,
    operator_matrix,
    p_norm,
    power_series_eval,
    t_apply,
    vage_constant,
    weighted_norm,
)

__all__ = [
    "Element",
    "GrafockError",
    "ProcessModel",
    "SpectralDensity",
    "WeightSystem",
    "berezin_integral",
    "check_vage",
    "conjugate",
    "covariance_oracle",
    "exp_eval",
    "fbm_closed_form",
    "grade_split",
    "hermite_xi",
    "index_product",
    "inner_product",
    "invert",
    "invert_distribution",
    "left_derivative",
    "left_multiply",
    "linear_combine",
    "multiply",
    "operator_matrix",
    "p_norm",
    "power_series_eval",
    "t_apply",
    "vage_constant",
    "weighted_norm",
]
