"""Root numbers, Kummer images and Selmer groups of Jacobians of the
Fermat-curve quotients y^p = x^r (delta - x)^s."""

from ._fermatjac import (
    ConsistencyError,
    DensityReport,
    DensityRow,
    HypothesisError,
    LocalImage,
    ParityResult,
    ParityScanReport,
    PrecisionError,
    RootNumberReport,
    SelmerReport,
    Triple,
    alpha_tau,
    b_value,
    bernoulli_mod_p,
    count_points,
    density,
    epsilon_p3,
    jacobi_sum,
    legendre,
    local_image_at_p,
    local_image_off_p,
    parity_check,
    parity_scan,
    regular,
    root_number,
    selmer,
    selmer_upper_bound,
    zeta_numerator,
)

__all__ = [
    "ConsistencyError",
    "DensityReport",
    "DensityRow",
    "HypothesisError",
    "LocalImage",
    "ParityResult",
    "ParityScanReport",
    "PrecisionError",
    "RootNumberReport",
    "SelmerReport",
    "Triple",
    "alpha_tau",
    "b_value",
    "bernoulli_mod_p",
    "count_points",
    "density",
    "epsilon_p3",
    "jacobi_sum",
    "legendre",
    "local_image_at_p",
    "local_image_off_p",
    "parity_check",
    "parity_scan",
    "regular",
    "root_number",
    "selmer",
    "selmer_upper_bound",
    "zeta_numerator",
]

__version__ = "0.1.0"
