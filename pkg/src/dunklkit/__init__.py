"""Rational Dunkl analysis: operators, intertwiners, transforms, verification.

The package is organized in layers.  ``rootsys`` and ``polyexact`` work in
exact rational arithmetic (root systems, reflection groups, the graded
intertwining operator on polynomials).  ``kernel``, ``transform``,
``intertwine1d``, and ``convolution`` are the numeric layer: the joint
eigenfunction kernel, the weighted integral transform, quadrature forms of
the intertwining operator and its dual with their inverses, and the
generalized translation / convolution structure built on top.  ``suites``
bundles cross-checks between independent computation routes into named
verification reports; ``cli`` exposes them as the ``dunkl-kit`` command.
"""

from .errors import (
    AccuracyError,
    AccuracyWarning,
    DegeneratePointError,
    DunklKitError,
    InternalInvariantError,
    InvalidArgumentError,
    NotARootSystemError,
    UnsupportedCaseError,
)
from .rootsys import (
    RootSystem,
    axis_product,
    load_root_system,
    mehta_by_quadrature,
    mehta_constant,
    rank_one,
    root_system_from_dict,
    root_system_to_dict,
    save_root_system,
    weight,
    weight_exact,
)
from .polyexact import (
    RationalPoly,
    apply_P_poly,
    apply_Q_poly,
    dunkl_apply,
    intertwine,
    intertwine_inverse,
    operator_prefactor,
)
from .kernel import (
    KernelConfig,
    bessel_j_normalized,
    check_bounds,
    kernel_1d,
    kernel_series,
    kernel_value,
)
from .transform import (
    DecayClass,
    SampledFunction,
    TransformPlan,
    classical_fourier,
    classical_fourier_many,
    dunkl_inverse,
    dunkl_inverse_many,
    dunkl_transform,
    dunkl_transform_many,
    fourier_bessel,
    make_plan,
    multiplier_P,
    multiplier_P_many,
    sampled,
)
from .functions import PolyGauss, SmoothBump, gaussian, standard_bump
from .intertwine1d import (
    DualDensity,
    IntertwiningDensity,
    V_k_num,
    V_k_num_product,
    default_line_plan,
    dual_inverse_via_transform,
    dual_via_transform,
    eta_pairing,
    inv_V_via_P,
    inv_V_via_Q,
    inv_tV_via_VkP,
    local_P,
    local_Q,
    mass_constant,
    mu_density,
    mu_quadrature,
    tV_k_num,
    tV_k_num_product,
    z_pairing,
)
from .convolution import (
    BumpProfile,
    ConcreteDistribution,
    approx_identity_check,
    convolve,
    convolve_many,
    distribution_convolve,
    kernel_multiplier,
    translate_measure,
    translate_spectral,
    translate_spectral_many,
)
from .report import CheckRecord, VerificationReport
from .suites import SUITES, SuiteConfig, run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "AccuracyWarning",
    "BumpProfile",
    "CheckRecord",
    "ConcreteDistribution",
    "DecayClass",
    "DegeneratePointError",
    "DualDensity",
    "DunklKitError",
    "IntertwiningDensity",
    "InternalInvariantError",
    "InvalidArgumentError",
    "KernelConfig",
    "NotARootSystemError",
    "PolyGauss",
    "RationalPoly",
    "RootSystem",
    "SUITES",
    "SampledFunction",
    "SmoothBump",
    "SuiteConfig",
    "TransformPlan",
    "UnsupportedCaseError",
    "V_k_num",
    "V_k_num_product",
    "VerificationReport",
    "apply_P_poly",
    "apply_Q_poly",
    "approx_identity_check",
    "axis_product",
    "bessel_j_normalized",
    "check_bounds",
    "classical_fourier",
    "classical_fourier_many",
    "convolve",
    "convolve_many",
    "default_line_plan",
    "distribution_convolve",
    "dual_inverse_via_transform",
    "dual_via_transform",
    "dunkl_apply",
    "dunkl_inverse",
    "dunkl_inverse_many",
    "dunkl_transform",
    "dunkl_transform_many",
    "eta_pairing",
    "fourier_bessel",
    "gaussian",
    "intertwine",
    "intertwine_inverse",
    "inv_V_via_P",
    "inv_V_via_Q",
    "inv_tV_via_VkP",
    "kernel_1d",
    "kernel_multiplier",
    "kernel_series",
    "kernel_value",
    "load_root_system",
    "local_P",
    "local_Q",
    "make_plan",
    "mass_constant",
    "mehta_by_quadrature",
    "mehta_constant",
    "mu_density",
    "mu_quadrature",
    "multiplier_P",
    "multiplier_P_many",
    "operator_prefactor",
    "rank_one",
    "root_system_from_dict",
    "root_system_to_dict",
    "run_suite",
    "sampled",
    "save_root_system",
    "standard_bump",
    "suite_names",
    "tV_k_num",
    "tV_k_num_product",
    "translate_measure",
    "translate_spectral",
    "translate_spectral_many",
    "weight",
    "weight_exact",
    "z_pairing",
]
