"""Zeros and factorization of an oscillatory kinetic dispersion function.

The package evaluates the dispersion function of a linearized kinetic
model with velocity-dependent collision coupling, decomposes its
boundary values on the real axis, counts its complex zeros through the
winding of the boundary ratio, factorizes it via a Cauchy-integral
representation, locates the discrete zero pair in closed quadrature
form, and assembles the associated eigenfunctions.
"""

from .dispersion import (
    BoundaryValues,
    FlowParams,
    GDecomposition,
    ThetaProfile,
    G_at,
    g_decomposition,
    lambda_at,
    lambda_boundary,
    lambda_infinity,
    theta_profile,
)
from .eigen import (
    EigenMode,
    continuous_pv_normalization,
    h_discrete,
    kinetic_residual_discrete,
    kinetic_residual_omega_zero,
    n_moments,
    omega_zero_modes,
    phi_discrete,
)
from .errors import (
    DegeneratePointError,
    DomainError,
    EsDispersionError,
    IndexMismatchError,
    NoDiscreteSpectrumError,
    NonDecayingModeError,
    NotAZeroError,
    OverflowGuardError,
    QuadratureError,
    SingularCoefficientError,
    ThresholdAmbiguousError,
    UnresolvedWindingError,
    ZeroAtInfinityError,
)
from .factorization import (
    V_at,
    X_at,
    build_kernel,
    factorization_residual,
    zeta,
)
from .specfun import (
    DEFAULT_QUAD,
    QuadratureSpec,
    dawson,
    l_func,
    lambda0,
    lambda0_boundary,
    s_func,
)
from .spectrum import (
    CriticalPoint,
    SpectrumReport,
    critical_frequency,
    critical_point,
    index,
    kappa_winding,
    omega_of_tau,
    resolve_kappa,
)
from .zeros import (
    SweepRow,
    ZeroPair,
    error_function,
    eta0_asymptotic,
    eta0_exact,
    zero_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryValues",
    "CriticalPoint",
    "DEFAULT_QUAD",
    "DegeneratePointError",
    "DomainError",
    "EigenMode",
    "EsDispersionError",
    "FlowParams",
    "GDecomposition",
    "G_at",
    "IndexMismatchError",
    "NoDiscreteSpectrumError",
    "NonDecayingModeError",
    "NotAZeroError",
    "OverflowGuardError",
    "QuadratureError",
    "QuadratureSpec",
    "SingularCoefficientError",
    "SpectrumReport",
    "SweepRow",
    "ThetaProfile",
    "ThresholdAmbiguousError",
    "UnresolvedWindingError",
    "V_at",
    "X_at",
    "ZeroAtInfinityError",
    "ZeroPair",
    "build_kernel",
    "continuous_pv_normalization",
    "critical_frequency",
    "critical_point",
    "dawson",
    "error_function",
    "eta0_asymptotic",
    "eta0_exact",
    "factorization_residual",
    "g_decomposition",
    "h_discrete",
    "index",
    "kappa_winding",
    "kinetic_residual_discrete",
    "kinetic_residual_omega_zero",
    "l_func",
    "lambda0",
    "lambda0_boundary",
    "lambda_at",
    "lambda_boundary",
    "lambda_infinity",
    "n_moments",
    "omega_of_tau",
    "omega_zero_modes",
    "phi_discrete",
    "resolve_kappa",
    "s_func",
    "theta_profile",
    "zero_sweep",
    "zeta",
    "__version__",
]
