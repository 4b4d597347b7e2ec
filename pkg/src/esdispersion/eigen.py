"""Eigen-solutions of the separated kinetic equation.

The equation under study is

    mu dh/dx1 + z0 h(x1, mu)
        = (1/sqrt(pi)) * int e^(-t^2) (1 - a mu t) h(x1, t) dt,

with z0 = 1 - i Omega.  Separation h = exp(-x1 z0 / eta) Phi(eta, mu)
yields the discrete eigenfunction

    Phi(eta0, mu) = (1/sqrt(pi)) * eta0 (1 - b mu eta0) / (eta0 - mu)

at any zero eta0 of the dispersion function, normalized so that its
Gaussian moment n0 equals z0, with the first moment tied to it by
n1 = -i Omega eta0 n0 / z0.

On the continuous spectrum (eta real positive) the eigenfunction is
distribution-valued; its delta part only ever acts under integrals,
where it contributes the principal-value boundary value of lambda.  The
normalization identity then reads

    (1/sqrt(pi)) PV int e^(-mu^2) eta (1 - b mu eta)/(eta - mu) dmu
        + lambda_pv(eta) = z0,

with lambda_pv(eta) = -i Omega + (1 - b eta^2) l(eta).  The principal
value is evaluated by singularity subtraction: the numerator is linear
in mu, so the difference quotient is the constant b eta^2 / sqrt(pi),
and the remaining term integrates in closed form through l.

At Omega = 0 the discrete spectrum degenerates into exactly two
polynomial modes h1 = 1 and h2 = x1 - 2 mu / (2 + a).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .dispersion import FlowParams, lambda_at, lambda_infinity
from .errors import (
    DomainError,
    NonDecayingModeError,
    NotAZeroError,
)
from .specfun import DEFAULT_QUAD, SQRT_PI, QuadratureSpec, l_func, quad_complex

# Residual gate for accepting a spectral parameter as a zero.
ZERO_RESIDUAL_TOL = 1e-6

# Below this distance from the singularity the difference quotient is
# replaced by its exact constant limit to avoid 0/0.
_QUOTIENT_GUARD = 1e-6


@dataclass(frozen=True)
class EigenMode:
    """A spectral parameter tagged with the kind of mode it labels."""

    eta: complex
    kind: str
    params: FlowParams

    def __post_init__(self) -> None:
        if self.kind not in ("discrete", "continuous", "omega-zero"):
            raise DomainError(f"unknown mode kind {self.kind!r}")
        if self.kind == "continuous":
            eta = complex(self.eta)
            if eta.imag != 0.0 or eta.real <= 0.0:
                raise DomainError("continuous-spectrum eta must be real positive")


def _check_zero(p: FlowParams, eta0: complex, spec: QuadratureSpec) -> None:
    residual = abs(lambda_at(p, eta0, spec)) / abs(lambda_infinity(p))
    if not residual < ZERO_RESIDUAL_TOL:
        raise NotAZeroError(
            f"eta0 = {eta0} has zero residual {residual:.3e}, "
            f"above the gate {ZERO_RESIDUAL_TOL}"
        )


def _phi(p: FlowParams, eta0: complex, mu: float) -> complex:
    return eta0 * (1.0 - p.b * mu * eta0) / ((eta0 - mu) * SQRT_PI)


def phi_discrete(
    p: FlowParams,
    eta0: complex,
    mu: float,
    spec: QuadratureSpec = DEFAULT_QUAD,
    check: bool = True,
) -> complex:
    """Discrete eigenfunction Phi(eta0, mu) at real mu.

    The spectral parameter is residual-checked against the dispersion
    function unless ``check`` is disabled (callers evaluating Phi inside
    an integrand should check once upfront instead).
    """
    mu = float(mu)
    if not math.isfinite(mu):
        raise DomainError("mu must be finite")
    if check:
        _check_zero(p, eta0, spec)
    return _phi(p, complex(eta0), mu)


def h_discrete(
    p: FlowParams,
    eta0: complex,
    x1: float,
    mu: float,
    spec: QuadratureSpec = DEFAULT_QUAD,
    check: bool = True,
) -> complex:
    """Decaying discrete mode exp(-x1 z0 / eta0) Phi(eta0, mu).

    Requires Re(z0 / eta0) > 0 so the mode decays away from the wall.
    """
    x1 = float(x1)
    if not (math.isfinite(x1) and x1 >= 0.0):
        raise DomainError(f"x1 must be nonnegative, got {x1}")
    eta0 = complex(eta0)
    rate = p.z0 / eta0
    if not rate.real > 0.0:
        raise NonDecayingModeError(
            f"Re(z0/eta0) = {rate.real:.3e} <= 0: the mode does not decay"
        )
    return cmath.exp(-x1 * rate) * phi_discrete(p, eta0, mu, spec, check=check)


def n_moments(
    p: FlowParams, eta0: complex, spec: QuadratureSpec = DEFAULT_QUAD, check: bool = True
) -> tuple[complex, complex]:
    """Gaussian moments n0, n1 of the discrete eigenfunction, by quadrature."""
    eta0 = complex(eta0)
    if check:
        _check_zero(p, eta0, spec)
    tm = spec.tau_max

    def moment(k: int) -> complex:
        return quad_complex(
            lambda t: math.exp(-t * t) * t**k * _phi(p, eta0, t), -tm, tm, spec
        )

    return moment(0), moment(1)


def kinetic_residual_discrete(
    p: FlowParams,
    eta0: complex,
    x1: float,
    mu: float,
    spec: QuadratureSpec = DEFAULT_QUAD,
) -> float:
    """Residual of the discrete mode in the kinetic equation at (x1, mu).

    The x1 derivative is analytic (the mode is exponential in x1); the
    collision moments on the right-hand side are computed by quadrature,
    so this is an end-to-end substitution check.
    """
    eta0 = complex(eta0)
    _check_zero(p, eta0, spec)
    h = h_discrete(p, eta0, x1, mu, spec, check=False)
    dh_dx1 = -(p.z0 / eta0) * h
    n0, n1 = n_moments(p, eta0, spec, check=False)
    decay = cmath.exp(-float(x1) * p.z0 / eta0)
    rhs = (decay * n0 - p.a * float(mu) * decay * n1) / SQRT_PI
    return abs(float(mu) * dh_dx1 + p.z0 * h - rhs)


def continuous_pv_normalization(
    p: FlowParams, eta: float, spec: QuadratureSpec = DEFAULT_QUAD
) -> float:
    """Residual of the continuous-spectrum normalization identity.

    Returns |PV-moment + lambda_pv(eta) - z0| at real eta > 0.  The
    principal value is computed by subtracting the singularity: the
    difference quotient of the numerator is constant, and the subtracted
    term integrates in closed form through l.
    """
    eta = float(eta)
    if not (math.isfinite(eta) and eta > 0.0):
        raise DomainError(f"eta must be real positive, got {eta}")
    b = p.b
    tm = spec.tau_max

    def g(m: float) -> complex:
        return eta * (1.0 - b * m * eta) / SQRT_PI

    g_eta = g(eta)

    def smooth(m: float) -> complex:
        if abs(eta - m) < _QUOTIENT_GUARD:
            return math.exp(-m * m) * b * eta * eta / SQRT_PI
        return math.exp(-m * m) * (g(m) - g_eta) / (eta - m)

    pv_smooth = quad_complex(smooth, -tm, tm, spec, points=[eta])
    # PV int e^(-m^2)/(eta - m) dm = -sqrt(pi) (l(eta) - 1) / eta
    pv_singular = g_eta * (-SQRT_PI) * (l_func(eta) - 1.0) / eta
    lambda_pv = -1j * p.omega + (1.0 - b * eta * eta) * l_func(eta)
    total = pv_smooth + pv_singular + lambda_pv
    return abs(total - p.z0)


def omega_zero_modes(a: float, x1: float, mu: float) -> tuple[float, float]:
    """The two polynomial modes at Omega = 0: (1, x1 - 2 mu / (2 + a))."""
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"a must lie in [0, 1], got {a}")
    return 1.0, float(x1) - 2.0 * float(mu) / (2.0 + a)


def kinetic_residual_omega_zero(
    a: float,
    mode: int,
    x1: float,
    mu: float,
    spec: QuadratureSpec = DEFAULT_QUAD,
) -> float:
    """Residual of an Omega = 0 polynomial mode in the kinetic equation.

    ``mode`` selects h1 (1) or h2 (2).  The collision moment is computed
    by quadrature, so the cancellation is verified numerically.
    """
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"a must lie in [0, 1], got {a}")
    if mode not in (1, 2):
        raise DomainError(f"mode must be 1 or 2, got {mode}")
    x1 = float(x1)
    mu = float(mu)
    if mode == 1:
        h_mu = 1.0
        dh_dx1 = 0.0

        def h_of(t: float) -> float:
            return 1.0

    else:
        h_mu = x1 - 2.0 * mu / (2.0 + a)
        dh_dx1 = 1.0

        def h_of(t: float) -> float:
            return x1 - 2.0 * t / (2.0 + a)

    tm = spec.tau_max
    rhs = quad_complex(
        lambda t: math.exp(-t * t) * (1.0 - a * mu * t) * h_of(t), -tm, tm, spec
    ) / SQRT_PI
    lhs = mu * dh_dx1 + h_mu
    return abs(lhs - rhs)
