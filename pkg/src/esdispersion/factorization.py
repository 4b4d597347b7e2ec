"""Solution of the homogeneous Riemann problem for the coefficient G.

The canonical function is

    X(z) = z^(-kappa) * exp V(z),
    V(z) = (1/pi) * int_0^inf zeta(tau) / (tau - z) dtau,
    zeta(tau) = theta(tau)/2 - (i/2) ln|G(tau)| - pi kappa,

with theta the continuous argument of G fixed at theta(0) = 0.  Since
theta(inf) = 2 pi kappa and |G| -> 1 at Gaussian rate, zeta decays fast
enough for V to converge, V(z) -> 0 like 1/z, and X(z) -> z^(-kappa).

These properties pin the factorization of the dispersion function:

    kappa = 1:  lambda(z) = -lambda(inf) (z^2 - eta0^2) X(z) X(-z),
    kappa = 0:  lambda(z) =  lambda(inf) X(z) X(-z),

where the zero-index sign is forced by X(z) X(-z) -> 1 at infinity.
Both identities are verified numerically through
:func:`factorization_residual`.

Pointwise theta between anchor nodes is evaluated exactly as
theta(anchor) plus the principal-branch increment of the raw angle,
which is valid because anchors are refined until adjacent raw steps are
small.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dispersion import (
    FlowParams,
    _continue_angle,
    _g1g2g0,
    _principal,
    _raw_angle,
    lambda_at,
    lambda_infinity,
)
from .errors import DomainError, OverflowGuardError, UnresolvedWindingError
from .specfun import AXIS_GUARD, DEFAULT_QUAD, QuadratureSpec, cauchy_quad
from .spectrum import SpectrumReport

TWO_PI = 2.0 * math.pi

# Anchor refinement bound; small enough that anchored continuation of the
# angle between anchors is exact with a wide margin.
_ANCHOR_STEP = 0.4

_N_ANCHORS = 481


@dataclass(frozen=True, eq=False)
class CauchyKernelData:
    """Sampled Riemann-problem kernel for one parameter set.

    Holds the anchor nodes with their raw and continuous angles, the
    resolved index kappa, and the zeta samples used by the Cauchy
    integral.
    """

    params: FlowParams
    kappa: int
    quad: QuadratureSpec
    tau: np.ndarray
    raw_angle: np.ndarray
    theta: np.ndarray
    zeta: np.ndarray

    @property
    def zeta_samples(self) -> tuple[tuple[float, complex], ...]:
        return tuple(zip(self.tau.tolist(), self.zeta.tolist()))


def _log_abs_g(p: FlowParams, tau: float) -> float:
    g1, g2, g0 = _g1g2g0(p, tau)
    return math.log(math.hypot(g1, g2) / g0)


@lru_cache(maxsize=32)
def _kernel(p: FlowParams, spec: QuadratureSpec) -> CauchyKernelData:
    nodes = np.linspace(0.0, spec.tau_max, _N_ANCHORS)
    taus, raw, theta = _continue_angle(p, nodes, spec, max_step=_ANCHOR_STEP)
    end = float(theta[-1])
    kappa = int(round(end / TWO_PI))
    if kappa not in (0, 1) or abs(end - TWO_PI * kappa) > 0.5:
        raise UnresolvedWindingError(
            f"theta(inf) = {end:.6f} did not settle near 0 or 2 pi"
        )
    log_abs = np.array([_log_abs_g(p, t) for t in taus])
    zeta = 0.5 * theta - 0.5j * log_abs - math.pi * kappa
    return CauchyKernelData(
        params=p,
        kappa=kappa,
        quad=spec,
        tau=taus,
        raw_angle=raw,
        theta=theta,
        zeta=zeta,
    )


def build_kernel(p: FlowParams, spec: QuadratureSpec = DEFAULT_QUAD) -> CauchyKernelData:
    """Kernel data for (p, spec); results are cached per parameter set."""
    return _kernel(p, spec)


def _theta_at(kernel: CauchyKernelData, tau: float) -> float:
    k = int(np.searchsorted(kernel.tau, tau, side="right")) - 1
    k = min(max(k, 0), len(kernel.tau) - 1)
    raw = _raw_angle(kernel.params, tau)
    return float(kernel.theta[k]) + _principal(raw - float(kernel.raw_angle[k]))


def _zeta_at(kernel: CauchyKernelData, kappa: int, tau: float) -> complex:
    theta = _theta_at(kernel, tau)
    return complex(
        0.5 * theta - math.pi * kappa,
        -0.5 * _log_abs_g(kernel.params, tau),
    )


def zeta(
    p: FlowParams, kappa: int, tau: float, spec: QuadratureSpec = DEFAULT_QUAD
) -> complex:
    """Riemann-problem exponent sample theta/2 - (i/2) ln|G| - pi kappa."""
    tau = float(tau)
    if not math.isfinite(tau) or tau < 0:
        raise DomainError(f"tau must be finite and nonnegative, got {tau}")
    if kappa not in (0, 1):
        raise DomainError(f"kappa must be 0 or 1, got {kappa}")
    return _zeta_at(build_kernel(p, spec), kappa, tau)


def _cut_distance(z: complex) -> float:
    if z.real >= 0.0:
        return abs(z.imag)
    return abs(z)


def V_at(p: FlowParams, z: complex, spec: QuadratureSpec = DEFAULT_QUAD) -> complex:
    """Cauchy-type integral V(z) = (1/pi) int_0^tau_max zeta(t)/(t - z) dt.

    The evaluation point must stay off the positive half-axis, where the
    integral needs one-sided limits instead.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("z must be finite")
    if _cut_distance(z) <= AXIS_GUARD:
        raise DomainError(
            "z lies on (or numerically on) the positive half-axis; "
            "approach it through explicit one-sided limits instead"
        )
    kernel = build_kernel(p, spec)
    kappa = kernel.kappa
    tau_max = spec.tau_max

    def zeta_eval(t: float) -> complex:
        return _zeta_at(kernel, kappa, t)

    return cauchy_quad(zeta_eval, 0.0, tau_max, z, spec) / math.pi


def X_at(p: FlowParams, z: complex, spec: QuadratureSpec = DEFAULT_QUAD) -> complex:
    """Canonical function X(z) = z^(-kappa) exp V(z)."""
    z = complex(z)
    kernel = build_kernel(p, spec)
    if kernel.kappa == 1 and z == 0:
        raise DomainError("X has a pole at 0 when kappa = 1")
    v = V_at(p, z, spec)
    if abs(v.real) > 700.0:
        raise OverflowGuardError(f"Re V = {v.real} exceeds the exp guard")
    x = cmath.exp(v)
    if kernel.kappa == 1:
        x /= z
    return x


def factorization_residual(
    p: FlowParams,
    report: SpectrumReport,
    z: complex,
    spec: QuadratureSpec = DEFAULT_QUAD,
) -> float:
    """Relative residual of the factorization identity at one off-axis z.

    Compares lambda(z) against -lambda(inf) (z^2 - eta0^2) X(z) X(-z) for
    kappa = 1 and +lambda(inf) X(z) X(-z) for kappa = 0, normalized by
    max(|lambda(z)|, abs_tol) so a common zero of both sides reads as 0.
    """
    z = complex(z)
    if abs(z.imag) < AXIS_GUARD:
        raise DomainError("z must be off the real axis")
    lam = lambda_at(p, z, spec)
    lam_inf = lambda_infinity(p)
    xx = X_at(p, z, spec) * X_at(p, -z, spec)
    if report.kappa == 1:
        if report.eta0 is None:
            raise DomainError("report with kappa = 1 must carry eta0")
        eta0 = complex(report.eta0)
        rhs = -lam_inf * (z * z - eta0 * eta0) * xx
    else:
        rhs = lam_inf * xx
    return abs(lam - rhs) / max(abs(lam), spec.abs_tol)
