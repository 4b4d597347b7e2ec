"""Dispersion function of the ES kinetic model and its boundary structure.

For oscillation frequency Omega >= 0 and model parameter a in [0, 1] the
dispersion function of the separated kinetic equation is

    lambda(z) = -i Omega + (1 - b z^2) lambda0(z),    b = -i Omega a / z0,

with z0 = 1 - i Omega.  Its one-sided limits on the real axis,
lambda+-(mu), combine the principal-value part l and the jump s.  The
ratio G(tau) = lambda+(tau) / lambda-(tau) is the coefficient of a scalar
Riemann problem; this module computes its real decomposition

    G = (g1 + i g2) / g0,
    g1 = Re(lambda+ conj(lambda-)),  g2 = Im(lambda+ conj(lambda-)),
    g0 = |lambda-|^2,

and the continuous branch theta(tau) of arg G fixed by theta(0) = 0.
The decomposition is evaluated in real arithmetic through the four
products

    P  = (1 - b1 tau^2) l(tau),   Q  = b2 tau^2 s(tau),
    P1 = (1 - b1 tau^2) s(tau),   Q1 = b2 tau^2 l(tau),

which give g1 = P^2 - Q^2 - P1^2 + Q1^2 + 2 Omega Q1 + Omega^2,
g2 = 2 (P P1 + Q (Omega + Q1)), g0 = (P - Q)^2 + (Omega + P1 + Q1)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DegeneratePointError,
    DomainError,
    SingularCoefficientError,
    UnresolvedWindingError,
)
from .specfun import (
    DEFAULT_QUAD,
    QuadratureSpec,
    l_func,
    lambda0,
    s_func,
)

TWO_PI = 2.0 * math.pi

# Angle continuation is exact as long as the true step stays below pi;
# refined raw steps are required below pi/2 for a factor-2 margin.
MAX_ANGLE_STEP = 0.5 * math.pi


@dataclass(frozen=True)
class FlowParams:
    """Problem parameters Omega and a with their derived constants."""

    omega: float
    a: float

    def __post_init__(self) -> None:
        om = float(self.omega)
        av = float(self.a)
        if not (math.isfinite(om) and math.isfinite(av)):
            raise DomainError("omega and a must be finite")
        if om < 0:
            raise DomainError(f"omega must be nonnegative, got {om}")
        if not 0.0 <= av <= 1.0:
            raise DomainError(f"a must lie in [0, 1], got {av}")
        object.__setattr__(self, "omega", om)
        object.__setattr__(self, "a", av)

    @classmethod
    def from_prandtl(cls, omega: float, prandtl: float) -> "FlowParams":
        """Construct from the Prandtl number via a = 2 (1 - Pr) / Pr.

        The conversion is rounded to 12 significant decimals so that a
        Prandtl number written in decimal maps onto the same parameters
        as the equivalent decimal a (Pr = 0.8 and a = 0.5 coincide).
        """
        pr = float(prandtl)
        if not (2.0 / 3.0 - 1e-12 <= pr <= 1.0 + 1e-12):
            raise DomainError(f"prandtl must lie in [2/3, 1], got {pr}")
        a = round(2.0 * (1.0 - pr) / pr, 12)
        return cls(omega, min(max(a, 0.0), 1.0))

    @property
    def z0(self) -> complex:
        return complex(1.0, -self.omega)

    @property
    def b(self) -> complex:
        return -1j * self.omega * self.a / self.z0

    @property
    def b1(self) -> float:
        return self.a * self.omega**2 / (1.0 + self.omega**2)

    @property
    def b2(self) -> float:
        return -self.a * self.omega / (1.0 + self.omega**2)

    @property
    def prandtl(self) -> float:
        return 2.0 / (2.0 + self.a)


@dataclass(frozen=True)
class BoundaryValues:
    """The pair of one-sided limits of lambda on the real axis."""

    mu: float
    plus: complex
    minus: complex


@dataclass(frozen=True)
class GDecomposition:
    """Real decomposition of the Riemann coefficient at one abscissa.

    ``G`` is computed independently as the ratio of boundary values, so
    comparing it with (g1 + i g2)/g0 cross-checks the decomposition.
    ``theta`` is the continuous argument at tau, with theta(0) = 0.
    """

    tau: float
    g0: float
    g1: float
    g2: float
    G: complex
    theta: float


def lambda_at(p: FlowParams, z: complex, spec: QuadratureSpec = DEFAULT_QUAD) -> complex:
    """Dispersion function off the real axis.

    Evaluates -i Omega + (1 - b z^2) lambda0(z) by adaptive quadrature.
    Real z is rejected; use :func:`lambda_boundary` for the one-sided
    limits.
    """
    z = complex(z)
    return -1j * p.omega + (1.0 - p.b * z * z) * lambda0(z, spec)


def lambda_boundary(p: FlowParams, mu: float) -> BoundaryValues:
    """One-sided limits lambda+-(mu) on the real axis, in closed form."""
    mu = float(mu)
    if not math.isfinite(mu):
        raise DomainError("mu must be finite")
    common = 1.0 - p.b * mu * mu
    lv = l_func(mu)
    sv = s_func(mu)
    base = -1j * p.omega
    return BoundaryValues(
        mu=mu,
        plus=base + common * complex(lv, sv),
        minus=base + common * complex(lv, -sv),
    )


def lambda_infinity(p: FlowParams) -> complex:
    """Limit of lambda at infinity: -i Omega + b / 2."""
    return -1j * p.omega + p.b / 2.0


def _pq(p: FlowParams, tau: float) -> tuple[float, float, float, float]:
    t2 = tau * tau
    c1 = 1.0 - p.b1 * t2
    c2 = p.b2 * t2
    lv = l_func(tau)
    sv = s_func(tau)
    return c1 * lv, c2 * sv, c1 * sv, c2 * lv


def _g1g2g0(p: FlowParams, tau: float) -> tuple[float, float, float]:
    P, Q, P1, Q1 = _pq(p, tau)
    om = p.omega
    g1 = P * P - Q * Q - P1 * P1 + Q1 * Q1 + 2.0 * om * Q1 + om * om
    g2 = 2.0 * (P * P1 + Q * (om + Q1))
    g0 = (P - Q) ** 2 + (om + P1 + Q1) ** 2
    return g1, g2, g0


def _raw_angle(p: FlowParams, tau: float) -> float:
    g1, g2, _ = _g1g2g0(p, tau)
    return math.atan2(g2, g1)


def _principal(delta: float) -> float:
    return math.remainder(delta, TWO_PI)


def _continue_angle(
    p: FlowParams,
    nodes: np.ndarray,
    spec: QuadratureSpec,
    max_step: float = MAX_ANGLE_STEP,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Continuous branch of arg(g1 + i g2) along ascending nodes from 0.

    Intervals whose principal-branch step reaches max_step are bisected
    until every step is below it, which makes the unwrapping exact with
    margin.  Returns the refined nodes, the raw principal angles, and
    the continuous angle samples.
    """
    taus = [float(t) for t in nodes]
    angles = [_raw_angle(p, t) for t in taus]
    for _ in range(spec.max_subdivisions):
        inserted = False
        i = 0
        while i < len(taus) - 1:
            step = _principal(angles[i + 1] - angles[i])
            if abs(step) >= max_step and taus[i + 1] - taus[i] > 1e-12:
                mid = 0.5 * (taus[i] + taus[i + 1])
                taus.insert(i + 1, mid)
                angles.insert(i + 1, _raw_angle(p, mid))
                inserted = True
            else:
                i += 1
        if not inserted:
            break
    else:
        raise UnresolvedWindingError(
            "angle refinement exhausted max_subdivisions rounds; "
            "the winding cannot be resolved on this grid"
        )
    theta = np.empty(len(taus))
    theta[0] = 0.0
    for i in range(1, len(taus)):
        theta[i] = theta[i - 1] + _principal(angles[i] - angles[i - 1])
    return np.asarray(taus), np.asarray(angles), theta


@dataclass(frozen=True, eq=False)
class ThetaProfile:
    """Continuous-argument samples along a refined grid.

    ``tau``/``theta`` hold the refined nodes (including every requested
    grid point) and the continuous angle there; ``grid_index`` maps the
    requested grid onto the refined arrays.
    """

    tau: np.ndarray
    theta: np.ndarray
    grid_index: np.ndarray

    def on_grid(self) -> np.ndarray:
        """Angle samples at the originally requested grid points."""
        return self.theta[self.grid_index]

    @property
    def theta_end(self) -> float:
        return float(self.theta[-1])

    @property
    def kappa(self) -> int:
        """Nearest winding count theta_end / (2 pi)."""
        return int(round(self.theta_end / TWO_PI))


def theta_profile(
    p: FlowParams, grid: Sequence[float], spec: QuadratureSpec = DEFAULT_QUAD
) -> ThetaProfile:
    """Continuous branch of arg G along an ascending grid starting at 0.

    The grid must start at 0 and, unless it is the single point {0},
    reach spec.tau_max so the winding settles (the decomposition decays
    at Gaussian rate, so the angle is constant beyond that).  Raw angle
    steps of pi/2 or more are refined away; the returned profile keeps
    the refined nodes and knows where the requested points landed.
    """
    arr = np.asarray(grid, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("grid must be a nonempty 1-d sequence")
    if arr[0] != 0.0:
        raise DomainError("grid must start at 0 (the branch is fixed there)")
    if arr.size == 1:
        zero = np.zeros(1)
        return ThetaProfile(tau=zero.copy(), theta=zero.copy(), grid_index=np.zeros(1, dtype=int))
    if np.any(np.diff(arr) <= 0):
        raise DomainError("grid must be strictly increasing")
    if arr[-1] < spec.tau_max:
        raise DomainError(
            f"grid must reach tau_max={spec.tau_max} for the winding to settle"
        )
    taus, _, theta = _continue_angle(p, arr, spec)
    idx = np.searchsorted(taus, arr)
    return ThetaProfile(tau=taus, theta=theta, grid_index=idx)


def g_decomposition(p: FlowParams, tau: float) -> GDecomposition:
    """Real decomposition of G at one abscissa, with the continuous angle.

    The angle is carried from 0 to tau by the same refinement scheme as
    :func:`theta_profile`, so it is the continuous branch even past folds
    of the principal argument.
    """
    tau = float(tau)
    if not math.isfinite(tau) or tau < 0:
        raise DomainError(f"tau must be finite and nonnegative, got {tau}")
    g1, g2, g0 = _g1g2g0(p, tau)
    if g0 <= 0.0 or not math.isfinite(g0):
        raise DegeneratePointError(f"g0 = {g0} at tau = {tau}")
    bv = lambda_boundary(p, tau)
    if abs(bv.minus) == 0.0:
        raise SingularCoefficientError(f"lambda-({tau}) = 0")
    G = bv.plus / bv.minus
    if tau == 0.0:
        theta = 0.0
    else:
        n_seed = max(2, int(math.ceil(tau / 0.05)) + 1)
        nodes = np.linspace(0.0, tau, n_seed)
        _, _, theta_arr = _continue_angle(p, nodes, DEFAULT_QUAD)
        theta = float(theta_arr[-1])
    return GDecomposition(tau=tau, g0=g0, g1=g1, g2=g2, G=G, theta=theta)


def G_at(p: FlowParams, tau: float) -> complex:
    """Riemann coefficient G(tau) = lambda+(tau) / lambda-(tau)."""
    tau = float(tau)
    if not math.isfinite(tau) or tau < 0:
        raise DomainError(f"tau must be finite and nonnegative, got {tau}")
    bv = lambda_boundary(p, tau)
    if abs(bv.minus) == 0.0:
        raise SingularCoefficientError(f"lambda-({tau}) = 0")
    return bv.plus / bv.minus
