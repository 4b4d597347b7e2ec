"""Structure of the discrete spectrum.

The number of zeros of the dispersion function in the cut plane is twice
the index kappa of the Riemann coefficient G, and kappa is the winding
count of the continuous argument theta over the positive half-axis.  A
closed root curve

    Omega(tau, a) = sqrt(s1/2 + sqrt((s1/2)^2 + s0)),
    s0 = s^2 - l^2,  s1 = s0 (1 - a tau^2)^2 - 1,

gives the frequency at which the reduced real part
(Omega^4 - Omega^2 s1 - s0)/(1 + Omega^2) of the decomposition vanishes
at a given tau; its maximum over tau is the critical frequency
Omega*(a).  The index is computed from the winding (primary) and
cross-checked against the threshold rule kappa = 1 iff Omega < Omega*;
a disagreement is surfaced as an error, never resolved silently.

Note that the reduced real part above drops the cross term
2 Omega Q1 of the full decomposition (see :mod:`esdispersion.dispersion`),
so the root curve is a closed-form construction in its own right rather
than the exact locus where the winding changes.  The two notions agree
at a = 0 up to the location of the maximum; docs/critical_frequency.md
discusses the difference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .dispersion import FlowParams, theta_profile
from .errors import (
    DomainError,
    IndexMismatchError,
    ThresholdAmbiguousError,
    UnresolvedWindingError,
)
from .specfun import DEFAULT_QUAD, QuadratureSpec, l_func, s_func

TWO_PI = 2.0 * math.pi

# |Omega - Omega*| below this is reported as ambiguous, not forced to 0/1.
THRESHOLD_MARGIN = 1e-4

# Scan bracket for the maximum of the root curve; extended automatically
# if the argmax lands on the edge.
_SCAN_END = 4.0
_SCAN_STEP = 0.01


@dataclass(frozen=True)
class CriticalPoint:
    """Maximum of the root curve: the critical frequency and its argmax."""

    omega_star: float
    tau_star: float


@dataclass(frozen=True)
class SpectrumReport:
    """Index, zero count, critical frequency, and the zero when present."""

    omega: float
    a: float
    kappa: int
    zero_count: int
    omega_star: float
    eta0: complex | None

    def __post_init__(self) -> None:
        if self.zero_count != 2 * self.kappa:
            raise DomainError("zero_count must equal 2 * kappa")
        if (self.eta0 is not None) != (self.kappa == 1):
            raise DomainError("eta0 must be present exactly when kappa = 1")


def _s0_s1(a: float, tau: float) -> tuple[float, float]:
    sv = s_func(tau)
    lv = l_func(tau)
    s0 = sv * sv - lv * lv
    s1 = s0 * (1.0 - a * tau * tau) ** 2 - 1.0
    return s0, s1


def omega_of_tau(a: float, tau: float) -> float:
    """Root curve: the nonnegative frequency killing the reduced real part.

    Returns 0 when the quartic has no real positive root at this tau.
    A positive return is verified post hoc against the quartic.
    """
    a = float(a)
    tau = float(tau)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"a must lie in [0, 1], got {a}")
    if not (math.isfinite(tau) and tau > 0):
        raise DomainError(f"tau must be positive, got {tau}")
    s0, s1 = _s0_s1(a, tau)
    half = 0.5 * s1
    disc = half * half + s0
    if disc < 0.0:
        return 0.0
    inner = half + math.sqrt(disc)
    if inner <= 0.0:
        return 0.0
    om = math.sqrt(inner)
    resid = om**4 - om * om * s1 - s0
    if abs(resid) > 1e-10 * max(1.0, om**4):
        raise DomainError(f"root-curve value failed its defining equation: {resid}")
    return om


def critical_point(a: float) -> CriticalPoint:
    """Maximum of the root curve over tau, by scan plus local refinement."""
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"a must lie in [0, 1], got {a}")
    end = _SCAN_END
    while True:
        taus = np.arange(_SCAN_STEP, end + 0.5 * _SCAN_STEP, _SCAN_STEP)
        values = np.array([omega_of_tau(a, t) for t in taus])
        k = int(np.argmax(values))
        if k < len(taus) - 1 or end >= 16.0:
            break
        end *= 2.0  # argmax on the bracket edge: widen and rescan
    lo = taus[max(k - 1, 0)]
    hi = taus[min(k + 1, len(taus) - 1)]
    res = minimize_scalar(
        lambda t: -omega_of_tau(a, t),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-9},
    )
    tau_star = float(res.x)
    return CriticalPoint(omega_star=omega_of_tau(a, tau_star), tau_star=tau_star)


def critical_frequency(a: float) -> float:
    """Critical frequency Omega*(a), the maximum of the root curve."""
    return critical_point(a).omega_star


def kappa_winding(p: FlowParams, spec: QuadratureSpec = DEFAULT_QUAD) -> int:
    """Index from the winding of the continuous argument alone."""
    grid = np.linspace(0.0, spec.tau_max, 400)
    prof = theta_profile(p, grid, spec)
    end = prof.theta_end
    kappa = int(round(end / TWO_PI))
    if kappa not in (0, 1) or abs(end - TWO_PI * kappa) > 0.5:
        raise UnresolvedWindingError(
            f"theta(inf) = {end:.6f} is not near a multiple of 2 pi in {{0, 1}}"
        )
    return kappa


def resolve_kappa(p: FlowParams, spec: QuadratureSpec = DEFAULT_QUAD) -> tuple[int, float]:
    """Index with the threshold cross-check applied.

    Returns (kappa, omega_star).  Raises ThresholdAmbiguousError inside
    the margin band around Omega* and IndexMismatchError when winding
    and threshold disagree.
    """
    if p.omega <= 0.0:
        raise DomainError("index requires omega > 0")
    kappa = kappa_winding(p, spec)
    omega_star = critical_frequency(p.a)
    if abs(p.omega - omega_star) < THRESHOLD_MARGIN:
        raise ThresholdAmbiguousError(
            f"omega = {p.omega} lies within {THRESHOLD_MARGIN} of "
            f"omega_star = {omega_star:.8f}"
        )
    threshold_kappa = 1 if p.omega < omega_star else 0
    if kappa != threshold_kappa:
        raise IndexMismatchError(
            f"winding gives kappa = {kappa} but the critical-frequency "
            f"threshold (omega_star = {omega_star:.8f}) gives "
            f"{threshold_kappa} at omega = {p.omega}, a = {p.a}"
        )
    return kappa, omega_star


def index(
    p: FlowParams,
    spec: QuadratureSpec = DEFAULT_QUAD,
    eval_point: int = 1,
) -> SpectrumReport:
    """Full spectrum report: index, zero count, Omega*, and the zero.

    The zero is attached whenever kappa = 1, computed at the evaluation
    point z = i * eval_point.
    """
    kappa, omega_star = resolve_kappa(p, spec)
    eta0: complex | None = None
    if kappa == 1:
        from .zeros import eta0_exact  # deferred: zeros imports this module

        eta0 = eta0_exact(p, N=eval_point, spec=spec).eta0
    return SpectrumReport(
        omega=p.omega,
        a=p.a,
        kappa=kappa,
        zero_count=2 * kappa,
        omega_star=omega_star,
        eta0=eta0,
    )
