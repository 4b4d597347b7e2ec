"""Special functions underlying the dispersion machinery.

The building blocks are the Dawson integral F, the Gaussian jump
``s(x) = sqrt(pi) x exp(-x^2)``, its principal-value partner
``l(x) = 1 - 2 x F(x)``, and the plasma-type Cauchy integral

    lambda0(z) = (1/sqrt(pi)) * int e^(-t^2) t / (t - z) dt

taken over the real line.  Off the axis the integrand is smooth and
lambda0 is computed by adaptive quadrature of the truncated integral;
on the axis the two one-sided limits are ``l(x) +- i s(x)``.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from scipy.integrate import IntegrationWarning, quad
from scipy.special import dawsn

from .errors import DomainError, QuadratureError

SQRT_PI = math.sqrt(math.pi)

# Inputs closer to the axis than this are ambiguous between the two
# one-sided limits; callers must pick a side explicitly.
AXIS_GUARD = 1e-8


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and truncation governing every numerical integral.

    Attributes
    ----------
    rel_tol, abs_tol:
        Relative target and absolute floor handed to the adaptive
        integrator.
    tau_max:
        Truncation point of semi-infinite and whole-line integrals.  The
        default 8 leaves a Gaussian tail below 1e-26, far under abs_tol.
    max_subdivisions:
        Subdivision budget, both for the integrator and for angle
        refinement.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    tau_max: float = 8.0
    max_subdivisions: int = 200

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("tolerances must be positive")
        if not self.tau_max >= 6:
            raise DomainError("tau_max must be at least 6")
        if not self.max_subdivisions >= 10:
            raise DomainError("max_subdivisions must be at least 10")


DEFAULT_QUAD = QuadratureSpec()


def _require_finite(name: str, value: float) -> float:
    x = float(value)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return x


def dawson(x: float) -> float:
    """Dawson integral F(x) = e^(-x^2) * int_0^x e^(t^2) dt (odd in x)."""
    return float(dawsn(_require_finite("x", x)))


def s_func(x: float) -> float:
    """Gaussian jump s(x) = sqrt(pi) * x * e^(-x^2) (odd, nonnegative for x >= 0)."""
    x = _require_finite("x", x)
    return SQRT_PI * x * math.exp(-x * x)


def l_func(x: float) -> float:
    """Principal-value part l(x) = 1 - 2 x F(x) on the axis (even in x)."""
    x = _require_finite("x", x)
    return 1.0 - 2.0 * x * float(dawsn(x))


def quad_complex(
    f: Callable[[float], complex],
    lo: float,
    hi: float,
    spec: QuadratureSpec = DEFAULT_QUAD,
    points: Sequence[float] | None = None,
) -> complex:
    """Adaptive quadrature of a complex integrand over [lo, hi].

    Real and imaginary parts are integrated separately so each gets its
    own error control.  Integrator convergence warnings are promoted to
    :class:`QuadratureError`.
    """

    def run(part: Callable[[complex], float]) -> float:
        with warnings.catch_warnings():
            warnings.simplefilter("error", IntegrationWarning)
            try:
                val, _ = quad(
                    lambda t: part(f(t)),
                    lo,
                    hi,
                    epsabs=spec.abs_tol,
                    epsrel=spec.rel_tol,
                    limit=spec.max_subdivisions,
                    points=points,
                )
            except IntegrationWarning as exc:
                raise QuadratureError(str(exc)) from exc
        return val

    return complex(run(lambda v: v.real), run(lambda v: v.imag))


def cauchy_quad(
    f: Callable[[float], complex],
    lo: float,
    hi: float,
    z: complex,
    spec: QuadratureSpec = DEFAULT_QUAD,
) -> complex:
    """Integral of f(t)/(t - z) over [lo, hi] for z off the segment.

    Away from the segment the integrand is mild and handled directly.
    Within distance 0.4 of it, adaptive quadrature cannot resolve the
    near-pole, so the quadratic Taylor part of f about the nearest
    segment point is subtracted over a short window and reinstated
    through closed-form Cauchy moments.  The rearrangement is exact for
    any Taylor coefficients, so the finite-difference estimates used
    here do not limit accuracy.  f must be evaluable slightly outside
    [lo, hi].
    """

    def integrand(t: float) -> complex:
        return f(t) / (t - z)

    x = min(max(z.real, lo), hi)
    dist = math.hypot(z.real - x, z.imag)
    if dist >= 0.4:
        pts = [z.real] if (lo < z.real < hi and abs(z.imag) < 1.0) else None
        return quad_complex(integrand, lo, hi, spec, points=pts)

    alpha = max(lo, x - 0.5)
    beta = min(hi, x + 0.5)
    fx = f(x)
    h = 1e-3
    fp = f(x + h)
    fm = f(x - h)
    d1 = (fp - fm) / (2.0 * h)
    d2 = (fp - 2.0 * fx + fm) / (h * h)

    def near(t: float) -> complex:
        dt = t - x
        return (f(t) - fx - d1 * dt - 0.5 * d2 * dt * dt) / (t - z)

    pts = [x] if alpha < x < beta else None
    # The window integral is a small correction to an O(1) total, so its
    # absolute tolerance follows the total's relative budget.
    window_spec = replace(spec, abs_tol=max(spec.abs_tol, spec.rel_tol))
    total = quad_complex(near, alpha, beta, window_spec, points=pts)
    # Cauchy moments of 1, (t-x), (t-x)^2 over [alpha, beta]; along the
    # integration path t - z never crosses the log branch cut.
    lg = cmath.log(beta - z) - cmath.log(alpha - z)
    w = complex(z.real - x, z.imag)
    span = beta - alpha
    i1 = span + w * lg
    i2 = ((beta - z) ** 2 - (alpha - z) ** 2) / 2.0 + 2.0 * w * span + w * w * lg
    total += fx * lg + d1 * i1 + 0.5 * d2 * i2
    if alpha > lo:
        total += quad_complex(integrand, lo, alpha, spec)
    if beta < hi:
        total += quad_complex(integrand, beta, hi, spec)
    return total


def lambda0(z: complex, spec: QuadratureSpec = DEFAULT_QUAD) -> complex:
    """Plasma-type Cauchy integral, off the real axis only.

    Parameters
    ----------
    z:
        Evaluation point with |Im z| >= 1e-8.  Near-axis inputs are
        rejected rather than silently switched to a one-sided limit;
        use :func:`lambda0_boundary` for those.
    spec:
        Quadrature tolerances and truncation.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("z must be finite")
    if abs(z.imag) < AXIS_GUARD:
        raise DomainError(
            "z is on (or numerically on) the real axis; "
            "use lambda0_boundary for the one-sided limits"
        )
    tm = spec.tau_max

    def weight(t: float) -> complex:
        return math.exp(-t * t) * t

    return cauchy_quad(weight, -tm, tm, z, spec) / SQRT_PI


def lambda0_boundary(x: float, side: str) -> complex:
    """One-sided limit of lambda0 on the real axis.

    ``side="above"`` gives l(x) + i s(x), ``side="below"`` gives
    l(x) - i s(x).
    """
    x = _require_finite("x", x)
    if side == "above":
        return complex(l_func(x), s_func(x))
    if side == "below":
        return complex(l_func(x), -s_func(x))
    raise DomainError(f'side must be "above" or "below", got {side!r}')
