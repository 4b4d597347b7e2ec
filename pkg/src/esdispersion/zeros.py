"""Discrete-spectrum zeros of the dispersion function.

When the index is 1 the dispersion function has exactly one pair of
zeros +-eta0 in the cut plane.  Evaluating the factorization identity at
a regular point z = N i and solving for the zero gives the exact formula

    eta0 = sqrt( -N^2 + lambda(N i) / (lambda(inf) X(N i) X(-N i)) ),

whose independence of N doubles as an integration quality gate.  For
small Omega the zero also has the closed asymptotic form

    eta0_as = sqrt( i (1 - i Omega + 3 i Omega a / 2)
                    / (2 Omega (1 - i Omega + a / 2)) ),

the root of the large-z truncation -i Omega + b/2 + (3b/4 - 1/2)/z^2 of
the dispersion function (see docs/asymptotic_zero.md for the expansion).
The relative modulus error

    O(Omega) = (|eta0| - |eta0_as|) / |eta0| * 100

compares the two.  Zeros are never polished by local root finding; the
factorization formula itself is the object under test.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .dispersion import FlowParams, lambda_at, lambda_infinity
from .errors import (
    DomainError,
    EsDispersionError,
    NoDiscreteSpectrumError,
    QuadratureError,
    ZeroAtInfinityError,
)
from .factorization import X_at
from .specfun import AXIS_GUARD, DEFAULT_QUAD, QuadratureSpec
from .spectrum import resolve_kappa


@dataclass(frozen=True)
class ZeroPair:
    """A zero pair +-eta0 with its substitution residual.

    ``residual`` is |lambda(eta0)| / |lambda(inf)|.  ``evaluation_point``
    records N for the exact formula and is None for the asymptotic one.
    """

    eta0: complex
    eta0_neg: complex
    residual: float
    source: str
    evaluation_point: int | None


def _fix_branch(value: complex) -> complex:
    root = cmath.sqrt(value)
    if root.real < 0.0 or (root.real == 0.0 and root.imag < 0.0):
        root = -root
    return root


def eta0_exact(
    p: FlowParams, N: int = 1, spec: QuadratureSpec = DEFAULT_QUAD
) -> ZeroPair:
    """Zero of the dispersion function from the factorization identity.

    Parameters
    ----------
    p:
        Flow parameters with 0 < Omega below the critical frequency.
    N:
        Evaluation point index; the identity is read off at z = N i.
    """
    if p.omega == 0.0:
        raise ZeroAtInfinityError(
            "at omega = 0 the zero pair escapes to infinity; "
            "there is nothing to extract"
        )
    n = int(N)
    if n < 1:
        raise DomainError(f"N must be a positive integer, got {N!r}")
    kappa, omega_star = resolve_kappa(p, spec)
    if kappa == 0:
        raise NoDiscreteSpectrumError(
            f"kappa = 0 at omega = {p.omega}, a = {p.a} "
            f"(critical frequency {omega_star:.8f}): no discrete zeros"
        )
    z = complex(0.0, float(n))
    lam = lambda_at(p, z, spec)
    lam_inf = lambda_infinity(p)
    xx = X_at(p, z, spec) * X_at(p, -z, spec)
    eta0 = _fix_branch(-float(n * n) + lam / (lam_inf * xx))
    if abs(eta0.imag) < AXIS_GUARD:
        raise QuadratureError(
            f"computed zero {eta0} landed on the real axis; "
            "the quadrature did not resolve the identity"
        )
    residual = abs(lambda_at(p, eta0, spec)) / abs(lam_inf)
    return ZeroPair(
        eta0=eta0,
        eta0_neg=-eta0,
        residual=residual,
        source="exact",
        evaluation_point=n,
    )


def eta0_asymptotic(p: FlowParams, spec: QuadratureSpec = DEFAULT_QUAD) -> ZeroPair:
    """Closed-form small-Omega approximation of the zero.

    The residual field reports |lambda(eta0_as)| / |lambda(inf)| and is
    informative only; it does not gate the result.
    """
    if p.omega == 0.0:
        raise ZeroAtInfinityError("the asymptotic zero diverges as omega -> 0")
    om = p.omega
    a = p.a
    value = 1j * (1.0 - 1j * om + 1.5j * om * a) / (2.0 * om * (1.0 - 1j * om + 0.5 * a))
    eta0 = _fix_branch(value)
    if abs(eta0.imag) < AXIS_GUARD:
        residual = math.inf
    else:
        residual = abs(lambda_at(p, eta0, spec)) / abs(lambda_infinity(p))
    return ZeroPair(
        eta0=eta0,
        eta0_neg=-eta0,
        residual=residual,
        source="asymptotic",
        evaluation_point=None,
    )


def error_function(omega: float, a: float, spec: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Signed relative modulus error of the asymptotic zero, in percent.

    Negative values mean the asymptotic modulus exceeds the exact one.
    Failures of the exact zero (index zero, ambiguity bands) propagate.
    """
    p = FlowParams(omega, a)
    exact = eta0_exact(p, spec=spec)
    approx = eta0_asymptotic(p, spec=spec)
    return (abs(exact.eta0) - abs(approx.eta0)) / abs(exact.eta0) * 100.0


@dataclass(frozen=True)
class SweepRow:
    """One frequency sample of the zero comparison sweep.

    Value fields are None whenever the row's status is not "ok"; failed
    rows never carry fabricated numbers.
    """

    omega: float
    abs_eta0: float | None
    abs_eta0_as: float | None
    o_signed: float | None
    o_abs: float | None
    status: str


def zero_sweep(
    a: float, omega_grid: Sequence[float], spec: QuadratureSpec = DEFAULT_QUAD
) -> list[SweepRow]:
    """Row-per-frequency comparison of exact and asymptotic zero moduli.

    Rows failing zero extraction are marked and skipped, not fatal: the
    status is "ok", "no-discrete-spectrum", or "error:<ErrorType>".
    """
    grid = [float(om) for om in omega_grid]
    if any(b <= a_ for a_, b in zip(grid, grid[1:])):
        raise DomainError("omega_grid must be strictly increasing")
    rows: list[SweepRow] = []
    for om in grid:
        try:
            p = FlowParams(om, a)
            exact = eta0_exact(p, spec=spec)
            approx = eta0_asymptotic(p, spec=spec)
        except NoDiscreteSpectrumError:
            rows.append(SweepRow(om, None, None, None, None, "no-discrete-spectrum"))
        except EsDispersionError as exc:
            rows.append(SweepRow(om, None, None, None, None, f"error:{type(exc).__name__}"))
        else:
            o = (abs(exact.eta0) - abs(approx.eta0)) / abs(exact.eta0) * 100.0
            rows.append(
                SweepRow(
                    omega=om,
                    abs_eta0=abs(exact.eta0),
                    abs_eta0_as=abs(approx.eta0),
                    o_signed=o,
                    o_abs=abs(o),
                    status="ok",
                )
            )
    return rows
