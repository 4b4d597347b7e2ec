"""Eigenfunctions of the transport operator.

The discrete eigenfunction attached to eta0 decays in space when built
on the zero with positive real part, and the continuous family is
normalized through a principal-value identity.  At omega = 0 two
polynomial modes solve the equation exactly.  This demo evaluates each
kind and prints the defining residuals.
"""

import numpy as np

from esdispersion import (
    FlowParams,
    continuous_pv_normalization,
    eta0_exact,
    h_discrete,
    phi_discrete,
)
from esdispersion.eigen import kinetic_residual_discrete, kinetic_residual_omega_zero


def main() -> None:
    p = FlowParams(0.3, 1.0)
    eta0 = eta0_exact(p).eta0
    print(f"flow: omega={p.omega}, a={p.a}, eta0 = {eta0:.9f}")

    print("\ndiscrete mode phi(mu) and its x1-dependent profile h:")
    for mu in (-1.0, 0.0, 1.0):
        print(f"  phi({mu:+.1f}) = {phi_discrete(p, eta0, mu):.9f}")
    for x1 in (0.0, 1.0, 2.0):
        val = h_discrete(p, eta0, x1, 0.5)
        print(f"  |h(x1 = {x1:.1f}, mu = 0.5)| = {abs(val):.6f}")
    print("the profile decays in x1 (Re eta0 > 0 picks the decaying pair)")

    print("\nkinetic residual of the discrete mode:")
    for x1, mu in ((0.0, 0.3), (0.5, -1.3), (2.0, 1.7)):
        r = kinetic_residual_discrete(p, eta0, x1, mu)
        print(f"  x1 = {x1:3.1f}, mu = {mu:+.1f}: residual = {r:.2e}")

    print("\ncontinuous-family normalization residual:")
    for eta in (0.3, 0.7, 1.5, 2.5):
        r = continuous_pv_normalization(p, eta)
        print(f"  eta = {eta:3.1f}: residual = {r:.2e}")

    print("\nstatic (omega = 0) polynomial modes:")
    for a in (0.0, 0.5, 1.0):
        worst = max(
            kinetic_residual_omega_zero(a, mode, x1, mu)
            for mode in (1, 2)
            for x1 in (0.0, 0.7, 2.0)
            for mu in np.linspace(-1.5, 1.5, 3)
        )
        print(f"  a = {a}: worst residual over both modes = {worst:.2e}")


if __name__ == "__main__":
    main()
