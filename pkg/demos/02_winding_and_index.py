"""Winding of the Riemann coefficient and the index kappa.

Along the positive half-axis the ratio G = lambda+/lambda- traces a
curve in the complex plane; the net winding of its continuous argument
theta decides whether the dispersion function has a discrete zero pair
(kappa = 1) or none (kappa = 0).  This demo prints theta profiles on
both sides of the transition and the resulting spectrum reports.
"""

import math

import numpy as np

from esdispersion import FlowParams, critical_point, index, theta_profile


def show_profile(p: FlowParams) -> None:
    grid = list(np.linspace(0.0, 8.0, 9))
    theta = theta_profile(p, grid).on_grid()
    print(f"omega = {p.omega}, a = {p.a}")
    for tau, th in zip(grid, theta):
        bar = "#" * int(round(8 * abs(th) / (2 * math.pi)))
        print(f"  tau = {tau:4.1f}  theta = {th:9.5f}  {bar}")
    print(f"  theta(end) / 2 pi = {theta[-1] / (2 * math.pi):.6f}\n")


def main() -> None:
    cp = critical_point(1.0)
    print(f"critical frequency at a = 1: omega* = {cp.omega_star:.9f}\n")

    show_profile(FlowParams(0.3, 1.0))
    show_profile(FlowParams(1.2, 1.0))

    for omega in (0.3, 1.2):
        rep = index(FlowParams(omega, 1.0))
        print(
            f"omega = {omega}: kappa = {rep.kappa}, zeros in cut plane = "
            f"{rep.zero_count}, eta0 = {rep.eta0}"
        )

    print("\nnear the transition the two index rules can disagree;")
    print("resolve_kappa raises IndexMismatchError there (see")
    print("docs/critical_frequency.md for the measured bands)")


if __name__ == "__main__":
    main()
