"""Boundary values of the dispersion function on the real axis.

The dispersion function lambda(z) is analytic off the real axis and
jumps across it.  This demo tabulates the one-sided limits lambda+-(mu)
together with the closed form of the jump, then checks the approach
lambda(mu + i eps) -> lambda+(mu) numerically.
"""

import math

from esdispersion import FlowParams, lambda_at, lambda_boundary, lambda_infinity

SQRT_PI = math.sqrt(math.pi)


def main() -> None:
    p = FlowParams(omega=0.3, a=1.0)
    print(f"flow: omega={p.omega}, a={p.a}, Pr={p.prandtl:.6f}")
    print(f"lambda(inf) = {lambda_infinity(p):.6f}\n")

    print(f"{'mu':>5} {'Re l+':>10} {'Im l+':>10} {'Re l-':>10} {'Im l-':>10} {'jump check':>11}")
    for mu in (0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0):
        bv = lambda_boundary(p, mu)
        jump = bv.plus - bv.minus
        closed = 2j * SQRT_PI * mu * math.exp(-mu * mu) * (1.0 - p.b * mu * mu)
        print(
            f"{mu:5.2f} {bv.plus.real:10.6f} {bv.plus.imag:10.6f}"
            f" {bv.minus.real:10.6f} {bv.minus.imag:10.6f}"
            f" {abs(jump - closed):11.2e}"
        )

    print("\nat mu = 0 both limits equal 1 - i omega:")
    bv0 = lambda_boundary(p, 0.0)
    print(f"  lambda+-(0) = {bv0.plus:.12f}")

    print("\nSokhotsky approach at mu = 1.0:")
    plus = lambda_boundary(p, 1.0).plus
    for eps in (1e-2, 1e-3, 1e-4):
        gap = abs(lambda_at(p, 1.0 + 1j * eps) - plus)
        print(f"  eps = {eps:g}: |lambda(mu + i eps) - lambda+| = {gap:.3e}")
    print("the gap scales linearly with eps, as the boundary limit requires")


if __name__ == "__main__":
    main()
