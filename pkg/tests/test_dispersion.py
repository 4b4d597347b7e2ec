"""Dispersion function, boundary values, and the Riemann coefficient.

The wofz identity gives a closed-form oracle for lambda_at off the real
axis.  The G/theta regression triple at (omega, a) = (0.637, 1) was
frozen from two independent routes that agree to 1e-12: the package's
refining continuation and a dense-mesh numpy unwrap.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import wofz

from esdispersion import (
    DomainError,
    FlowParams,
    G_at,
    g_decomposition,
    l_func,
    lambda0,
    lambda_at,
    lambda_boundary,
    lambda_infinity,
    s_func,
    theta_profile,
)

SQRT_PI = math.sqrt(math.pi)
TWO_PI = 2.0 * math.pi

omegas = st.floats(min_value=0.0, max_value=2.0)
a_values = st.floats(min_value=0.0, max_value=1.0)
mus = st.floats(min_value=-4.0, max_value=4.0)


def lambda_oracle(p: FlowParams, z: complex) -> complex:
    """Closed form via the Faddeeva function, upper half-plane only."""
    assert z.imag > 0
    lam0 = 1.0 + 1j * SQRT_PI * z * wofz(z)
    return -1j * p.omega + (1.0 - p.b * z * z) * lam0


class TestFlowParams:
    def test_derived_constants(self):
        p = FlowParams(0.3, 1.0)
        assert p.z0 == 1.0 - 0.3j
        assert abs(p.b - (-1j * 0.3 * 1.0 / (1.0 - 0.3j))) < 1e-16
        assert abs(p.b1 - 0.09 / 1.09) < 1e-16
        assert abs(p.b2 + 0.3 / 1.09) < 1e-16
        assert abs(complex(p.b1, p.b2) - p.b) < 1e-16

    def test_bgk_reduction(self):
        assert FlowParams(0.7, 0.0).b == 0.0

    def test_prandtl_of_a(self):
        assert FlowParams(0.1, 0.0).prandtl == 1.0
        assert FlowParams(0.1, 1.0).prandtl == pytest.approx(2.0 / 3.0, abs=1e-15)
        assert FlowParams(0.1, 0.5).prandtl == pytest.approx(0.8, abs=1e-15)

    def test_from_prandtl_matches_decimal_a(self):
        assert FlowParams.from_prandtl(0.3, 0.8) == FlowParams(0.3, 0.5)
        assert FlowParams.from_prandtl(0.3, 1.0) == FlowParams(0.3, 0.0)

    @given(om=omegas, a=a_values)
    def test_prandtl_round_trip(self, om, a):
        p = FlowParams(om, a)
        q = FlowParams.from_prandtl(om, p.prandtl)
        assert q.a == pytest.approx(a, abs=1e-10)

    @pytest.mark.parametrize(
        "omega, a",
        [(-0.1, 0.5), (0.5, -0.01), (0.5, 1.01), (math.nan, 0.5), (0.5, math.inf)],
    )
    def test_rejects_out_of_domain(self, omega, a):
        with pytest.raises(DomainError):
            FlowParams(omega, a)

    @pytest.mark.parametrize("prandtl", [0.5, 1.2, 2.0 / 3.0 - 1e-6])
    def test_rejects_out_of_range_prandtl(self, prandtl):
        with pytest.raises(DomainError):
            FlowParams.from_prandtl(0.3, prandtl)


class TestLambdaAt:
    def test_zero_frequency_reduces_to_lambda0(self):
        p = FlowParams(0.0, 0.7)
        z = 0.5j
        assert lambda_at(p, z) == pytest.approx(lambda0(z), abs=1e-14)

    def test_bgk_reduction(self):
        p = FlowParams(0.3, 0.0)
        z = 1.0 + 1.0j
        assert lambda_at(p, z) == pytest.approx(-0.3j + lambda0(z), abs=1e-14)

    def test_evenness(self):
        p = FlowParams(0.5, 1.0)
        z = 0.7 + 0.9j
        assert lambda_at(p, -z) == pytest.approx(lambda_at(p, z), rel=1e-12)

    @pytest.mark.parametrize("z", [0.5 + 1.5j, 2j, -1.0 + 0.25j, 0.1 + 3j])
    def test_matches_faddeeva_oracle(self, z):
        p = FlowParams(0.637, 1.0)
        assert lambda_at(p, z) == pytest.approx(lambda_oracle(p, z), abs=1e-11)

    def test_rejects_real_argument(self):
        with pytest.raises(DomainError):
            lambda_at(FlowParams(0.3, 1.0), 0.8)


class TestLambdaBoundary:
    def test_origin(self):
        bv = lambda_boundary(FlowParams(0.4, 1.0), 0.0)
        assert bv.plus == pytest.approx(1.0 - 0.4j, abs=1e-15)
        assert bv.minus == bv.plus

    def test_jump_closed_form_at_one(self):
        p = FlowParams(0.637, 1.0)
        bv = lambda_boundary(p, 1.0)
        want = 2j * SQRT_PI * math.exp(-1.0) * (1.0 - p.b)
        assert bv.plus - bv.minus == pytest.approx(want, abs=1e-15)

    def test_plus_is_upper_epsilon_limit(self):
        p = FlowParams(0.3, 1.0)
        bv = lambda_boundary(p, 0.8)
        for eps in (1e-3, 1e-4):
            diff = abs(lambda_at(p, 0.8 + 1j * eps) - bv.plus)
            assert diff < 2.1 * eps

    @given(om=omegas, a=a_values, mu=mus)
    @settings(max_examples=60)
    def test_jump_and_half_sum_identities(self, om, a, mu):
        p = FlowParams(om, a)
        bv = lambda_boundary(p, mu)
        common = 1.0 - p.b * mu * mu
        jump = 2j * SQRT_PI * mu * math.exp(-mu * mu) * common
        half = -1j * om + common * l_func(mu)
        assert abs((bv.plus - bv.minus) - jump) < 1e-12
        assert abs(0.5 * (bv.plus + bv.minus) - half) < 1e-12

    @given(om=omegas, a=a_values, mu=mus)
    @settings(max_examples=60)
    def test_reflection_swaps_sides(self, om, a, mu):
        p = FlowParams(om, a)
        left = lambda_boundary(p, -mu)
        right = lambda_boundary(p, mu)
        assert abs(left.plus - right.minus) < 1e-14
        assert abs(left.minus - right.plus) < 1e-14

    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            lambda_boundary(FlowParams(0.3, 1.0), math.inf)


class TestLambdaInfinity:
    def test_zero_frequency(self):
        assert lambda_infinity(FlowParams(0.0, 1.0)) == 0.0

    def test_bgk(self):
        assert lambda_infinity(FlowParams(0.5, 0.0)) == -0.5j

    def test_closed_forms_agree(self):
        p = FlowParams(0.3, 1.0)
        pr = p.prandtl
        via_prandtl = -(1j * p.omega / pr) * (1.0 - 1j * p.omega * pr) / (1.0 - 1j * p.omega)
        assert abs(lambda_infinity(p) - via_prandtl) < 1e-14

    @given(om=omegas, a=a_values)
    def test_matches_large_argument_limit(self, om, a):
        p = FlowParams(om, a)
        want = -1j * om + p.b / 2.0
        assert lambda_infinity(p) == want


class TestGDecomposition:
    def test_values_at_zero(self):
        d = g_decomposition(FlowParams(0.8, 1.0), 0.0)
        assert d.g1 == pytest.approx(1.0 + 0.64, abs=1e-14)
        assert d.g2 == pytest.approx(0.0, abs=1e-14)
        assert d.theta == 0.0
        assert d.G == pytest.approx(1.0, abs=1e-14)

    def test_tail_values(self):
        # g1 + i g2 tends to |lambda(inf)|^2 algebraically (tau^-2 for
        # a > 0, tau^-4 for a = 0); g2 alone dies at Gaussian rate
        p = FlowParams(0.8, 1.0)
        lim = abs(lambda_infinity(p)) ** 2
        d8 = g_decomposition(p, 8.0)
        assert d8.g2 == pytest.approx(0.0, abs=1e-12)
        assert d8.g1 == pytest.approx(lim, abs=2e-2)
        d20 = g_decomposition(p, 20.0)
        assert abs(d20.g1 - lim) < abs(d8.g1 - lim) / 5.0
        bgk = FlowParams(0.8, 0.0)
        assert g_decomposition(bgk, 8.0).g1 == pytest.approx(0.64, abs=1e-4)

    @given(
        om=st.floats(min_value=0.01, max_value=2.0),
        a=a_values,
        tau=st.floats(min_value=0.0, max_value=8.0),
    )
    @settings(max_examples=80)
    def test_coefficient_identity(self, om, a, tau):
        p = FlowParams(om, a)
        t2 = tau * tau
        lhs = (1.0 - p.b1 * t2) ** 2 + (p.b2 * t2) ** 2
        rhs = (1.0 + om * om * (1.0 - a * t2) ** 2) / (1.0 + om * om)
        assert lhs == pytest.approx(rhs, abs=1e-14 * max(1.0, abs(rhs)))

    @pytest.mark.parametrize("tau", np.linspace(0.0, 8.0, 17))
    def test_ratio_consistency_along_axis(self, tau):
        p = FlowParams(0.637, 1.0)
        d = g_decomposition(p, tau)
        assert d.g0 > 0.0
        assert abs(d.G - complex(d.g1, d.g2) / d.g0) <= 1e-10 * abs(d.G)

    @pytest.mark.parametrize(
        "tau, G, theta",
        [
            (0.5, 0.10624092243541 + 0.322392608843131j, 1.2524645940299),
            (1.0, 0.112389759337981 - 0.331844739884592j, 5.03894536734598),
            (2.0, 0.985193316032573 - 0.233342350177795j, 6.0506215499979),
        ],
    )
    def test_frozen_values_near_critical(self, tau, G, theta):
        d = g_decomposition(FlowParams(0.637, 1.0), tau)
        assert d.G == pytest.approx(G, abs=1e-11)
        assert d.theta == pytest.approx(theta, abs=1e-9)

    def test_rejects_negative_tau(self):
        with pytest.raises(DomainError):
            g_decomposition(FlowParams(0.3, 1.0), -0.5)


class TestGAt:
    def test_origin_is_one(self):
        assert G_at(FlowParams(0.9, 0.3), 0.0) == pytest.approx(1.0, abs=1e-15)

    def test_far_tail_is_one(self):
        assert abs(G_at(FlowParams(0.3, 1.0), 8.0) - 1.0) < 1e-20

    def test_matches_decomposition_field(self):
        p = FlowParams(0.637, 1.0)
        assert G_at(p, 1.3) == g_decomposition(p, 1.3).G

    def test_rejects_negative_tau(self):
        with pytest.raises(DomainError):
            G_at(FlowParams(0.3, 1.0), -1.0)


class TestThetaProfile:
    def test_unit_index_regime(self):
        prof = theta_profile(FlowParams(0.1, 1.0), np.linspace(0.0, 8.0, 401))
        assert prof.theta_end == pytest.approx(TWO_PI, abs=1e-8)
        assert prof.kappa == 1

    def test_zero_index_regime(self):
        prof = theta_profile(FlowParams(1.0, 1.0), np.linspace(0.0, 8.0, 401))
        assert prof.theta_end == pytest.approx(0.0, abs=1e-8)
        assert prof.kappa == 0

    def test_single_point_grid(self):
        prof = theta_profile(FlowParams(0.5, 1.0), [0.0])
        assert prof.tau.tolist() == [0.0]
        assert prof.theta.tolist() == [0.0]

    def test_profile_starts_at_zero_and_steps_stay_small(self):
        prof = theta_profile(FlowParams(0.637, 1.0), np.linspace(0.0, 8.0, 401))
        assert prof.theta[0] == 0.0
        assert np.max(np.abs(np.diff(prof.theta))) < 0.5 * math.pi

    def test_on_grid_matches_requested_points(self):
        grid = np.linspace(0.0, 8.0, 81)
        prof = theta_profile(FlowParams(0.2, 1.0), grid)
        assert np.array_equal(prof.tau[prof.grid_index], grid)
        assert prof.on_grid().shape == grid.shape

    @pytest.mark.parametrize(
        "grid",
        [[], [0.1, 1.0, 8.0], [0.0, 0.5, 0.5, 8.0], [0.0, 1.0, 4.0]],
    )
    def test_rejects_bad_grids(self, grid):
        with pytest.raises(DomainError):
            theta_profile(FlowParams(0.3, 1.0), grid)
