"""Discrete-spectrum structure: root curve, critical frequency, index.

Critical-point regressions were frozen from the scan-plus-refinement
maximizer and cross-checked against the tabulated values 0.733, 0.672,
0.637 at their stated tolerances.  The winding-vs-threshold dissent
bands asserted below were located by bisection on kappa_winding.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from esdispersion import (
    DomainError,
    FlowParams,
    IndexMismatchError,
    SpectrumReport,
    ThresholdAmbiguousError,
    critical_frequency,
    critical_point,
    index,
    omega_of_tau,
)
from esdispersion.spectrum import kappa_winding, resolve_kappa

A_GRID = [round(0.1 * k, 1) for k in range(11)]

# Frozen maximizer output (omega_star, tau_star).
CRITICAL = {
    0.0: (0.732758710001409, 0.799435555713714),
    0.5: (0.670795117015747, 0.772265902708778),
    1.0: (0.636575231621957, 0.767140119959841),
}


class TestOmegaOfTau:
    def test_vanishes_near_origin(self):
        # s0 -> -1, s1 -> -2: the inner expression is negative
        assert omega_of_tau(1.0, 1e-4) == 0.0
        assert omega_of_tau(0.0, 1e-4) == 0.0

    def test_peak_value_matches_table(self):
        assert omega_of_tau(1.0, CRITICAL[1.0][1]) == pytest.approx(0.637, abs=1e-3)

    @given(
        a=st.floats(min_value=0.0, max_value=1.0),
        tau=st.floats(min_value=1e-3, max_value=8.0),
    )
    @settings(max_examples=100)
    def test_positive_root_satisfies_quartic(self, a, tau):
        om = omega_of_tau(a, tau)
        assert math.isfinite(om) and om >= 0.0
        if om > 0.0:
            sv = math.sqrt(math.pi) * tau * math.exp(-tau * tau)
            from esdispersion import l_func

            lv = l_func(tau)
            s0 = sv * sv - lv * lv
            s1 = s0 * (1.0 - a * tau * tau) ** 2 - 1.0
            assert abs(om**4 - om * om * s1 - s0) < 1e-10 * max(1.0, om**4)

    def test_no_nan_on_compact_interval(self):
        values = [omega_of_tau(0.7, t) for t in np.linspace(0.01, 6.0, 300)]
        assert all(math.isfinite(v) for v in values)

    @pytest.mark.parametrize("a, tau", [(-0.1, 1.0), (1.1, 1.0), (0.5, 0.0), (0.5, -1.0)])
    def test_rejects_out_of_domain(self, a, tau):
        with pytest.raises(DomainError):
            omega_of_tau(a, tau)


class TestCriticalFrequency:
    @pytest.mark.parametrize("a", sorted(CRITICAL))
    def test_frozen_critical_points(self, a):
        cp = critical_point(a)
        star, tau_star = CRITICAL[a]
        assert cp.omega_star == pytest.approx(star, abs=1e-9)
        assert cp.tau_star == pytest.approx(tau_star, abs=1e-6)

    @pytest.mark.parametrize(
        "a, table, tol",
        [(0.0, 0.733, 1e-3), (0.5, 0.672, 2e-3), (1.0, 0.637, 1e-3)],
    )
    def test_matches_tabulated_values(self, a, table, tol):
        assert critical_frequency(a) == pytest.approx(table, abs=tol)

    def test_argmax_is_interior(self):
        for a in A_GRID:
            cp = critical_point(a)
            assert 0.0 < cp.tau_star < 4.0
            assert cp.omega_star == omega_of_tau(a, cp.tau_star)

    def test_monotone_non_increasing_in_a(self):
        stars = [critical_frequency(a) for a in A_GRID]
        for lo, hi in zip(stars[1:], stars[:-1]):
            assert lo <= hi + 2e-3

    def test_rejects_out_of_domain(self):
        with pytest.raises(DomainError):
            critical_frequency(1.5)


class TestIndex:
    def test_subcritical_example(self):
        rep = index(FlowParams(0.1, 1.0))
        assert rep.kappa == 1
        assert rep.zero_count == 2
        assert rep.eta0 is not None
        assert rep.eta0.real > 0.0
        assert rep.omega_star == pytest.approx(CRITICAL[1.0][0], abs=1e-9)

    def test_supercritical_example(self):
        rep = index(FlowParams(1.0, 1.0))
        assert rep.kappa == 0
        assert rep.zero_count == 0
        assert rep.eta0 is None

    def test_threshold_sides_across_a_grid(self):
        for a in A_GRID:
            star = critical_frequency(a)
            below, _ = resolve_kappa(FlowParams(star - 0.05, a))
            above, _ = resolve_kappa(FlowParams(star + 0.05, a))
            assert below == 1, f"a={a}"
            assert above == 0, f"a={a}"

    def test_nominal_critical_frequency_is_declared_ambiguous(self):
        # 0.637 sits in the band where winding and threshold disagree
        with pytest.raises(ThresholdAmbiguousError):
            index(FlowParams(0.637, 1.0))

    def test_margin_band_raises_base_type(self):
        om = CRITICAL[1.0][0] + 5e-5
        with pytest.raises(ThresholdAmbiguousError) as excinfo:
            resolve_kappa(FlowParams(om, 1.0))
        assert type(excinfo.value) is ThresholdAmbiguousError

    @pytest.mark.parametrize("omega, a", [(0.66, 1.0), (0.72, 0.0)])
    def test_dissent_band_raises_mismatch(self, omega, a):
        with pytest.raises(IndexMismatchError):
            resolve_kappa(FlowParams(omega, a))

    def test_dissent_band_winding_sides(self):
        # the two bands have opposite orientation: at a=1 the winding
        # transition sits above omega_star, at a=0 below it
        assert kappa_winding(FlowParams(0.66, 1.0)) == 1
        assert kappa_winding(FlowParams(0.72, 0.0)) == 0

    def test_rejects_zero_frequency(self):
        with pytest.raises(DomainError):
            index(FlowParams(0.0, 1.0))


class TestSpectrumReport:
    def test_consistent_report_passes(self):
        rep = SpectrumReport(
            omega=0.3, a=1.0, kappa=1, zero_count=2, omega_star=0.6366, eta0=1.0 + 0.5j
        )
        assert rep.zero_count == 2 * rep.kappa

    def test_rejects_wrong_zero_count(self):
        with pytest.raises(DomainError):
            SpectrumReport(
                omega=0.3, a=1.0, kappa=1, zero_count=1, omega_star=0.6366, eta0=1j
            )

    def test_rejects_inconsistent_eta0_presence(self):
        with pytest.raises(DomainError):
            SpectrumReport(
                omega=0.3, a=1.0, kappa=0, zero_count=0, omega_star=0.6366, eta0=1j
            )
        with pytest.raises(DomainError):
            SpectrumReport(
                omega=0.3, a=1.0, kappa=1, zero_count=2, omega_star=0.6366, eta0=None
            )
