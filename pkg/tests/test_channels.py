import math

import numpy as np
import pytest

import oracles
from holoqi import DomainError
from holoqi.channels import (
    ChannelSpec,
    DiamondBounds,
    covariance_out,
    diamond_bounds_at_radius,
    diamond_lower_bound,
    diamond_upper_bound,
    diamond_upper_expansion,
    leading_lower_asymptote,
    leading_upper_asymptote,
    vacuum_output_fidelity,
    xi_min,
)
from holoqi.cv_core import GaussianState, added_noise

XI_R1 = 0.027759131996365652


class TestChannelSpec:
    def test_parameter_sets(self):
        ChannelSpec.pure_loss(0.3)
        ChannelSpec.additive_noise(0.1)
        ChannelSpec.composed(0.3, 0.1)
        with pytest.raises(DomainError):
            ChannelSpec("pure_loss", eta=0.3, xi=0.1)
        with pytest.raises(DomainError):
            ChannelSpec("composed", eta=0.3)
        with pytest.raises(DomainError):
            ChannelSpec.pure_loss(1.5)


class TestCovarianceOut:
    def test_loss_fixes_vacuum(self):
        out = covariance_out(ChannelSpec.pure_loss(0.37), GaussianState.vacuum())
        assert np.allclose(out.cov, 0.5 * np.eye(2))

    def test_noise_on_vacuum(self):
        out = covariance_out(ChannelSpec.additive_noise(0.2), GaussianState.vacuum())
        assert np.allclose(out.cov, 0.7 * np.eye(2))

    def test_composed_on_vacuum(self):
        eta, xi = 0.5, 0.3
        out = covariance_out(ChannelSpec.composed(eta, xi), GaussianState.vacuum())
        assert np.allclose(out.cov, (eta * xi + 0.5) * np.eye(2))

    def test_means_and_correlations_scale(self):
        s = GaussianState(np.array([1.0, -2.0, 0.0, 0.0]), GaussianState.tmsv(2.0).cov)
        out = covariance_out(ChannelSpec.pure_loss(0.25), s, mode=0)
        assert np.allclose(out.mean, [0.5, -1.0, 0.0, 0.0])
        assert out.cov[0, 2] == pytest.approx(0.5 * s.cov[0, 2])
        assert out.cov[2, 2] == s.cov[2, 2]

    def test_bad_mode(self):
        with pytest.raises(DomainError):
            covariance_out(ChannelSpec.pure_loss(0.5), GaussianState.vacuum(), mode=1)


class TestVacuumOutput:
    def test_values(self):
        assert vacuum_output_fidelity(0.3, 0.0) == 1.0
        assert vacuum_output_fidelity(1.0, 1.0) == 0.5
        f = vacuum_output_fidelity(0.5, 0.027760)
        assert f == pytest.approx(0.98631001696453229, rel=1e-14)
        assert 2 * (1 - f) == pytest.approx(0.0273791, abs=1e-6)


class TestLowerBound:
    def test_planck_radius(self):
        assert diamond_lower_bound(0.5, XI_R1) == pytest.approx(0.0273791, abs=5e-7)

    def test_zero_noise(self):
        assert diamond_lower_bound(0.5, 0.0) == 0.0

    def test_identity_with_vacuum_fidelity(self):
        for eta, xi in [(0.1, 1e-3), (0.5, 0.5), (0.99, 1.0), (1.0, 0.2)]:
            assert diamond_lower_bound(eta, xi) == pytest.approx(2 * (1 - vacuum_output_fidelity(eta, xi)), abs=1e-14)


class TestUpperBound:
    def test_value(self):
        assert diamond_upper_bound(0.5, 0.027760) == pytest.approx(float(oracles.delta(0.5, "0.027760")), rel=1e-13)
        assert diamond_upper_bound(0.5, XI_R1) == pytest.approx(0.3286905851128279, rel=1e-13)

    def test_zero_noise(self):
        assert diamond_upper_bound(0.5, 0.0) == 0.0

    def test_expansion(self):
        mu = 1e6
        assert diamond_upper_bound(0.5, added_noise(mu)) == pytest.approx(diamond_upper_expansion(0.5, mu), rel=1e-5)

    def test_eta_one_excluded(self):
        with pytest.raises(DomainError):
            diamond_upper_bound(1.0, 0.1)
        assert diamond_lower_bound(1.0, 0.1) > 0


def test_ordering_on_grid():
    etas = np.linspace(0.001, 0.999, 100)
    xis = np.geomspace(1e-8, 1.0, 100)
    for eta in etas:
        for xi in xis:
            lo, up = diamond_lower_bound(eta, xi), diamond_upper_bound(eta, xi)
            assert 0 <= lo <= up <= 2


def test_monotone_in_xi_and_eta():
    xis = np.geomspace(1e-6, 1, 50)
    etas = np.linspace(0.05, 0.95, 50)
    for f in (diamond_lower_bound, diamond_upper_bound):
        v = [f(0.4, x) for x in xis]
        assert all(a < b for a, b in zip(v, v[1:]))
        v = [f(e, 0.1) for e in etas]
        assert all(a < b for a, b in zip(v, v[1:]))


class TestBoundsAtRadius:
    def test_planck_radius(self):
        b = diamond_bounds_at_radius(0.5, 1.0)
        assert b.lower == pytest.approx(0.0273791, abs=5e-7)
        assert b.upper == pytest.approx(0.3286905851128279, rel=1e-12)
        assert not b.asymptotic_branch

    def test_exact_vs_asymptotic_branch(self):
        exact = diamond_bounds_at_radius(0.5, 10.0)
        approx = diamond_bounds_at_radius(0.5, 10.0, force_asymptotic=True)
        assert approx.asymptotic_branch
        assert math.exp(approx.ln_lower - exact.ln_lower) == pytest.approx(1.0, rel=1e-4)
        assert math.exp(approx.ln_upper - exact.ln_upper) == pytest.approx(1.0, rel=1e-4)

    @pytest.mark.parametrize("rp", [1, 2, 5, 10, 20])
    def test_lower_positive(self, rp):
        b = diamond_bounds_at_radius(0.5, rp)
        assert math.isfinite(b.ln_lower)
        assert b.ln_lower <= b.ln_upper

    @pytest.mark.parametrize("rp", [5.0, 10.0])
    def test_exact_large_radius_limit(self, rp):
        # mu_max = e^(pi R^2 - 1) + 1/2 gives lower -> (e eta / 2) e^(-pi R^2)
        eta = 0.5
        b = diamond_bounds_at_radius(eta, rp)
        assert b.ln_lower + math.pi * rp**2 == pytest.approx(math.log(math.e * eta / 2), abs=1e-10)
        assert b.ln_upper + 0.5 * math.pi * rp**2 == pytest.approx(
            0.5 + 0.5 * math.log(eta / (1 - eta)), abs=1e-10
        )

    @pytest.mark.xfail(strict=True, reason="leading forms drop e (lower) and sqrt(e) (upper); see notes")
    @pytest.mark.parametrize("rp", [5.0, 10.0])
    def test_printed_leading_forms(self, rp):
        b = diamond_bounds_at_radius(0.5, rp)
        assert abs(b.ln_lower - leading_lower_asymptote(0.5, rp).ln) <= 1e-3 * abs(b.ln_lower)
        assert abs(b.ln_upper - leading_upper_asymptote(0.5, rp).ln) <= 1e-3 * abs(b.ln_upper)

    def test_printed_leading_forms_offset(self):
        # the gap is exactly one nat (lower) and half a nat (upper) in the limit
        b = diamond_bounds_at_radius(0.3, 12.0)
        assert b.ln_lower - leading_lower_asymptote(0.3, 12.0).ln == pytest.approx(1.0, abs=1e-12)
        assert b.ln_upper - leading_upper_asymptote(0.3, 12.0).ln == pytest.approx(0.5, abs=1e-12)

    def test_xi_min_log(self):
        assert xi_min(1.0).linear() == pytest.approx(XI_R1, rel=1e-14)
        assert xi_min(1e35).ln == pytest.approx(-math.pi * 1e70, rel=1e-15)

    def test_invalid_record(self):
        with pytest.raises(DomainError):
            DiamondBounds(0.5, 0.1, 0.1, False, 0, 0, 0)
