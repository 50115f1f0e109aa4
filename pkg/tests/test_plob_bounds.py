import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from holoqi import DomainError, FannesPreconditionError, VacuousBoundError
from holoqi.channels import diamond_upper_bound, xi_min
from holoqi.plob_bounds import (
    ProtocolParams,
    binary_entropy,
    build_report,
    eps_tilde_min,
    modified_plob,
    plob_capacity,
    rate_bound_from_eps_tilde,
    rate_bound_general,
    rate_cap_spherical,
)


def params(n=1, eps=0.0, eta=0.5, rp=1.0):
    return ProtocolParams(n, eps, eta, rp)


class TestParams:
    @pytest.mark.parametrize("kw", [dict(n=0), dict(n=1.5), dict(eps=1.0), dict(eps=-0.1),
                                    dict(eta=0.0), dict(eta=1.0), dict(rp=0.0)])
    def test_rejects(self, kw):
        with pytest.raises(DomainError):
            params(**kw)


class TestEntropies:
    def test_binary_entropy(self):
        assert binary_entropy(0) == 0.0
        assert binary_entropy(1) == 0.0
        assert binary_entropy(0.5) == 1.0
        assert binary_entropy(0.11) == pytest.approx(0.499915958164528, rel=1e-13)
        assert binary_entropy(0.11) == pytest.approx(0.49993, abs=5e-5)
        with pytest.raises(DomainError):
            binary_entropy(1.1)

    @given(st.floats(0.5, 1))
    def test_binary_entropy_symmetric(self, q):
        # 1 - q is exact for q in [1/2, 1]
        assert binary_entropy(q) == pytest.approx(binary_entropy(1 - q), rel=1e-13, abs=1e-300)

    def test_plob(self):
        assert plob_capacity(0.5) == 1.0
        assert plob_capacity(0.0) == 0.0
        assert plob_capacity(0.9) == pytest.approx(3.3219280948873623, rel=1e-15)
        assert plob_capacity(1e-12) == pytest.approx(1e-12 / math.log(2), rel=1e-9)
        with pytest.raises(DomainError):
            plob_capacity(1.0)


class TestSphericalCap:
    def test_values(self):
        assert rate_cap_spherical(params()) == pytest.approx(4.5323601418271938, rel=1e-15)
        assert rate_cap_spherical(params(n=10)) == pytest.approx(0.45323601418271938, rel=1e-15)


class TestEpsTilde:
    def test_r1_equals_delta(self):
        assert eps_tilde_min(params()) == pytest.approx(0.3286905851128279, rel=1e-12)

    def test_composition(self):
        p = params(n=2, eps=0.01, rp=3.0)
        direct = 0.01 + 2 * diamond_upper_bound(0.5, xi_min(3.0).linear())
        assert eps_tilde_min(p) == pytest.approx(direct, rel=1e-14)
        assert eps_tilde_min(p) == pytest.approx(0.010002390471907692, rel=1e-12)

    def test_large_radius_limit(self):
        assert eps_tilde_min(params(eps=0.03, rp=50.0)) == 0.03
        assert eps_tilde_min(params(rp=1e35)) == 0.0


class TestGeneralBound:
    def test_zero_eps_tilde(self):
        assert rate_bound_from_eps_tilde(0.0, 0.7, 3) == 0.7

    def test_r2_value(self):
        rate, et = oracles.general_rate(0, 1, 0.5, 2, 1)
        assert eps_tilde_min(params(rp=2.0)) == pytest.approx(float(et), rel=1e-12)
        assert rate_bound_general(params(rp=2.0), er_choi=1.0) == pytest.approx(float(rate), rel=1e-12)
        assert float(rate) == pytest.approx(1.0870211041305486, rel=1e-15)

    def test_vacuous_denominator(self):
        with pytest.raises(VacuousBoundError) as exc:
            rate_bound_from_eps_tilde(0.2, 1.0, 1)
        assert exc.value.kind == "vacuous_bound"

    def test_fannes_precondition(self):
        with pytest.raises(FannesPreconditionError) as exc:
            rate_bound_from_eps_tilde(0.6, 1.0, 1)
        assert exc.value.kind == "fannes_precondition"

    def test_errors_distinct(self):
        assert not issubclass(FannesPreconditionError, VacuousBoundError)
        assert not issubclass(VacuousBoundError, FannesPreconditionError)

    def test_edge_denominator_zero(self):
        with pytest.raises(VacuousBoundError):
            rate_bound_from_eps_tilde(0.125, 1.0, 1)

    @given(st.floats(0, 0.124), st.floats(0, 10), st.integers(1, 1000))
    def test_never_negative(self, et, er, n):
        assert rate_bound_from_eps_tilde(et, er, n) >= er

    def test_default_er_is_plob(self):
        p = params(rp=3.0, eta=0.7)
        assert rate_bound_general(p) == rate_bound_general(p, er_choi=plob_capacity(0.7))


class TestModifiedPlob:
    def test_r1_value(self):
        assert modified_plob(params()) == pytest.approx(1 + 8 * math.exp(-math.pi / 2), rel=1e-15)
        assert modified_plob(params()) == pytest.approx(2.6630366108060953, rel=1e-14)

    def test_r10_equals_plob(self):
        assert abs(modified_plob(params(rp=10.0)) - 1.0) <= 1e-15

    def test_huge_radius(self):
        assert modified_plob(params(rp=1e35, eta=0.3)) == plob_capacity(0.3)

    def test_monotone(self):
        rps = np.linspace(0.5, 8, 60)
        v = [modified_plob(params(rp=r)) for r in rps]
        assert all(a >= b for a, b in zip(v, v[1:]))
        assert v[-1] == pytest.approx(1.0, rel=1e-12)
        vn = [modified_plob(params(n=n)) for n in range(1, 20)]
        assert all(a < b for a, b in zip(vn, vn[1:]))
        ve = [modified_plob(params(eps=e)) for e in np.linspace(0, 0.5, 20)]
        assert all(a < b for a, b in zip(ve, ve[1:]))

    @settings(max_examples=300)
    @given(st.integers(1, 10**6), st.floats(0, 0.99), st.floats(0.01, 0.99), st.floats(0.1, 1e3))
    def test_at_least_plob(self, n, eps, eta, rp):
        assert modified_plob(ProtocolParams(n, eps, eta, rp)) >= plob_capacity(eta)

    def test_cap_dominance_macroscopic(self):
        p = params(n=10**9, eps=0.01, rp=1e35)
        assert rate_cap_spherical(p) / modified_plob(p) > 1e50


GRID = [(n, eps, eta, rp) for n in (1, 3) for eps in (0.0, 1e-4, 1e-3, 1e-2)
        for eta in (0.2, 0.5, 0.8) for rp in (2.5, 3.0, 4.0, 5.0)]


def _valid_pairs():
    for n, eps, eta, rp in GRID:
        p = ProtocolParams(n, eps, eta, rp)
        et = eps_tilde_min(p)
        if 0 < et < 0.05:
            yield p, et, rate_bound_general(p) - modified_plob(p)


@pytest.mark.xfail(strict=True, reason="the 2 H2(eps~)/N term is O(eps~ log 1/eps~); see notes")
def test_general_vs_modified_second_order():
    # literal statement: |general - modified| <= C eps~^2 with C bounded over the grid
    ratios = [abs(d) / et**2 for _, et, d in _valid_pairs()]
    assert max(ratios) < 1e4


def test_general_vs_modified_error_structure():
    # first-order gap = dropped Fannes term + exact delta minus its leading asymptote;
    # what remains is second order
    for p, et, d in _valid_pairs():
        plob = plob_capacity(p.eta)
        h = binary_entropy(et) / p.n_uses_N
        delta_lead = math.sqrt(p.eta / (1 - p.eta)) * math.exp(-0.5 * math.pi * p.radius_planck**2)
        first = 2 * h + 8 * plob * (et - p.epsilon - p.n_uses_N * delta_lead)
        rounding = 1e-14 * (plob + 1)  # d subtracts two O(plob) numbers
        assert abs(d - first) <= 100 * et * (et + h) * (plob + 1) + rounding
        if first > 1e-12:
            assert abs(d) > 0.5 * first


class TestReport:
    def test_r1(self):
        r = build_report(params())
        assert r.plob_classic == 1.0
        assert r.rate_modified_plob == pytest.approx(2.6630, abs=5e-5)
        assert r.rate_spherical_cap == pytest.approx(4.5324, abs=5e-5)
        assert r.rate_general is None
        assert r.errors["rate_general"]["error"] == "vacuous_bound"
        assert r.flags["er_leading_order"]

    def test_fannes_error_recorded(self):
        r = build_report(params(n=3))
        assert r.errors["rate_general"]["error"] == "fannes_precondition"

    def test_valid_report(self):
        r = build_report(params(rp=3.0))
        assert r.errors == {}
        assert r.rate_general >= r.plob_classic
        assert r.rate_modified_plob >= r.plob_classic

    def test_low_transmissivity(self):
        r = build_report(params(eta=1e-9, rp=3.0))
        assert r.plob_classic < 1e-8
        assert r.rate_modified_plob < 1e-8
        assert r.rate_general < 1e-4
        assert r.rate_spherical_cap > 1

    def test_huge_radius(self):
        r = build_report(params(rp=1e35))
        assert r.rate_modified_plob == r.plob_classic
        assert r.xi_min == 0.0 and r.ln_xi_min < -1e70
        assert r.to_dict()["ln_xi_min"] == r.ln_xi_min
