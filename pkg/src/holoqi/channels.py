"""Pure-loss and additive-noise channels and diamond-distance bounds.

The simulated loss channel is ``E_eta o I^mu``: additive noise ``xi`` from
finite-squeezing teleportation followed by a beam splitter of transmissivity
``eta``. Its diamond distance from the ideal ``E_eta`` is bracketed by

    lower = 2 eta xi / (1 + eta xi)           (vacuum probe + Chernoff bound)
    upper = 2 sqrt(eta xi / (eta xi + 1 - eta))

Both are evaluated in log form so that they stay positive (rather than
underflowing to zero) at radii where xi ~ exp(-pi R_p^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .cv_core import ASYMPTOTIC_EXPONENT, GaussianState, log_added_noise, mu_max
from .errors import DomainError
from .units import LogScalar

__all__ = [
    "ChannelKind",
    "ChannelSpec",
    "DiamondBounds",
    "covariance_out",
    "vacuum_output_fidelity",
    "diamond_lower_bound",
    "diamond_upper_bound",
    "diamond_upper_expansion",
    "log_diamond_lower_bound",
    "log_diamond_upper_bound",
    "xi_min",
    "diamond_bounds_at_radius",
    "leading_lower_asymptote",
    "leading_upper_asymptote",
]


class ChannelKind(str, Enum):
    PURE_LOSS = "pure_loss"
    ADDITIVE_NOISE = "additive_noise"
    COMPOSED = "composed"


@dataclass(frozen=True)
class ChannelSpec:
    kind: ChannelKind
    eta: float | None = None
    xi: float | None = None

    def __post_init__(self):
        kind = ChannelKind(self.kind)
        object.__setattr__(self, "kind", kind)
        needs_eta = kind in (ChannelKind.PURE_LOSS, ChannelKind.COMPOSED)
        needs_xi = kind in (ChannelKind.ADDITIVE_NOISE, ChannelKind.COMPOSED)
        if needs_eta != (self.eta is not None) or needs_xi != (self.xi is not None):
            raise DomainError(f"{kind.value} channel has wrong parameter set")
        if needs_eta and not 0 < self.eta <= 1:
            raise DomainError(f"eta must lie in (0, 1], got {self.eta!r}")
        if needs_xi and not self.xi >= 0:
            raise DomainError(f"xi must be non-negative, got {self.xi!r}")

    @classmethod
    def pure_loss(cls, eta: float) -> ChannelSpec:
        return cls(ChannelKind.PURE_LOSS, eta=eta)

    @classmethod
    def additive_noise(cls, xi: float) -> ChannelSpec:
        return cls(ChannelKind.ADDITIVE_NOISE, xi=xi)

    @classmethod
    def composed(cls, eta: float, xi: float) -> ChannelSpec:
        """Loss after additive noise, the teleportation simulation of E_eta."""
        return cls(ChannelKind.COMPOSED, eta=eta, xi=xi)


@dataclass(frozen=True)
class DiamondBounds:
    lower: float
    upper: float
    xi_used: float
    asymptotic_branch: bool
    ln_lower: float
    ln_upper: float
    ln_xi: float

    def __post_init__(self):
        if not 0 <= self.lower <= self.upper <= 2:
            raise DomainError(f"inconsistent bounds {self.lower!r} > {self.upper!r}")


def covariance_out(channel: ChannelSpec, state: GaussianState, mode: int = 0) -> GaussianState:
    """Apply a single-mode Gaussian channel to one mode of ``state``."""
    if not 0 <= mode < state.n_modes:
        raise DomainError(f"mode {mode} out of range for {state.n_modes}-mode state")
    mean = state.mean.copy()
    cov = state.cov.copy()
    sl = slice(2 * mode, 2 * mode + 2)
    if channel.kind in (ChannelKind.ADDITIVE_NOISE, ChannelKind.COMPOSED):
        cov[sl, sl] += channel.xi * np.eye(2)
    if channel.kind in (ChannelKind.PURE_LOSS, ChannelKind.COMPOSED):
        t = math.sqrt(channel.eta)
        scale = np.ones(2 * state.n_modes)
        scale[sl] = t
        cov = cov * np.outer(scale, scale)
        cov[sl, sl] += 0.5 * (1.0 - channel.eta) * np.eye(2)
        mean[sl] *= t
    return GaussianState(mean, cov)


def _check_eta(eta: float, allow_one: bool) -> float:
    ok = 0 < eta <= 1 if allow_one else 0 < eta < 1
    if not ok:
        interval = "(0, 1]" if allow_one else "(0, 1)"
        raise DomainError(f"eta must lie in {interval}, got {eta!r}")
    return float(eta)


def _check_xi(xi: float, strict: bool) -> float:
    if not (xi > 0 if strict else xi >= 0):
        raise DomainError(f"xi must be {'positive' if strict else 'non-negative'}, got {xi!r}")
    return float(xi)


def vacuum_output_fidelity(eta: float, xi: float) -> float:
    """Vacuum population of the thermal output (variance eta xi + 1/2)."""
    _check_eta(eta, allow_one=True)
    _check_xi(xi, strict=False)
    return 1.0 / (1.0 + eta * xi)


def diamond_lower_bound(eta: float, xi: float) -> float:
    _check_eta(eta, allow_one=True)
    _check_xi(xi, strict=False)
    return 2.0 * eta * xi / (1.0 + eta * xi)


def diamond_upper_bound(eta: float, xi: float) -> float:
    _check_eta(eta, allow_one=False)
    _check_xi(xi, strict=False)
    return 2.0 * math.sqrt(eta * xi / (eta * xi + 1.0 - eta))


def diamond_upper_expansion(eta: float, mu: float) -> float:
    """Large-mu form sqrt(eta / ((1 - eta) mu)) of the upper bound."""
    _check_eta(eta, allow_one=False)
    return math.sqrt(eta / ((1.0 - eta) * mu))


def log_diamond_lower_bound(eta: float, ln_xi: float) -> float:
    _check_eta(eta, allow_one=True)
    eta_xi = eta * math.exp(ln_xi)
    return math.log(2.0 * eta) + ln_xi - math.log1p(eta_xi)


def log_diamond_upper_bound(eta: float, ln_xi: float) -> float:
    _check_eta(eta, allow_one=False)
    eta_xi = eta * math.exp(ln_xi)
    return math.log(2.0) + 0.5 * (math.log(eta) + ln_xi - math.log(eta_xi + 1.0 - eta))


def xi_min(radius_planck: float) -> LogScalar:
    """Smallest added noise compatible with the radius, in log form."""
    return log_added_noise(mu_max(radius_planck))


def diamond_bounds_at_radius(
    eta: float, radius_planck: float, force_asymptotic: bool = False
) -> DiamondBounds:
    """Both diamond bounds at the holographic minimum of the added noise.

    When pi R_p^2 exceeds the double range (or ``force_asymptotic``), the
    noise is taken as xi = 1 / (4 mu_max) from the log of mu_max.
    """
    _check_eta(eta, allow_one=False)
    mu = mu_max(radius_planck)
    asymptotic = force_asymptotic or mu.ln > ASYMPTOTIC_EXPONENT
    if asymptotic:
        ln_xi = -(mu.ln + math.log(4.0))
    else:
        ln_xi = log_added_noise(mu).ln
    xi = math.exp(ln_xi)
    ln_lo = log_diamond_lower_bound(eta, ln_xi)
    ln_up = log_diamond_upper_bound(eta, ln_xi)
    if asymptotic:
        lo, up = math.exp(ln_lo), math.exp(ln_up)
    else:
        lo, up = diamond_lower_bound(eta, xi), diamond_upper_bound(eta, xi)
    return DiamondBounds(lo, up, xi, asymptotic, ln_lo, ln_up, ln_xi)


def leading_lower_asymptote(eta: float, radius_planck: float) -> LogScalar:
    """(eta/2) exp(-pi R_p^2), the leading-order lower bound with mu_max ~ exp(pi R_p^2).

    The exact large-R_p limit of the lower bound is e times larger, because
    mu_max = exp(pi R_p^2 - 1) + 1/2.
    """
    return LogScalar(math.log(eta / 2.0) - math.pi * radius_planck**2)


def leading_upper_asymptote(eta: float, radius_planck: float) -> LogScalar:
    """sqrt(eta/(1-eta)) exp(-pi R_p^2 / 2); the exact limit is sqrt(e) times larger."""
    _check_eta(eta, allow_one=False)
    return LogScalar(0.5 * math.log(eta / (1.0 - eta)) - 0.5 * math.pi * radius_planck**2)
