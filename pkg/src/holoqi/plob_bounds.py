"""Rate bounds for entanglement distribution over a pure-loss channel at finite radius.

Three bounds are provided for an (N, R, eps) protocol run by parties of
radius R_p (Planck units):

* the spherical cap R <= pi R_p^2 / (N ln 2);
* the general bound (E_R + 2 H2(eps~) / N) / (1 - 8 eps~), where
  eps~ = eps + N delta and delta is the diamond upper bound at xi_min(R_p);
* its small-eps~ expansion, a PLOB bound inflated by
  (1 + 8 eps + 8 N sqrt(eta/(1-eta)) exp(-pi R_p^2 / 2)).

The relative entropy of entanglement of the quasi-Choi state is used at
leading order, -log2(1 - eta).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

from .channels import log_diamond_upper_bound, xi_min
from .errors import DomainError, FannesPreconditionError, HoloError, VacuousBoundError
from .units import LN2

__all__ = [
    "ProtocolParams",
    "RateBoundReport",
    "binary_entropy",
    "plob_capacity",
    "rate_cap_spherical",
    "eps_tilde_min",
    "rate_bound_from_eps_tilde",
    "rate_bound_general",
    "modified_plob",
    "build_report",
]


@dataclass(frozen=True)
class ProtocolParams:
    n_uses_N: int
    epsilon: float
    eta: float
    radius_planck: float

    def __post_init__(self):
        if int(self.n_uses_N) != self.n_uses_N or self.n_uses_N < 1:
            raise DomainError(f"n_uses_N must be a positive integer, got {self.n_uses_N!r}")
        object.__setattr__(self, "n_uses_N", int(self.n_uses_N))
        if not 0 <= self.epsilon < 1:
            raise DomainError(f"epsilon must lie in [0, 1), got {self.epsilon!r}")
        if not 0 < self.eta < 1:
            raise DomainError(f"eta must lie in (0, 1), got {self.eta!r}")
        if not self.radius_planck > 0:
            raise DomainError(f"radius_planck must be positive, got {self.radius_planck!r}")


@dataclass
class RateBoundReport:
    rate_spherical_cap: float
    rate_general: float | None
    rate_modified_plob: float
    plob_classic: float
    eps_tilde: float
    xi_min: float
    ln_xi_min: float
    errors: dict[str, dict] = field(default_factory=dict)
    flags: dict[str, bool] = field(default_factory=lambda: {"er_leading_order": True})

    def to_dict(self) -> dict:
        return asdict(self)


def binary_entropy(p: float) -> float:
    if not 0 <= p <= 1:
        raise DomainError(f"probability must lie in [0, 1], got {p!r}")
    if p == 0 or p == 1:
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


def plob_capacity(eta: float) -> float:
    """-log2(1 - eta), the two-way capacity of the pure-loss channel."""
    if not 0 <= eta < 1:
        raise DomainError(f"eta must lie in (0, 1), got {eta!r}")
    return -math.log1p(-eta) / LN2


def rate_cap_spherical(params: ProtocolParams) -> float:
    return math.pi * params.radius_planck**2 / (params.n_uses_N * LN2)


def _log_delta(params: ProtocolParams) -> float:
    return log_diamond_upper_bound(params.eta, xi_min(params.radius_planck).ln)


def eps_tilde_min(params: ProtocolParams) -> float:
    """eps + N delta(eta, xi_min(R_p))."""
    return params.epsilon + math.exp(math.log(params.n_uses_N) + _log_delta(params))


def rate_bound_from_eps_tilde(eps_tilde: float, er_choi: float, n_uses: int) -> float:
    """(E_R + 2 H2(eps~) / N) / (1 - 8 eps~), with regime checks.

    Raises:
        FannesPreconditionError: eps~ > 1/2.
        VacuousBoundError: 1 - 8 eps~ <= 0.
    """
    if er_choi < 0:
        raise DomainError("er_choi must be non-negative")
    if not eps_tilde >= 0:
        raise DomainError(f"eps_tilde must be non-negative, got {eps_tilde!r}")
    if eps_tilde > 0.5:
        raise FannesPreconditionError(f"eps_tilde = {eps_tilde!r} exceeds 1/2")
    denom = 1.0 - 8.0 * eps_tilde
    if denom <= 0:
        raise VacuousBoundError(f"1 - 8 eps_tilde = {denom!r} is not positive")
    return (er_choi + 2.0 * binary_entropy(eps_tilde) / n_uses) / denom


def rate_bound_general(params: ProtocolParams, er_choi: float | None = None) -> float:
    if er_choi is None:
        er_choi = plob_capacity(params.eta)
    return rate_bound_from_eps_tilde(eps_tilde_min(params), er_choi, params.n_uses_N)


def modified_plob(params: ProtocolParams) -> float:
    ln_corr = (
        math.log(8.0)
        + math.log(params.n_uses_N)
        + 0.5 * math.log(params.eta / (1.0 - params.eta))
        - 0.5 * math.pi * params.radius_planck**2
    )
    factor = 1.0 + 8.0 * params.epsilon + math.exp(ln_corr)
    return factor * plob_capacity(params.eta)


def build_report(params: ProtocolParams) -> RateBoundReport:
    xi = xi_min(params.radius_planck)
    errors: dict[str, dict] = {}
    try:
        general = rate_bound_general(params)
    except HoloError as exc:
        general = None
        errors["rate_general"] = exc.to_dict()
    return RateBoundReport(
        rate_spherical_cap=rate_cap_spherical(params),
        rate_general=general,
        rate_modified_plob=modified_plob(params),
        plob_classic=plob_capacity(params.eta),
        eps_tilde=eps_tilde_min(params),
        xi_min=math.exp(xi.ln),
        ln_xi_min=xi.ln,
        errors=errors,
    )
