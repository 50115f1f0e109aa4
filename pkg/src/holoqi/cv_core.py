"""Gaussian-state primitives and the finite-radius CV ceilings.

Convention: hbar = 1, vacuum quadrature variance 1/2. A two-mode squeezed
vacuum (TMSV) of variance ``mu`` has ``mu - 1/2`` mean photons per mode.

The CV teleportation channel with a TMSV(mu) resource acts as additive
Gaussian noise of variance ``xi = 2 mu - sqrt(4 mu^2 - 1)``. Because
``xi + 1/xi = 4 mu``, the teleportation fidelity bracket

    1 - 4 mt [sqrt(4 mu^2 - 1) + mt - 2 mu (1 + 2 mt xi)]

collapses to ``(1 + 2 mt xi)^2``, which is what :func:`tele_fidelity`
evaluates. The expanded form is kept in :func:`fidelity_bracket` for
cross-checking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, DomainError
from .units import LN2, LogScalar

__all__ = [
    "GaussianState",
    "CvCeiling",
    "ASYMPTOTIC_EXPONENT",
    "thermal_entropy_bits",
    "max_mean_photons",
    "mu_max",
    "cv_ceiling",
    "added_noise",
    "log_added_noise",
    "fidelity_bracket",
    "tele_fidelity",
    "tele_infidelity",
    "max_fidelity_at_radius",
    "max_infidelity_at_radius",
    "symplectic_eigenvalues",
]

# above this exponent (pi R_p^2) mu_max is handled in log form only
ASYMPTOTIC_EXPONENT = 690.0


def symplectic_form(n_modes: int) -> np.ndarray:
    return np.kron(np.eye(n_modes), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def symplectic_eigenvalues(cov: np.ndarray) -> np.ndarray:
    n = cov.shape[0] // 2
    ev = np.linalg.eigvals(1j * symplectic_form(n) @ cov)
    return np.sort(np.abs(ev.real))[::2]


@dataclass(frozen=True, eq=False)
class GaussianState:
    """Gaussian state of one or two modes in (q1, p1, q2, p2) ordering."""

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.asarray(self.mean, dtype=float)
        cov = np.asarray(self.cov, dtype=float)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)
        n = mean.shape[0] // 2
        if n not in (1, 2) or mean.shape != (2 * n,) or cov.shape != (2 * n, 2 * n):
            raise DomainError("need 1 or 2 modes with matching mean and covariance shapes")
        if not np.allclose(cov, cov.T, atol=1e-12, rtol=0):
            raise DomainError("covariance matrix is not symmetric")
        if symplectic_eigenvalues(cov).min() < 0.5 - 1e-9:
            raise DomainError("covariance violates the uncertainty principle")

    @property
    def n_modes(self) -> int:
        return self.mean.shape[0] // 2

    @classmethod
    def vacuum(cls, n_modes: int = 1) -> GaussianState:
        return cls(np.zeros(2 * n_modes), 0.5 * np.eye(2 * n_modes))

    @classmethod
    def thermal(cls, nbar: float) -> GaussianState:
        if nbar < 0:
            raise DomainError("nbar must be non-negative")
        return cls(np.zeros(2), (nbar + 0.5) * np.eye(2))

    @classmethod
    def tmsv(cls, mu: float) -> GaussianState:
        if mu < 0.5:
            raise DomainError("TMSV variance must be at least 1/2")
        c = math.sqrt(mu * mu - 0.25)
        z = np.diag([1.0, -1.0])
        cov = np.block([[mu * np.eye(2), c * z], [c * z, mu * np.eye(2)]])
        return cls(np.zeros(4), cov)

    def mode_variance(self, mode: int = 0) -> float:
        """Mean of the q and p variances of one mode."""
        block = self.cov[2 * mode : 2 * mode + 2, 2 * mode : 2 * mode + 2]
        return 0.5 * float(np.trace(block))


@dataclass(frozen=True)
class CvCeiling:
    radius_planck: float
    ln_nbar_max: LogScalar
    ln_mu_max: LogScalar

    @property
    def asymptotic(self) -> bool:
        return self.ln_nbar_max.ln + 1.0 > ASYMPTOTIC_EXPONENT


def thermal_entropy_bits(nbar: float) -> float:
    """Von Neumann entropy h(nbar) of a thermal state, in bits."""
    if not nbar >= 0:
        raise DomainError(f"nbar must be non-negative, got {nbar!r}")
    if nbar == 0:
        return 0.0
    if nbar < 1.0:
        # log(n+1) + n log(1 + 1/n) avoids cancelling two ~n log n terms
        return (math.log1p(nbar) + nbar * math.log1p(1.0 / nbar)) / LN2
    # log2(n) = e + log2(m) exactly split; one rounding at the end
    m, e = math.frexp(nbar)
    return math.fsum((e, math.log2(m), (nbar + 1.0) * math.log1p(1.0 / nbar) / LN2))


def _check_radius(radius_planck: float) -> float:
    if not radius_planck > 0:
        raise DomainError(f"radius_planck must be positive, got {radius_planck!r}")
    return float(radius_planck)


def max_mean_photons(radius_planck: float) -> LogScalar:
    """Photon-number ceiling exp(pi R_p^2 - 1) allowed by the spherical bound."""
    r = _check_radius(radius_planck)
    return LogScalar(math.pi * r * r - 1.0)


def mu_max(radius_planck: float) -> LogScalar:
    """Largest TMSV variance, nbar_max + 1/2, in log form."""
    return max_mean_photons(radius_planck) + 0.5


def cv_ceiling(radius_planck: float) -> CvCeiling:
    return CvCeiling(float(radius_planck), max_mean_photons(radius_planck), mu_max(radius_planck))


def _mu_value(mu: float | LogScalar) -> float | LogScalar:
    if isinstance(mu, LogScalar):
        if mu.ln > ASYMPTOTIC_EXPONENT:
            return mu
        mu = math.exp(mu.ln)
    if not mu >= 0.5:
        raise DomainError(f"mu must be at least 1/2, got {mu!r}")
    return float(mu)


def added_noise(mu: float | LogScalar) -> float:
    """Added noise of CV teleportation with a TMSV(mu) resource.

    Evaluated as 1 / (2 mu + sqrt(4 mu^2 - 1)), free of the cancellation in
    the difference form. May underflow to 0 for log-domain ``mu``; use
    :func:`log_added_noise` there.
    """
    m = _mu_value(mu)
    if isinstance(m, LogScalar):
        return float(log_added_noise(m).linear())
    return 1.0 / _reciprocal_noise(m)


def _reciprocal_noise(m: float) -> float:
    # 2m + sqrt(4m^2 - 1), written so 4m^2 never overflows
    return 2.0 * m * (1.0 + math.sqrt((1.0 - 0.5 / m) * (1.0 + 0.5 / m)))


def log_added_noise(mu: float | LogScalar) -> LogScalar:
    m = _mu_value(mu)
    if isinstance(m, LogScalar):
        # sqrt(4 mu^2 - 1) = 2 mu to double precision here
        return LogScalar(-(m.ln + math.log(4.0)))
    return LogScalar(-(math.log(2.0 * m) + math.log1p(math.sqrt((1.0 - 0.5 / m) * (1.0 + 0.5 / m)))))


def _check_mu_tilde(mu_tilde: float) -> float:
    if not mu_tilde >= 0.5:
        raise DomainError(f"mu_tilde must be at least 1/2, got {mu_tilde!r}")
    return float(mu_tilde)


def fidelity_bracket(mu: float, mu_tilde: float, form: str = "factored") -> float:
    """The quantity whose -1/4 power is the fidelity.

    ``form="printed"`` evaluates the expanded expression term by term; it
    loses all precision once mu exceeds ~1e6 and is kept as an independent
    check of the factored form.
    """
    mt = _check_mu_tilde(mu_tilde)
    m = _mu_value(mu)
    if form == "factored":
        xi = added_noise(m)
        return (1.0 + 2.0 * mt * xi) ** 2
    if form == "printed":
        if isinstance(m, LogScalar):
            raise DomainError("printed form needs a linearly representable mu")
        xi = 2.0 * m - math.sqrt(4.0 * m * m - 1.0)
        return 1.0 - 4.0 * mt * (math.sqrt(4.0 * m * m - 1.0) + mt - 2.0 * m * (1.0 + 2.0 * mt * xi))
    raise ValueError(f"unknown form {form!r}")


def tele_fidelity(mu: float | LogScalar, mu_tilde: float) -> float:
    """Fidelity of teleporting TMSV(mu_tilde) with a TMSV(mu) resource."""
    bracket = fidelity_bracket(mu, mu_tilde)
    if not bracket >= 1.0:
        raise ConsistencyError(f"fidelity bracket {bracket!r} < 1")
    return bracket**-0.25


def tele_infidelity(mu: float | LogScalar, mu_tilde: float) -> LogScalar:
    """1 - F in log form; stays resolvable when F rounds to 1."""
    mt = _check_mu_tilde(mu_tilde)
    ln_xi = log_added_noise(mu).ln
    x = 2.0 * mt * math.exp(ln_xi)  # 2 mt xi, may underflow
    if x > 1e-8:
        return LogScalar(math.log(-math.expm1(-0.5 * math.log1p(x))))
    # 1 - (1+x)^(-1/2) = x/2 - 3x^2/8 + ...
    return LogScalar(math.log(mt) + ln_xi + math.log1p(-0.75 * x))


def max_fidelity_at_radius(radius_planck: float, mu_tilde: float = 0.5) -> float:
    f = tele_fidelity(mu_max(radius_planck), mu_tilde)
    if max_infidelity_at_radius(radius_planck, mu_tilde).ln == -math.inf:
        raise ConsistencyError("fidelity reached 1 at finite radius")
    return f


def max_infidelity_at_radius(radius_planck: float, mu_tilde: float = 0.5) -> LogScalar:
    return tele_infidelity(mu_max(radius_planck), mu_tilde)
