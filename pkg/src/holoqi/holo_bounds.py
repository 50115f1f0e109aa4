"""Qubit-count, distance, energy and mass limits for the double-sphere setup.

Alice and Bob sit in spheres of radius R whose centres are a distance
D >= 2R apart, sharing n ebits. Entropy of each local system is taken as
k n ln 2. All inputs are SI unless the argument name says ``planck``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConsistencyError, DomainError
from .units import LN2, PhysicalConstants, codata_constants

__all__ = [
    "HoloScenario",
    "CriticalPoint",
    "bekenstein_max_qubits",
    "min_energy_distance_product",
    "min_mass_distance_product",
    "spherical_max_qubits",
    "spherical_min_distance",
    "thooft_limits",
    "schwarzschild_radius",
    "bh_entropy_over_k",
    "bh_entropy_over_k_from_mass",
    "critical_point",
]


def _positive(name: str, x: float) -> float:
    if not x > 0:
        raise DomainError(f"{name} must be positive, got {x!r}")
    return float(x)


def _nonneg(name: str, x: float) -> float:
    if not x >= 0:
        raise DomainError(f"{name} must be non-negative, got {x!r}")
    return float(x)


@dataclass(frozen=True)
class HoloScenario:
    n_qubits: float
    radius_R: float
    distance_D: float
    local_energy_E: float | None = None
    local_mass_M: float | None = None

    def __post_init__(self):
        _positive("n_qubits", self.n_qubits)
        _positive("radius_R", self.radius_R)
        _positive("distance_D", self.distance_D)
        for name in ("local_energy_E", "local_mass_M"):
            v = getattr(self, name)
            if v is not None:
                _positive(name, v)
        if self.distance_D < 2 * self.radius_R:
            raise DomainError("distance_D must be at least 2 * radius_R")

    def energy(self) -> float:
        if self.local_energy_E is None:
            raise DomainError("scenario has no local energy")
        return self.local_energy_E

    def mass(self) -> float:
        if self.local_mass_M is None:
            raise DomainError("scenario has no local mass")
        return self.local_mass_M

    def satisfies_bekenstein(self, consts: PhysicalConstants | None = None) -> bool:
        return self.n_qubits <= bekenstein_max_qubits(self.radius_R, self.energy(), consts)

    def satisfies_spherical(self, consts: PhysicalConstants | None = None) -> bool:
        consts = consts or codata_constants()
        return self.n_qubits <= spherical_max_qubits(self.radius_R / consts.l_planck)


@dataclass(frozen=True)
class CriticalPoint:
    """Mass and separation at which the two local systems become tangent black holes."""

    mass_over_planck: float
    d_min_over_planck: float
    schwarzschild_radius: float


def bekenstein_max_qubits(
    radius_R: float, energy_E: float, consts: PhysicalConstants | None = None
) -> float:
    """Largest n with k n ln2 <= 2 pi k R E / (hbar c)."""
    _positive("radius_R", radius_R)
    _nonneg("energy_E", energy_E)
    consts = consts or codata_constants()
    return 2.0 * math.pi * radius_R * energy_E / (consts.hbar * consts.c * LN2)


def min_energy_distance_product(n_qubits: float, consts: PhysicalConstants | None = None) -> float:
    """Smallest D*E [J m] allowing n ebits across distance D."""
    _nonneg("n_qubits", n_qubits)
    consts = consts or codata_constants()
    return consts.hbar * consts.c * LN2 / math.pi * n_qubits


def min_mass_distance_product(n_qubits: float, consts: PhysicalConstants | None = None) -> float:
    """Smallest D*M [m kg] for massive qubits at rest (E = M c^2)."""
    _nonneg("n_qubits", n_qubits)
    consts = consts or codata_constants()
    return consts.hbar * LN2 / (math.pi * consts.c) * n_qubits


def spherical_max_qubits(radius_planck: float) -> float:
    """(pi/ln2) R_p^2, the qubit count saturating the spherical entropy bound."""
    _positive("radius_planck", radius_planck)
    return math.pi / LN2 * radius_planck**2


def spherical_min_distance(n_qubits: float) -> float:
    """Minimum D / l_p for n qubits, sqrt(4 ln2 n / pi)."""
    _nonneg("n_qubits", n_qubits)
    return math.sqrt(4.0 * LN2 * n_qubits / math.pi)


def thooft_limits(radius_planck: float, n_qubits: float) -> tuple[float, float]:
    """Scaling-law limits from the 't Hooft bound, prefactor taken as 1.

    Returns:
        (n_max, d_min_planck) = (R_p^{3/2}, n^{2/3}).
    """
    _positive("radius_planck", radius_planck)
    _positive("n_qubits", n_qubits)
    return radius_planck**1.5, n_qubits ** (2.0 / 3.0)


def schwarzschild_radius(mass_M: float, consts: PhysicalConstants | None = None) -> float:
    _positive("mass_M", mass_M)
    consts = consts or codata_constants()
    return 2.0 * consts.G * mass_M / consts.c**2


def bh_entropy_over_k(schwarzschild_radius: float, consts: PhysicalConstants | None = None) -> float:
    """Bekenstein-Hawking entropy S/k = pi (R_S / l_p)^2."""
    _positive("schwarzschild_radius", schwarzschild_radius)
    consts = consts or codata_constants()
    return math.pi * (schwarzschild_radius / consts.l_planck) ** 2


def bh_entropy_over_k_from_mass(
    schwarzschild_radius: float, consts: PhysicalConstants | None = None
) -> float:
    """Same entropy through 2 pi c R_S M / hbar, with M = c^2 R_S / (2G)."""
    _positive("schwarzschild_radius", schwarzschild_radius)
    consts = consts or codata_constants()
    mass = consts.c**2 * schwarzschild_radius / (2.0 * consts.G)
    return 2.0 * math.pi * consts.c * schwarzschild_radius * mass / consts.hbar


def critical_point(n_qubits: float, consts: PhysicalConstants | None = None) -> CriticalPoint:
    """Point where D_min M = n hbar ln2 / (pi c) meets D_min = 2 R_S."""
    _positive("n_qubits", n_qubits)
    consts = consts or codata_constants()
    m_ratio = math.sqrt(n_qubits * LN2 / (4.0 * math.pi))
    d_min = math.sqrt(4.0 * n_qubits * LN2 / math.pi)
    r_s = schwarzschild_radius(m_ratio * consts.m_planck, consts)
    # tangent horizons must reproduce the spherical minimum distance
    if not math.isclose(d_min, spherical_min_distance(n_qubits), rel_tol=1e-12):
        raise ConsistencyError("critical distance does not saturate the spherical bound")
    return CriticalPoint(m_ratio, d_min, r_s)
