"""Printed reference values and how closely each must be reproduced.

Precision rules:

* ``sig_figs``: t significant digits in the usual numerical-analysis sense,
  relative error |computed - printed| / |computed| <= 5 * 10^-t.
* ``abs_tol``: absolute deviation bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .channels import diamond_lower_bound, xi_min
from .cv_core import max_fidelity_at_radius
from .holo_bounds import min_energy_distance_product, min_mass_distance_product
from .units import codata_constants


@dataclass(frozen=True)
class GoldenValue:
    name: str
    unit: str
    printed: float
    compute: Callable[[], float]
    sig_figs: int | None = None
    abs_tol: float | None = None

    @property
    def tolerance_text(self) -> str:
        if self.sig_figs is not None:
            return f"{self.sig_figs} s.f. (rel <= {5 * 10.0 ** -self.sig_figs:g})"
        return f"abs <= {self.abs_tol:g}"

    def check(self) -> dict:
        value = self.compute()
        delta = abs(value - self.printed)
        if self.sig_figs is not None:
            ok = delta / abs(value) <= 5 * 10.0 ** -self.sig_figs
        else:
            ok = delta <= self.abs_tol
        return {
            "name": self.name,
            "unit": self.unit,
            "printed": self.printed,
            "computed": value,
            "abs_delta": delta,
            "tolerance": self.tolerance_text,
            "pass": bool(ok),
        }


def _lower_at_r1() -> float:
    return diamond_lower_bound(0.5, math.exp(xi_min(1.0).ln))


GOLDEN: tuple[GoldenValue, ...] = (
    GoldenValue("energy_distance_constant", "J m", 6.97e-27,
                lambda: min_energy_distance_product(1.0), sig_figs=3),
    GoldenValue("mass_distance_constant", "m kg/s", 7.77e-44,
                lambda: min_mass_distance_product(1.0), sig_figs=3),
    GoldenValue("planck_length", "m", 1.6e-35,
                lambda: codata_constants().l_planck, sig_figs=2),
    GoldenValue("planck_mass", "ug", 21.76,
                lambda: codata_constants().m_planck * 1e9, sig_figs=4),
    GoldenValue("max_fidelity_rp1", "", 0.986403,
                lambda: max_fidelity_at_radius(1.0, 0.5), abs_tol=5e-6),
    GoldenValue("diamond_lower_eta0.5_rp1", "", 0.0273791, _lower_at_r1, abs_tol=5e-7),
)


def reproduce() -> list[dict]:
    return [g.check() for g in GOLDEN]


def golden_names() -> list[str]:
    return [g.name for g in GOLDEN]
